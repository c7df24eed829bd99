// Copyright 2026 The ame332 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ame/suites.h"

#include "gtest/gtest.h"

using namespace ame;

namespace {

io::Json without_timings(io::Json j) {
    for (auto &check : j["checks"]) {
        check.erase("elapsed_ms");
    }
    return j;
}

}  // namespace

TEST(suites, names) {
    const auto &names = suite_names();
    ASSERT_EQ(names.size(), 8u);
    ASSERT_EQ(names.front(), "code332");
    ASSERT_EQ(names.back(), "code442-qubit");
}

TEST(suites, invalid_requests) {
    ASSERT_THROW(run_suite("nope"), std::invalid_argument);
    SuiteOptions bad;
    bad.conductor = 18;
    ASSERT_THROW(run_suite("ame4", bad), std::invalid_argument);
}

TEST(suites, cheap_suites_pass) {
    for (const std::string name : {"code332", "ame4", "correspondence", "invariants", "code442-qubit"}) {
        SuiteReport rep = run_suite(name);
        ASSERT_TRUE(rep.passed()) << to_text(rep);
        ASSERT_EQ(rep.exit_status(), 0);
        ASSERT_FALSE(rep.checks.empty());
    }
}

TEST(suites, larger_conductor) {
    SuiteOptions opts;
    opts.conductor = 24;
    SuiteReport rep = run_suite("ame4", opts);
    ASSERT_TRUE(rep.passed()) << to_text(rep);
    ASSERT_EQ(rep.conductor, 24);
}

TEST(suites, json_is_deterministic) {
    SuiteOptions opts;
    opts.seed = 7;
    io::Json a = without_timings(to_json(run_suite("invariants", opts)));
    io::Json b = without_timings(to_json(run_suite("invariants", opts)));
    ASSERT_EQ(a, b);
    ASSERT_EQ(a["schema"], "ame-report/1");
    ASSERT_EQ(a["seed"], 7);
    ASSERT_EQ(a["status"], "pass");
}

TEST(suites, text_report) {
    std::string text = to_text(run_suite("ame4"));
    ASSERT_NE(text.find("PASS"), std::string::npos);
    ASSERT_EQ(text.find("FAIL"), std::string::npos);
}
