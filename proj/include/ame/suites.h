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

#ifndef AME_SUITES_H
#define AME_SUITES_H

#include <cstdint>
#include <string>
#include <vector>

#include "ame/io.h"

namespace ame {

enum class CheckStatus { kPass, kFail, kSkip };

std::string status_name(CheckStatus status);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::kSkip;
    std::string expected;
    std::string actual;
    double elapsed_ms = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    long conductor = 12;
    std::vector<CheckRecord> checks;

    bool passed() const;
    /// 0 iff no check failed, else 1.
    int exit_status() const;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    /// Conductor for the exact objects; must be a multiple of 12.
    long conductor = 12;
    /// Closure cap override for the group suites; 0 keeps the defaults.
    std::size_t cap = 0;
    /// Criticality tolerance.
    double tol = 1e-8;
    /// Run the suites of "all" concurrently. Report order is unchanged.
    bool parallel = false;
};

/// code332, ame4, correspondence, weyl, local-symmetry, invariants,
/// kempfness, code442-qubit, in that order.
const std::vector<std::string> &suite_names();

/// Runs one named suite, or every suite for "all" (check names are then
/// prefixed with the suite name). Throws std::invalid_argument on an unknown
/// name or invalid options.
SuiteReport run_suite(const std::string &name, const SuiteOptions &options = {});

io::Json to_json(const SuiteReport &report);
std::string to_text(const SuiteReport &report);

}  // namespace ame

#endif
