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

#include "ame/io.h"

#include <filesystem>
#include <fstream>

#include "gtest/gtest.h"

#include "ame/catalog.h"
#include "test_util.h"

using namespace ame;
using ame_test::q;
using ame::io::IngestError;

namespace {

std::string data_path(const std::string &name) {
    return std::string(AME_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string &name) {
    return (std::filesystem::temp_directory_path() / ("ame_io_test_" + name)).string();
}

template <typename Fn>
IngestError ingest_error(Fn fn) {
    try {
        fn();
    } catch (const IngestError &e) {
        return e;
    }
    throw std::runtime_error("expected IngestError");
}

std::vector<LocalOperator> as_vector(const auto &arr) {
    return std::vector<LocalOperator>(arr.begin(), arr.end());
}

}  // namespace

TEST(io, cyclotomic_roundtrip) {
    Cyclotomic x = Cyclotomic::root_of_unity(1, 12) * q(12, -2, 3) + q(12, 5);
    io::Json j = io::to_json(x);
    ASSERT_EQ(j["conductor"], 12);
    ASSERT_EQ(j["coeffs"].size(), 4u);
    ASSERT_EQ(j["coeffs"][0], "5/1");
    ASSERT_EQ(io::cyclotomic_from_json(j), x);
}

TEST(io, shipped_data_matches_catalog) {
    ASSERT_EQ(std::get<PureState>(io::ingest_file(data_path("phi.state")).value), catalog::phi());
    CodeSubspace code = std::get<CodeSubspace>(io::ingest_file(data_path("c332.code")).value);
    ASSERT_EQ(code.basis, catalog::code332().basis);
    ASSERT_EQ(code.claimed_distance, std::optional<std::size_t>(2));
    auto ops = [](const std::string &name) {
        return std::get<std::vector<LocalOperator>>(io::ingest_file(data_path(name)).value);
    };
    ASSERT_EQ(ops("symmetry-generators.ops"), as_vector(catalog::local_symmetry_generators()));
    ASSERT_EQ(ops("coset-reps.ops"), as_vector(catalog::coset_representatives()));
    auto weyl = ops("weyl-generators.ops");
    auto shown = catalog::weyl_generators_displayed();
    ASSERT_EQ(weyl.size(), 3u);
    for (std::size_t i = 0; i < 3; i++) {
        ASSERT_EQ(weyl[i], io::as_operator(shown[i]));
    }
}

TEST(io, write_then_read) {
    std::string path = temp_path("code.json");
    io::write_json(path, io::to_json(catalog::code332()));
    io::Ingested back = io::ingest_file(path);
    ASSERT_EQ(back.kind, io::FileKind::kCode);
    ASSERT_EQ(std::get<CodeSubspace>(back.value).basis, catalog::code332().basis);
    std::filesystem::remove(path);
}

TEST(io, kind_detection) {
    ASSERT_EQ(io::ingest(io::to_json(catalog::phi())).kind, io::FileKind::kState);
    ASSERT_EQ(io::ingest(io::to_json(catalog::stabilizer_generators()[0])).kind, io::FileKind::kOperator);
    ASSERT_EQ(io::ingest(io::to_json(catalog::stabilizer_generators())).kind, io::FileKind::kOps);
    ASSERT_EQ(io::kind_name(io::FileKind::kCode), "code");
    IngestError e = ingest_error([] { io::ingest(io::Json::object()); });
    ASSERT_EQ(e.kind, IngestError::Kind::kParse);
}

TEST(io, operators_are_canonicalized_on_ingest) {
    Cyclotomic w = catalog::omega();
    ExactMatrix x = pauli_x(3, 12);
    io::Json j = io::to_json(LocalOperator(q(12, 1), {x, x}));
    // Move a phase into the first factor by hand.
    for (auto &entry : j["factors"][0]) {
        entry = io::to_json(io::cyclotomic_from_json(entry) * w);
    }
    LocalOperator op = io::operator_from_json(j);
    ASSERT_EQ(op, LocalOperator(w, {x, x}));
    ASSERT_TRUE(op.factors()[0](0, 2).is_one());
}

TEST(io, non_orthonormal_code_is_an_invariant_violation) {
    io::Json j = io::to_json(catalog::code332());
    j["basis"][1] = j["basis"][0];
    IngestError e = ingest_error([&] { io::code_from_json(j); });
    ASSERT_EQ(e.kind, IngestError::Kind::kInvariant);
    ASSERT_EQ(e.field, "orthonormal basis");
}

TEST(io, overclaimed_distance_is_an_invariant_violation) {
    io::Json j = io::to_json(catalog::code332());
    j["claimed_d"] = 3;
    IngestError e = ingest_error([&] { io::code_from_json(j); });
    ASSERT_EQ(e.kind, IngestError::Kind::kInvariant);
    ASSERT_EQ(e.field, "claimed distance");
    j["claimed_d"] = nullptr;
    ASSERT_FALSE(io::code_from_json(j).claimed_distance.has_value());
}

TEST(io, parse_diagnostics) {
    io::Json missing = io::to_json(catalog::phi());
    missing.erase("dims");
    IngestError e1 = ingest_error([&] { io::state_from_json(missing); });
    ASSERT_EQ(e1.kind, IngestError::Kind::kParse);
    ASSERT_NE(e1.field.find("dims"), std::string::npos);

    io::Json short_coeffs = {{"conductor", 12}, {"coeffs", {"1/1", "0/1"}}};
    IngestError e2 = ingest_error([&] { io::cyclotomic_from_json(short_coeffs, "x"); });
    ASSERT_EQ(e2.kind, IngestError::Kind::kParse);
    ASSERT_NE(std::string(e2.what()).find("parse error at x"), std::string::npos);

    io::Json bad_rational = {{"conductor", 12}, {"coeffs", {"1/0", "0/1", "0/1", "0/1"}}};
    ASSERT_THROW(io::cyclotomic_from_json(bad_rational), IngestError);

    std::string path = temp_path("broken.json");
    {
        std::ofstream out(path);
        out << "{\n  \"n\": 3,\n  oops\n}\n";
    }
    IngestError e3 = ingest_error([&] { io::read_json(path); });
    ASSERT_EQ(e3.kind, IngestError::Kind::kParse);
    ASSERT_NE(std::string(e3.what()).find("line 3"), std::string::npos) << e3.what();
    std::filesystem::remove(path);

    ASSERT_THROW(io::read_json(temp_path("does-not-exist.json")), IngestError);
}

TEST(io, mixed_operator_lists_are_rejected) {
    io::Json j = io::to_json(catalog::stabilizer_generators());
    j["operators"].push_back(io::to_json(LocalOperator::identity({3, 3}, 12)));
    ASSERT_THROW(io::ops_from_json(j), IngestError);
}

TEST(io, report_json_shapes) {
    io::Json kl = io::to_json(kl_check(catalog::code332(), 2));
    ASSERT_TRUE(kl["is_code"].get<bool>());
    ASSERT_TRUE(kl["violations"].empty());
    ASSERT_EQ(io::kReportSchema, std::string("ame-report/1"));
}
