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

#include <fstream>
#include <sstream>

namespace ame::io {

namespace {

using Kind = IngestError::Kind;

std::string join(const std::string &path, const std::string &key) {
    return path.empty() ? key : path + "/" + key;
}

[[noreturn]] void parse_fail(const std::string &field, const std::string &message) {
    throw IngestError(Kind::kParse, field, message);
}

[[noreturn]] void invariant_fail(const std::string &check, const std::string &message) {
    throw IngestError(Kind::kInvariant, check, message);
}

const Json &require(const Json &j, const std::string &key, const std::string &path) {
    if (!j.is_object()) {
        parse_fail(path.empty() ? "<root>" : path, "expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        parse_fail(join(path, key), "missing field");
    }
    return *it;
}

long require_int(const Json &j, const std::string &key, const std::string &path, long min_value) {
    const Json &v = require(j, key, path);
    if (!v.is_number_integer()) {
        parse_fail(join(path, key), "expected an integer");
    }
    long x = v.get<long>();
    if (x < min_value) {
        parse_fail(join(path, key), "must be at least " + std::to_string(min_value));
    }
    return x;
}

const Json &require_array(const Json &j, const std::string &key, const std::string &path) {
    const Json &v = require(j, key, path);
    if (!v.is_array()) {
        parse_fail(join(path, key), "expected an array");
    }
    return v;
}

std::vector<Cyclotomic> numbers_from_json(const Json &arr, const std::string &path, long conductor) {
    std::vector<Cyclotomic> out;
    out.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); i++) {
        std::string p = join(path, std::to_string(i));
        Cyclotomic x = cyclotomic_from_json(arr[i], p);
        if (conductor != 0 && x.conductor() != conductor) {
            parse_fail(join(p, "conductor"),
                       "conductor " + std::to_string(x.conductor()) + " differs from " + std::to_string(conductor));
        }
        out.push_back(std::move(x));
    }
    return out;
}

Json amps_to_json(const std::vector<Cyclotomic> &amps) {
    Json arr = Json::array();
    for (const auto &a : amps) {
        arr.push_back(to_json(a));
    }
    return arr;
}

std::size_t isqrt_exact(std::size_t n) {
    std::size_t r = 0;
    while ((r + 1) * (r + 1) <= n) {
        r++;
    }
    return r * r == n ? r : 0;
}

void copy_source(const Json &j, Ingested &out) {
    auto it = j.find("source");
    if (it != j.end()) {
        if (!it->is_string()) {
            parse_fail("source", "expected a string");
        }
        out.source = it->get<std::string>();
    }
}

}  // namespace

IngestError::IngestError(Kind kind, std::string field, const std::string &message)
    : std::runtime_error((kind == Kind::kParse ? "parse error at " : "invariant violation (") + field +
                         (kind == Kind::kParse ? ": " : "): ") + message),
      kind(kind),
      field(std::move(field)) {
}

Json to_json(const Cyclotomic &x) {
    Json coeffs = Json::array();
    for (const auto &c : x.coeffs()) {
        coeffs.push_back(format_rational(c));
    }
    return Json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const PureState &v) {
    return Json{{"dims", v.dims()}, {"conductor", v.conductor()}, {"amps", amps_to_json(v.amps())}};
}

Json to_json(const LocalOperator &op) {
    Json factors = Json::array();
    for (const auto &f : op.factors()) {
        factors.push_back(amps_to_json(f.entries()));
    }
    return Json{{"scalar", to_json(op.scalar())}, {"factors", std::move(factors)}};
}

Json to_json(const std::vector<LocalOperator> &ops) {
    Json arr = Json::array();
    for (const auto &op : ops) {
        arr.push_back(to_json(op));
    }
    return Json{{"operators", std::move(arr)}};
}

Json to_json(const CodeSubspace &code) {
    Json basis = Json::array();
    for (const auto &u : code.basis) {
        basis.push_back(amps_to_json(u.amps()));
    }
    Json j{{"n", code.n}, {"D", code.local_dim}, {"conductor", code.conductor()}};
    j["claimed_d"] = code.claimed_distance ? Json(*code.claimed_distance) : Json(nullptr);
    j["basis"] = std::move(basis);
    return j;
}

LocalOperator as_operator(const ExactMatrix &m) {
    return LocalOperator(Cyclotomic(m.conductor(), 1), {m});
}

Cyclotomic cyclotomic_from_json(const Json &j, const std::string &path) {
    long conductor = require_int(j, "conductor", path, 1);
    const Json &coeffs = require_array(j, "coeffs", path);
    long degree = euler_phi(conductor);
    if (static_cast<long>(coeffs.size()) != degree) {
        parse_fail(join(path, "coeffs"), "expected " + std::to_string(degree) + " coefficients for conductor " +
                                             std::to_string(conductor) + ", got " + std::to_string(coeffs.size()));
    }
    std::vector<mpq_class> q;
    for (std::size_t i = 0; i < coeffs.size(); i++) {
        std::string p = join(join(path, "coeffs"), std::to_string(i));
        if (!coeffs[i].is_string()) {
            parse_fail(p, "expected a \"p/q\" string");
        }
        try {
            q.push_back(parse_rational(coeffs[i].get<std::string>()));
        } catch (const std::exception &e) {
            parse_fail(p, e.what());
        }
    }
    return Cyclotomic::from_coeffs(conductor, std::move(q));
}

PureState state_from_json(const Json &j) {
    const Json &dims_json = require_array(j, "dims", "");
    Dims dims;
    for (std::size_t i = 0; i < dims_json.size(); i++) {
        if (!dims_json[i].is_number_integer() || dims_json[i].get<long>() < 1) {
            parse_fail("dims/" + std::to_string(i), "expected a positive integer");
        }
        dims.push_back(dims_json[i].get<std::size_t>());
    }
    if (dims.empty()) {
        parse_fail("dims", "must be nonempty");
    }
    long conductor = require_int(j, "conductor", "", 1);
    const Json &amps = require_array(j, "amps", "");
    if (amps.size() != total_dim(dims)) {
        parse_fail("amps", "expected " + std::to_string(total_dim(dims)) + " amplitudes, got " +
                               std::to_string(amps.size()));
    }
    return PureState(dims, numbers_from_json(amps, "amps", conductor));
}

LocalOperator operator_from_json(const Json &j, const std::string &path) {
    Cyclotomic scalar = cyclotomic_from_json(require(j, "scalar", path), join(path, "scalar"));
    long conductor = scalar.conductor();
    const Json &factors_json = require_array(j, "factors", path);
    if (factors_json.empty()) {
        parse_fail(join(path, "factors"), "must be nonempty");
    }
    std::vector<ExactMatrix> factors;
    for (std::size_t k = 0; k < factors_json.size(); k++) {
        std::string p = join(join(path, "factors"), std::to_string(k));
        if (!factors_json[k].is_array()) {
            parse_fail(p, "expected an array");
        }
        std::size_t d = isqrt_exact(factors_json[k].size());
        if (d == 0) {
            parse_fail(p, "length " + std::to_string(factors_json[k].size()) + " is not a positive square");
        }
        factors.emplace_back(d, d, numbers_from_json(factors_json[k], p, conductor));
    }
    return LocalOperator(std::move(scalar), std::move(factors));
}

std::vector<LocalOperator> ops_from_json(const Json &j) {
    const Json &arr = require_array(j, "operators", "");
    std::vector<LocalOperator> ops;
    for (std::size_t i = 0; i < arr.size(); i++) {
        ops.push_back(operator_from_json(arr[i], "operators/" + std::to_string(i)));
    }
    if (!ops.empty()) {
        for (std::size_t i = 1; i < ops.size(); i++) {
            if (ops[i].dims() != ops[0].dims()) {
                invariant_fail("equal site dimensions", "operator " + std::to_string(i) + " acts on different sites");
            }
            if (ops[i].conductor() != ops[0].conductor()) {
                invariant_fail("equal conductors", "operator " + std::to_string(i) + " has another conductor");
            }
        }
    }
    return ops;
}

CodeSubspace code_from_json(const Json &j) {
    long n = require_int(j, "n", "", 1);
    long d = require_int(j, "D", "", 2);
    long conductor = require_int(j, "conductor", "", 1);
    std::optional<std::size_t> claimed;
    auto it = j.find("claimed_d");
    if (it != j.end() && !it->is_null()) {
        if (!it->is_number_integer() || it->get<long>() < 1) {
            parse_fail("claimed_d", "expected a positive integer or null");
        }
        claimed = it->get<std::size_t>();
    }
    const Json &basis_json = require_array(j, "basis", "");
    if (basis_json.empty()) {
        parse_fail("basis", "must be nonempty");
    }
    Dims dims(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
    std::vector<PureState> basis;
    for (std::size_t i = 0; i < basis_json.size(); i++) {
        std::string p = "basis/" + std::to_string(i);
        if (!basis_json[i].is_array()) {
            parse_fail(p, "expected an array");
        }
        if (basis_json[i].size() != total_dim(dims)) {
            parse_fail(p, "expected " + std::to_string(total_dim(dims)) + " amplitudes, got " +
                              std::to_string(basis_json[i].size()));
        }
        basis.emplace_back(dims, numbers_from_json(basis_json[i], p, conductor));
    }
    CodeSubspace code = [&] {
        try {
            return CodeSubspace::from_basis(std::move(basis), claimed);
        } catch (const std::invalid_argument &e) {
            invariant_fail("orthonormal basis", e.what());
        }
    }();
    if (claimed) {
        std::size_t actual = distance(code);
        if (*claimed > actual) {
            invariant_fail("claimed distance",
                           "claimed d = " + std::to_string(*claimed) + " exceeds the computed distance " +
                               std::to_string(actual));
        }
    }
    return code;
}

std::string kind_name(FileKind kind) {
    switch (kind) {
        case FileKind::kState:
            return "state";
        case FileKind::kOperator:
            return "operator";
        case FileKind::kOps:
            return "ops";
        case FileKind::kCode:
            return "code";
    }
    return "?";
}

Ingested ingest(const Json &j) {
    if (!j.is_object()) {
        parse_fail("<root>", "expected an object");
    }
    auto make = [&](FileKind kind, auto value) {
        Ingested out{kind, "", std::move(value)};
        copy_source(j, out);
        return out;
    };
    if (j.contains("amps")) {
        return make(FileKind::kState, state_from_json(j));
    }
    if (j.contains("basis")) {
        return make(FileKind::kCode, code_from_json(j));
    }
    if (j.contains("operators")) {
        return make(FileKind::kOps, ops_from_json(j));
    }
    if (j.contains("factors")) {
        return make(FileKind::kOperator, operator_from_json(j));
    }
    parse_fail("<root>", "cannot tell the file kind: expected one of amps, basis, operators, factors");
}

Ingested ingest_file(const std::string &path) {
    return ingest(read_json(path));
}

Json to_json(const Ingested &object) {
    Json j = std::visit([](const auto &v) { return to_json(v); }, object.value);
    if (!object.source.empty()) {
        Json out{{"source", object.source}};
        out.update(j);
        return out;
    }
    return j;
}

Json read_json(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw IngestError(Kind::kParse, path, "cannot open file");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw IngestError(Kind::kParse, path, e.what());
    }
}

void write_json(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    out << j.dump(2) << "\n";
}

Json to_json(const KlReport &report) {
    Json violations = Json::array();
    for (const auto &v : report.violations) {
        violations.push_back(Json{{"error_label", v.error_label}, {"i", v.i}, {"j", v.j}, {"value", to_json(v.value)}});
    }
    return Json{
        {"parameters", {{"n", report.n}, {"K", report.k}, {"d", report.d}, {"D", report.local_dim}}},
        {"is_code", report.is_code},
        {"is_pure", report.is_pure},
        {"violations", std::move(violations)},
    };
}

Json to_json(const UniformityReport &report) {
    return Json{
        {"uniform", report.uniform},
        {"worst_subset", report.worst_subset},
        {"worst_deviation", report.worst_deviation},
    };
}

Json to_json(const CorrespondenceReport &report) {
    return Json{
        {"direction", report.direction == CorrespondenceDirection::kFromCode ? "code" : "state"},
        {"input", report.input},
        {"output", report.output},
        {"ame_verified", report.ame_verified},
        {"kl_verified", report.kl_verified},
        {"code_distance", report.code_distance},
        {"roundtrip_executed", report.roundtrip_executed},
        {"roundtrip_exact", report.roundtrip_exact},
    };
}

Json to_json(const CartanPoint &p) {
    return Json{{"a", to_json(p.a)}, {"b", to_json(p.b)}, {"c", to_json(p.c)}};
}

Json to_json(const InvariantTriple &t) {
    return Json{{"I6", to_json(t.i6)}, {"I9", to_json(t.i9)}, {"I12", to_json(t.i12)}};
}

Json to_json(const InvarianceReport &report) {
    Json j{
        {"invariant", report.invariant},
        {"trials", report.trials},
        {"sample_space", report.sample_space},
        {"false_pass_bound", report.false_pass_bound},
    };
    if (!report.counterexample.empty()) {
        j["counterexample"] = report.counterexample;
    }
    return j;
}

Json to_json(const Fingerprint &f) {
    return Json{{"branch", branch_name(f.branch)}, {"ratios", {to_json(f.ratios[0]), to_json(f.ratios[1])}}};
}

Json to_json(const CriticalityReport &report) {
    return Json{
        {"critical", report.critical},
        {"residual_lie", report.residual_lie},
        {"residual_marginal", report.residual_marginal},
    };
}

Json to_json(const FlowReport &report) {
    return Json{
        {"initial_norm2", report.initial_norm2},
        {"final_norm2", report.final_norm2},
        {"iterations", report.iterations},
        {"criticality_residual", report.criticality_residual},
        {"converged", report.converged},
        {"norm_collapsed", report.norm_collapsed},
        {"line_search_failed", report.line_search_failed},
        {"norm_trace", report.norm_trace},
    };
}

Json to_json(const CosetReport &report) {
    Json mismatches = Json::array();
    for (const auto &m : report.mismatches) {
        mismatches.push_back(Json{
            {"representative", m.representative},
            {"row", m.row},
            {"col", m.col},
            {"expected", m.expected},
            {"actual", m.actual},
        });
    }
    return Json{
        {"ok", report.ok},
        {"mu_matches", report.mu_matches},
        {"special_unitary", report.special_unitary},
        {"mismatches", std::move(mismatches)},
        {"errors", report.errors},
    };
}

Json to_json(const SymmetryFormReport &report) {
    Json j{
        {"fixes_phi", report.fixes_phi},
        {"inverse_transpose_identity", report.inverse_transpose_identity},
        {"conjugate_form", report.conjugate_form},
    };
    if (!report.error.empty()) {
        j["error"] = report.error;
    }
    return j;
}

Json to_json(const CentralizerReport &report) {
    return Json{
        {"order", report.order},
        {"fixes_code_pointwise", report.fixes_code_pointwise},
        {"special_linear", report.special_linear},
        {"generators_commute", report.generators_commute},
        {"order_consistent", report.order_consistent},
    };
}

}  // namespace ame::io
