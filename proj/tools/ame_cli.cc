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

// Command-line front end: named verification suites and file-based workflows.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or I/O error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ame/catalog.h"
#include "ame/correspondence.h"
#include "ame/groups.h"
#include "ame/invariants.h"
#include "ame/io.h"
#include "ame/kempfness.h"
#include "ame/suites.h"

using ame::io::Json;

namespace {

struct Globals {
    long conductor = 12;
    std::size_t cap = 0;
    double tol = 1e-8;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "text";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_text(std::ostream &os, const Json &j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json &v = it.value();
        bool nested = (v.is_object() && !v.empty() && !v.contains("coeffs")) ||
                      (v.is_array() && !v.empty() && v[0].is_object() && !v[0].contains("coeffs"));
        if (!nested) {
            os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            continue;
        }
        os << pad << it.key() << ":\n";
        if (v.is_object()) {
            print_text(os, v, indent + 2);
        } else {
            for (std::size_t i = 0; i < v.size(); i++) {
                os << pad << "  [" << i << "]\n";
                print_text(os, v[i], indent + 4);
            }
        }
    }
}

// Prints `j` per --format and writes it to --out when given.
void emit(const Globals &g, const Json &j, const std::string &text = "") {
    if (!g.out.empty()) {
        ame::io::write_json(g.out, j);
    }
    if (g.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (!text.empty()) {
        std::cout << text;
    } else {
        print_text(std::cout, j, 0);
    }
}

Json with_header(const std::string &command, Json body) {
    Json j{{"schema", ame::io::kReportSchema}, {"command", command}};
    j.update(body);
    return j;
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void require_catalog_conductor(const Globals &g) {
    if (g.conductor <= 0 || g.conductor % 12 != 0) {
        throw UsageError("--conductor must be a positive multiple of 12");
    }
}

ame::PureState load_state(const std::string &path) {
    auto obj = ame::io::ingest_file(path);
    if (obj.kind != ame::io::FileKind::kState) {
        throw ame::io::IngestError(ame::io::IngestError::Kind::kParse, path,
                                   "expected a state file, found " + ame::io::kind_name(obj.kind));
    }
    return std::get<ame::PureState>(obj.value);
}

ame::CartanPoint parse_point(const std::string &text, long conductor) {
    std::vector<mpq_class> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(ame::parse_rational(item));
        } catch (const std::exception &) {
            throw UsageError("bad coordinate '" + item + "' in --point");
        }
    }
    if (parts.size() != 3) {
        throw UsageError("--point needs three comma-separated rationals");
    }
    return ame::CartanPoint::rational(conductor, parts[0], parts[1], parts[2]);
}

int run_suite_command(const Globals &g, const std::string &name, bool parallel) {
    ame::SuiteOptions options;
    options.seed = g.seed;
    options.conductor = g.conductor;
    options.cap = g.cap;
    options.tol = g.tol;
    options.parallel = parallel;
    ame::SuiteReport report;
    try {
        report = ame::run_suite(name, options);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    emit(g, ame::to_json(report), ame::to_text(report));
    return report.exit_status();
}

int correspond(const Globals &g, const std::string &state_path, const std::string &code_path) {
    if (state_path.empty() == code_path.empty()) {
        throw UsageError("give exactly one of --state, --code");
    }
    ame::CorrespondenceReport report{};
    Json extra = Json::object();
    if (!state_path.empty()) {
        ame::PureState v = load_state(state_path);
        mpq_class norm2 = v.norm2();
        if (norm2 != 1) {
            // Exact rescaling, possible when sqrt(<v|v>) lies in the field.
            auto root = ame::sqrt_rational(norm2, v.conductor());
            if (!root || norm2 == 0) {
                throw UsageError("cannot normalize the state exactly: sqrt(" + norm2.get_str() + ") is not in Q(zeta_" +
                                 std::to_string(v.conductor()) + ")");
            }
            v = v * root->inverse();
            extra["normalized_from_norm2"] = norm2.get_str();
        }
        report = ame::roundtrip(v);
    } else {
        auto obj = ame::io::ingest_file(code_path);
        if (obj.kind != ame::io::FileKind::kCode) {
            throw UsageError("--code expects a code file, got " + ame::io::kind_name(obj.kind));
        }
        report = ame::roundtrip(std::get<ame::CodeSubspace>(obj.value));
    }
    Json j = with_header("correspond", ame::io::to_json(report));
    j.update(extra);
    emit(g, j);
    bool ok = report.roundtrip_exact &&
              (report.direction == ame::CorrespondenceDirection::kFromCode ? report.kl_verified : report.ame_verified);
    return ok ? 0 : 1;
}

int group_close(const Globals &g, const std::string &gens_path) {
    auto obj = ame::io::ingest_file(gens_path);
    if (obj.kind != ame::io::FileKind::kOps) {
        throw UsageError("--gens expects an ops file");
    }
    auto gens = std::get<std::vector<ame::LocalOperator>>(obj.value);
    if (gens.empty()) {
        throw UsageError("the ops file has no operators");
    }
    for (std::size_t i = 0; i < gens.size(); i++) {
        if (!gens[i].is_invertible()) {
            emit(g, with_header("group close", Json{{"error", "generator " + std::to_string(i) + " is singular"}}));
            return 1;
        }
    }
    std::size_t cap = g.cap ? g.cap : 100000;
    auto start = std::chrono::steady_clock::now();
    try {
        auto group = ame::closure(gens, cap);
        emit(g, with_header("group close", Json{{"generators", gens.size()},
                                                {"cap", cap},
                                                {"order", group.order()},
                                                {"elapsed_ms", ms_since(start)}}));
        return 0;
    } catch (const ame::ClosureCapExceeded &e) {
        emit(g, with_header("group close", Json{{"generators", gens.size()},
                                                {"cap", cap},
                                                {"error", e.what()},
                                                {"elapsed_ms", ms_since(start)}}));
        return 1;
    }
}

int verify_cosets(const Globals &g) {
    auto start = std::chrono::steady_clock::now();
    ame::CosetReport report = ame::verify_coset_representatives();
    Json j = with_header("group verify-cosets", ame::io::to_json(report));
    j["elapsed_ms"] = ms_since(start);
    emit(g, j);
    return report.ok ? 0 : 1;
}

int invariants_eval(const Globals &g, const std::string &point) {
    require_catalog_conductor(g);
    ame::CartanPoint p = parse_point(point, g.conductor);
    Json j = with_header("invariants eval", Json{{"point", ame::io::to_json(p)}});
    ame::InvariantTriple t = ame::eval_invariants(p);
    j["invariants"] = ame::io::to_json(t);
    j["display"] = Json{{"I6", t.i6.str()}, {"I9", t.i9.str()}, {"I12", t.i12.str()}};
    try {
        j["fingerprint"] = ame::io::to_json(ame::invariant_ratio_fingerprint(p));
    } catch (const std::domain_error &e) {
        j["fingerprint"] = nullptr;
        j["fingerprint_note"] = e.what();
    }
    emit(g, j);
    return 0;
}

int invariants_check_weyl(const Globals &g, std::size_t trials, const std::string &gens_path) {
    require_catalog_conductor(g);
    std::vector<ame::ExactMatrix> gates;
    if (gens_path.empty()) {
        for (const auto &r : ame::catalog::weyl_generators_displayed(g.conductor)) {
            gates.push_back(r);
        }
    } else {
        auto obj = ame::io::ingest_file(gens_path);
        if (obj.kind != ame::io::FileKind::kOps) {
            throw UsageError("--gens expects an ops file");
        }
        for (const auto &op : std::get<std::vector<ame::LocalOperator>>(obj.value)) {
            if (op.num_sites() != 1 || op.factors()[0].rows() != 3) {
                throw UsageError("--gens must hold single-site 3x3 operators");
            }
            gates.push_back(op.factors()[0] * op.scalar());
        }
    }
    Json results = Json::array();
    bool ok = true;
    for (std::size_t i = 0; i < gates.size(); i++) {
        ame::InvarianceReport rep = ame::check_weyl_invariance(gates[i], trials, g.seed + i);
        ok = ok && rep.invariant;
        Json r = ame::io::to_json(rep);
        r["gate"] = i;
        results.push_back(r);
    }
    emit(g, with_header("invariants check-weyl", Json{{"seed", g.seed}, {"results", results}}));
    return ok ? 0 : 1;
}

int kempfness_flow(const Globals &g, const std::string &state_path, std::size_t iters, double perturb) {
    ame::FloatState v = ame::FloatState::from_exact(load_state(state_path));
    if (perturb > 0) {
        std::mt19937_64 rng(g.seed);
        v = ame::apply(ame::GroupElement::random(v.dims, perturb, rng), v);
    }
    ame::FlowOptions options;
    options.max_iters = iters;
    options.tol = g.tol;
    ame::FlowReport report = ame::norm_minimization_flow(v, options);
    Json j = with_header("kempfness flow", Json{{"seed", g.seed}, {"perturb", perturb}});
    j.update(ame::io::to_json(report));
    emit(g, j);
    return report.converged ? 0 : 1;
}

int kempfness_critical(const Globals &g, const std::string &state_path) {
    ame::FloatState v = ame::FloatState::from_exact(load_state(state_path));
    ame::CriticalityReport report = ame::is_critical(v, g.tol);
    Json j = with_header("kempfness critical", ame::io::to_json(report));
    j["tol"] = g.tol;
    emit(g, j);
    return report.critical ? 0 : 1;
}

int ingest(const Globals &g, const std::string &path) {
    try {
        auto obj = ame::io::ingest_file(path);
        Json j = with_header("ingest", Json{{"file", path}, {"kind", ame::io::kind_name(obj.kind)}, {"valid", true}});
        if (!obj.source.empty()) {
            j["source"] = obj.source;
        }
        if (auto *v = std::get_if<ame::PureState>(&obj.value)) {
            j["dims"] = v->dims();
            j["norm2"] = v->norm2().get_str();
        } else if (auto *c = std::get_if<ame::CodeSubspace>(&obj.value)) {
            j["n"] = c->n;
            j["K"] = c->dimension();
            j["D"] = c->local_dim;
        } else if (auto *ops = std::get_if<std::vector<ame::LocalOperator>>(&obj.value)) {
            j["operators"] = ops->size();
        } else if (auto *op = std::get_if<ame::LocalOperator>(&obj.value)) {
            j["sites"] = op->num_sites();
        }
        emit(g, j);
        return 0;
    } catch (const ame::io::IngestError &e) {
        emit(g, with_header("ingest", Json{{"file", path},
                                           {"valid", false},
                                           {"error_kind", e.kind == ame::io::IngestError::Kind::kParse ? "parse" : "invariant"},
                                           {"field", e.field},
                                           {"error", e.what()}}));
        return e.kind == ame::io::IngestError::Kind::kParse ? 2 : 1;
    }
}

int export_object(const Globals &g, const std::string &name) {
    require_catalog_conductor(g);
    long n = g.conductor;
    Json j;
    if (name == "phi") {
        j = Json{{"source", "four-qutrit AME state Phi: nine kets |i j i+j 2i+j> scaled by 1/sqrt(3), <Phi|Phi> = 3"}};
        j.update(ame::io::to_json(ame::catalog::phi(n)));
    } else if (name == "c332") {
        j = Json{{"source", "((3,3,2))_3 code: s_i = <i|_0 Phi, the fixed space of X^(x3) and Z^(x3)"}};
        j.update(ame::io::to_json(ame::catalog::code332(n)));
    } else if (name == "weyl-generators") {
        j = Json{{"source", "order-3 reflections R_1, R_2, R_3 in e_1 = |2>, e_2 = (i/sqrt 3)(1,1,1), e_3 = |1>"}};
        std::vector<ame::LocalOperator> ops;
        for (const auto &r : ame::catalog::weyl_generators_displayed(n)) {
            ops.push_back(ame::io::as_operator(r));
        }
        j.update(ame::io::to_json(ops));
    } else if (name == "symmetry-generators") {
        j = Json{{"source", "five four-site generators of the local symmetry group of Phi"}};
        auto gens = ame::catalog::local_symmetry_generators(n);
        j.update(ame::io::to_json(std::vector<ame::LocalOperator>(gens.begin(), gens.end())));
    } else if (name == "coset-reps") {
        j = Json{{"source", "Q_1, Q_2, Q_3 in SU_3^(x3) with mu(Q_i) = R_i"}};
        auto qs = ame::catalog::coset_representatives(n);
        j.update(ame::io::to_json(std::vector<ame::LocalOperator>(qs.begin(), qs.end())));
    } else {
        throw UsageError("unknown export '" + name + "'; expected phi, c332, weyl-generators, symmetry-generators, coset-reps");
    }
    if (g.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        ame::io::write_json(g.out, j);
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact verification workbench for the four-qutrit AME state and the ((3,3,2))_3 code"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--conductor", g.conductor, "Cyclotomic conductor N of Q(zeta_N)")->capture_default_str();
    app.add_option("--cap", g.cap, "Closure cap (0 keeps each command's default)");
    app.add_option("--tol", g.tol, "Floating-point tolerance")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--out", g.out, "Write the JSON report or exported file here");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    int status = 0;
    std::function<int()> action;

    auto *suite = app.add_subcommand("suite", "Run a named verification suite");
    std::string suite_name;
    bool parallel = false;
    suite->add_option("name", suite_name, "Suite name, or 'all'")->required();
    suite->add_flag("--parallel", parallel, "Run independent suites concurrently");
    suite->callback([&] { action = [&] { return run_suite_command(g, suite_name, parallel); }; });

    auto *corr = app.add_subcommand("correspond", "State <-> code round trip");
    std::string state_path, code_path;
    corr->add_option("--state", state_path, "State file");
    corr->add_option("--code", code_path, "Code file");
    corr->callback([&] { action = [&] { return correspond(g, state_path, code_path); }; });

    auto *group = app.add_subcommand("group", "Finite group closures")->require_subcommand(1);
    auto *close = group->add_subcommand("close", "Closure of the operators in an ops file");
    std::string gens_path;
    close->add_option("--gens", gens_path, "Ops file")->required();
    close->callback([&] { action = [&] { return group_close(g, gens_path); }; });
    group->add_subcommand("verify-weyl", "Reflection group of order 648")->callback([&] {
        action = [&] { return run_suite_command(g, "weyl", false); };
    });
    group->add_subcommand("verify-local-symmetry", "Local symmetry group of Phi")->callback([&] {
        action = [&] { return run_suite_command(g, "local-symmetry", false); };
    });
    group->add_subcommand("verify-cosets", "Coset representatives Q_1, Q_2, Q_3")->callback([&] {
        action = [&] { return verify_cosets(g); };
    });

    auto *inv = app.add_subcommand("invariants", "Weyl-invariant polynomials")->require_subcommand(1);
    auto *eval = inv->add_subcommand("eval", "Evaluate I6, I9, I12 at a rational point");
    std::string point;
    eval->add_option("--point", point, "a,b,c as rationals p/q")->required();
    eval->callback([&] { action = [&] { return invariants_eval(g, point); }; });
    auto *check = inv->add_subcommand("check-weyl", "Randomized invariance test of 3x3 gates");
    std::size_t trials = 50;
    std::string inv_gens;
    check->add_option("--trials", trials, "Random points per gate")->capture_default_str();
    check->add_option("--gens", inv_gens, "Ops file of single-site gates (default R_1, R_2, R_3)");
    check->callback([&] { action = [&] { return invariants_check_weyl(g, trials, inv_gens); }; });

    auto *kn = app.add_subcommand("kempfness", "Criticality and norm minimization")->require_subcommand(1);
    auto *flow = kn->add_subcommand("flow", "Norm-minimizing flow over the SLOCC group");
    std::string flow_state;
    std::size_t iters = 2000;
    double perturb = 0;
    flow->add_option("--state", flow_state, "State file")->required();
    flow->add_option("--iters", iters, "Maximum iterations")->capture_default_str();
    flow->add_option("--perturb", perturb, "Start from g.v, g = exp(X) with ||X|| = perturb drawn from --seed")
        ->capture_default_str();
    flow->callback([&] { action = [&] { return kempfness_flow(g, flow_state, iters, perturb); }; });
    auto *crit = kn->add_subcommand("critical", "Both criticality residuals of a state");
    std::string crit_state;
    crit->add_option("--state", crit_state, "State file")->required();
    crit->callback([&] { action = [&] { return kempfness_critical(g, crit_state); }; });

    auto *ing = app.add_subcommand("ingest", "Parse and validate a data file");
    std::string ingest_path;
    ing->add_option("file", ingest_path, "State, operator, ops or code file")->required();
    ing->callback([&] { action = [&] { return ingest(g, ingest_path); }; });

    auto *exp = app.add_subcommand("export", "Write a catalogued object as a data file");
    std::string export_name;
    exp->add_option("name", export_name, "phi, c332, weyl-generators, symmetry-generators or coset-reps")->required();
    exp->callback([&] { action = [&] { return export_object(g, export_name); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        status = action();
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ame::io::IngestError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.kind == ame::io::IngestError::Kind::kParse ? 2 : 1;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
