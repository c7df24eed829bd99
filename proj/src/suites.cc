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

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ame/catalog.h"
#include "ame/correspondence.h"
#include "ame/groups.h"
#include "ame/invariants.h"
#include "ame/kempfness.h"

namespace ame {

namespace {

struct Outcome {
    bool ok;
    std::string actual;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3e", x);
    return buf;
}

std::string yes_no(bool b) {
    return b ? "true" : "false";
}

std::string ratio(std::size_t good, std::size_t total) {
    return std::to_string(good) + "/" + std::to_string(total);
}

class Runner {
   public:
    explicit Runner(SuiteReport &report) : report_(report) {
    }

    /// Passes iff the produced string equals `expected`.
    void exact(const std::string &name, const std::string &expected, const std::function<std::string()> &fn) {
        run(name, expected, [&] {
            std::string actual = fn();
            return Outcome{actual == expected, actual};
        });
    }

    /// Passes iff the produced outcome says so; `expected` is descriptive.
    void judged(const std::string &name, const std::string &expected, const std::function<Outcome()> &fn) {
        run(name, expected, fn);
    }

   private:
    void run(const std::string &name, const std::string &expected, const std::function<Outcome()> &fn) {
        CheckRecord rec{name, CheckStatus::kFail, expected, "", 0};
        auto start = std::chrono::steady_clock::now();
        try {
            Outcome out = fn();
            rec.status = out.ok ? CheckStatus::kPass : CheckStatus::kFail;
            rec.actual = std::move(out.actual);
        } catch (const std::exception &e) {
            rec.actual = std::string("error: ") + e.what();
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(rec));
    }

    SuiteReport &report_;
};

std::size_t cap_or(const SuiteOptions &o, std::size_t fallback) {
    return o.cap ? o.cap : fallback;
}

void suite_code332(Runner &r, const SuiteOptions &o) {
    long n = o.conductor;
    CodeSubspace code = catalog::code332(n);
    r.exact("weight<=1 error sweep size", "25", [&] {
        return std::to_string(pauli_error_basis(3, 3, 1, n).size());
    });
    r.exact("kl_check(C, 2) is_code is_pure", "true true", [&] {
        KlReport rep = kl_check(code, 2);
        return yes_no(rep.is_code) + " " + yes_no(rep.is_pure);
    });
    r.exact("kl_check(C, 3) is_code", "false", [&] { return yes_no(kl_check(code, 3).is_code); });
    r.exact("distance(C)", "2", [&] { return std::to_string(distance(code)); });
    r.exact("singleton bound saturated", "true", [&] { return yes_no(singleton_saturated(3, 3, 2, 3)); });
    r.exact("stabilizer fixed space: dim, equals span C", "3 true", [&] {
        CodeSubspace fixed = stabilizer_subspace(catalog::stabilizer_generators(n));
        return std::to_string(fixed.dimension()) + " " + yes_no(same_span(fixed.basis_vectors(), code.basis_vectors()));
    });
    r.exact("stabilizer group: order, fixes C pointwise", "9 true", [&] {
        CentralizerReport rep = centralizer_containment_check();
        return std::to_string(rep.order) + " " + yes_no(rep.fixes_code_pointwise);
    });
}

void suite_ame4(Runner &r, const SuiteOptions &o) {
    long n = o.conductor;
    r.exact("<Phi|Phi> as scaled", "3", [&] { return catalog::phi(n).norm2().get_str(); });
    r.exact("2-uniform over all 6 pairs (normalized)", "true", [&] {
        return yes_no(r_uniform_check(catalog::phi_normalized(n), 2).uniform);
    });
    r.exact("1-uniform", "true", [&] { return yes_no(r_uniform_check(catalog::phi_normalized(n), 1).uniform); });
}

void suite_correspondence(Runner &r, const SuiteOptions &o) {
    long n = o.conductor;
    CodeSubspace code = catalog::code332(n);
    PureState phi = catalog::phi_normalized(n);
    r.exact("roundtrip(C): exact, kl_verified", "true true", [&] {
        CorrespondenceReport rep = roundtrip(code);
        return yes_no(rep.roundtrip_exact) + " " + yes_no(rep.kl_verified);
    });
    r.exact("roundtrip(Phi): exact, ame_verified", "true true", [&] {
        CorrespondenceReport rep = roundtrip(phi);
        return yes_no(rep.roundtrip_exact) + " " + yes_no(rep.ame_verified);
    });
    r.exact("purify_code(C) is 2-uniform", "true", [&] { return yes_no(r_uniform_check(purify_code(code), 2).uniform); });
    r.exact("purify_code(C) == Phi (normalized)", "true", [&] { return yes_no(purify_code(code) == phi); });
}

void suite_weyl(Runner &r, const SuiteOptions &o) {
    long n = o.conductor;
    auto shown = catalog::weyl_generators_displayed(n);
    auto vecs = catalog::reflection_vectors(n);
    r.exact("reflection(e_i, 3) == R_i", "true true true", [&] {
        std::string s;
        for (std::size_t i = 0; i < 3; i++) {
            s += (i ? " " : "") + yes_no(reflection({vecs[i], 3}) == shown[i]);
        }
        return s;
    });
    r.exact("R_i are complex reflections", "true true true", [&] {
        std::string s;
        for (std::size_t i = 0; i < 3; i++) {
            s += (i ? " " : "") + yes_no(is_complex_reflection(shown[i]));
        }
        return s;
    });
    std::optional<MatrixGroup<ExactMatrix>> w;
    r.exact("weyl_group order", "648", [&] {
        w = weyl_group(cap_or(o, 6480), n);
        return std::to_string(w->order());
    });
    r.exact("group axioms (200 samples)", "true true", [&] {
        GroupAxiomReport rep = verify_group_axioms(w.value(), 200, o.seed);
        return yes_no(rep.closed) + " " + yes_no(rep.has_inverses);
    });
    r.exact("coset representatives: mu(Q_i) == R_i, SU factors", "true", [&] {
        return yes_no(verify_coset_representatives().ok);
    });
    r.exact("transversal group: order, equals weyl group", "648 true", [&] {
        auto t = transversal_group(catalog::code332(), cap_or(o, 6480));
        bool equal = w.has_value() && t.order() == w->order();
        for (const auto &g : t.elements) {
            equal = equal && w->contains(g);
        }
        return std::to_string(t.order()) + " " + yes_no(equal);
    });
}

void suite_local_symmetry(Runner &r, const SuiteOptions &o) {
    CodeSubspace code = catalog::code332();
    PureState phi = catalog::phi();
    r.exact("generators fixing Phi", "5/5", [&] {
        std::size_t good = 0;
        for (const auto &g : catalog::local_symmetry_generators()) {
            good += apply(g, phi) == phi;
        }
        return ratio(good, 5);
    });
    std::optional<MatrixGroup<LocalOperator>> group;
    r.exact("local_symmetry_group order", "5832", [&] {
        group = local_symmetry_group(cap_or(o, 58320));
        return std::to_string(group->order());
    });
    if (!group) {
        return;
    }
    r.judged("every element fixes Phi", "all", [&] {
        std::size_t good = 0;
        for (const auto &g : group->elements) {
            good += apply(g, phi) == phi;
        }
        return Outcome{good == group->order(), good == group->order() ? "all" : ratio(good, group->order())};
    });
    r.exact("conj(mu) (x) g form (100 sampled elements)", "100/100", [&] {
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, group->order() - 1);
        std::size_t good = 0;
        for (int s = 0; s < 100; s++) {
            SymmetryFormReport rep = check_symmetry_form(group->elements[pick(rng)], code, phi);
            good += rep.fixes_phi && rep.inverse_transpose_identity && rep.conjugate_form;
        }
        return ratio(good, 100);
    });
    r.exact("group axioms (200 samples)", "true true", [&] {
        GroupAxiomReport rep = verify_group_axioms(*group, 200, o.seed);
        return yes_no(rep.closed) + " " + yes_no(rep.has_inverses);
    });
    std::optional<MatrixGroup<LocalOperator>> normalizer;
    r.exact("code normalizer N(C) order", "5832", [&] {
        normalizer = code_normalizer_group(cap_or(o, 58320));
        return std::to_string(normalizer->order());
    });
    r.exact("T -> conj(mu(T)) (x) T on N(C): kernel size, image == group", "3 true", [&] {
        std::unordered_set<LocalOperator> image;
        std::size_t kernel = 0;
        for (const auto &t : normalizer.value().elements) {
            LocalOperator h = symmetry_lift(t, code);
            kernel += h.is_identity();
            image.insert(std::move(h));
        }
        bool same = image.size() == group->order();
        for (const auto &h : image) {
            same = same && group->contains(h);
        }
        return std::to_string(kernel) + " " + yes_no(same);
    });
}

CartanPoint random_point(long n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-100, 100), den(1, 100);
    auto q = [&] {
        mpq_class x(num(rng), den(rng));
        x.canonicalize();
        return x;
    };
    return CartanPoint::rational(n, q(), q(), q());
}

void suite_invariants(Runner &r, const SuiteOptions &o) {
    long n = o.conductor;
    r.exact("I(1,1,1)", "-27 0 0", [&] {
        InvariantTriple t = eval_invariants(CartanPoint::rational(n, 1, 1, 1));
        return t.i6.str() + " " + t.i9.str() + " " + t.i12.str();
    });
    auto shown = catalog::weyl_generators_displayed(n);
    for (std::size_t i = 0; i < 3; i++) {
        r.judged("R_" + std::to_string(i + 1) + " preserves I6, I9, I12 (50 points)", "invariant", [&] {
            InvarianceReport rep = check_weyl_invariance(shown[i], 50, o.seed + i);
            return Outcome{rep.invariant, rep.invariant ? "invariant, false-pass bound " + fmt(rep.false_pass_bound)
                                                        : "counterexample " + rep.counterexample};
        });
    }
    r.exact("diag(2, 1/2, 1) rejected", "false", [&] {
        ExactMatrix m = ExactMatrix::diagonal({Cyclotomic(n, 2), Cyclotomic(n, 1, 2), Cyclotomic(n, 1)});
        return yes_no(check_weyl_invariance(m, 50, o.seed).invariant);
    });
    r.exact("homogeneity of degrees 6, 9, 12 (20 points)", "20/20", [&] {
        std::mt19937_64 rng(o.seed);
        std::size_t good = 0;
        for (int s = 0; s < 20; s++) {
            CartanPoint p = random_point(n, rng);
            Cyclotomic lambda = random_point(n, rng).a + Cyclotomic::root_of_unity(static_cast<long>(s), n);
            InvariantTriple a = eval_invariants(p.scaled(lambda));
            InvariantTriple b = eval_invariants(p);
            Cyclotomic l3 = lambda * lambda * lambda, l6 = l3 * l3, l9 = l6 * l3, l12 = l6 * l6;
            good += a.i6 == b.i6 * l6 && a.i9 == b.i9 * l9 && a.i12 == b.i12 * l12;
        }
        return ratio(good, 20);
    });
    r.exact("fingerprint constant on Weyl orbits (20 x 20)", "400/400", [&] {
        auto w = weyl_group(6480, n);
        std::mt19937_64 rng(o.seed);
        std::uniform_int_distribution<std::size_t> pick(0, w.order() - 1);
        std::size_t good = 0;
        for (int s = 0; s < 20; s++) {
            CartanPoint p = random_point(n, rng);
            Fingerprint f = invariant_ratio_fingerprint(p);
            for (int t = 0; t < 20; t++) {
                good += invariant_ratio_fingerprint(act(w.elements[pick(rng)], p)) == f;
            }
        }
        return ratio(good, 400);
    });
}

void suite_kempfness(Runner &r, const SuiteOptions &o) {
    FloatState phi = FloatState::from_exact(catalog::phi_normalized());
    Dims dims = phi.dims;
    r.exact("is_critical(Phi), is_critical(|000>)", "true false", [&] {
        FloatState z = FloatState::from_exact(PureState::basis({3, 3, 3}, {0, 0, 0}, 12));
        return yes_no(is_critical(phi, 1e-10).critical) + " " + yes_no(is_critical(z, 1e-10).critical);
    });
    r.judged("inequality on Phi, min ratio (1000 samples)", ">= 1 - 1e-9", [&] {
        InequalityReport rep = kempf_ness_inequality_test(phi, 1000, o.seed);
        return Outcome{rep.holds, fmt(rep.min_ratio)};
    });
    r.judged("inequality on |000> finds ratio < 1", "< 1", [&] {
        FloatState z = FloatState::from_exact(PureState::basis({3, 3, 3}, {0, 0, 0}, 12));
        InequalityReport rep = kempf_ness_inequality_test(z, 200, o.seed);
        return Outcome{rep.min_ratio < 1, fmt(rep.min_ratio)};
    });
    r.judged("flow from 20 g.Phi starts", "20/20 converge, residual < 1e-6, |norm^2 - 1| < 1e-6", [&] {
        std::mt19937_64 rng(o.seed);
        std::size_t good = 0;
        double worst = 0;
        for (int s = 0; s < 20; s++) {
            FloatState start = apply(GroupElement::random(dims, 1.0, rng), phi);
            FlowReport rep = norm_minimization_flow(start, {});
            double dev = std::abs(rep.final_norm2 - 1.0);
            worst = std::max(worst, dev);
            good += rep.converged && rep.criticality_residual < 1e-6 && dev < 1e-6;
        }
        return Outcome{good == 20, ratio(good, 20) + ", max |norm^2 - 1| " + fmt(worst)};
    });
    r.judged("flow from |001> collapses toward 0", "norm_collapsed", [&] {
        FloatState v = FloatState::from_exact(PureState::basis({3, 3, 3}, {0, 0, 1}, 12));
        FlowReport rep = norm_minimization_flow(v, {});
        return Outcome{rep.norm_collapsed && !rep.converged, "final norm^2 " + fmt(rep.final_norm2)};
    });
    r.judged("gradient vs central differences (20 pairs)", "max relative error <= 1e-5", [&] {
        std::mt19937_64 rng(o.seed);
        double worst = 0;
        Dims d3{3, 3, 3};
        for (int s = 0; s < 20; s++) {
            FloatState w = apply(GroupElement::random(d3, 0.5, rng), FloatState::random(d3, rng));
            auto grad = log_norm_gradient(w);
            for (std::size_t k = 0; k < d3.size(); k++) {
                auto basis = gell_mann_basis(d3[k]);
                for (std::size_t a = 0; a < basis.size(); a++) {
                    constexpr double h = 1e-5;
                    double fp = std::log(apply_site(matrix_exp(h * basis[a]), k, w).norm2());
                    double fm = std::log(apply_site(matrix_exp(-h * basis[a]), k, w).norm2());
                    double fd = (fp - fm) / (2 * h);
                    worst = std::max(worst, std::abs(fd - grad[k][a]) / std::max(std::abs(grad[k][a]), 1e-8));
                }
            }
        }
        return Outcome{worst <= 1e-5, fmt(worst)};
    });
    r.judged("criticality definitions agree (100 states)", "100/100", [&] {
        std::mt19937_64 rng(o.seed);
        std::vector<FloatState> bases{phi};
        for (const auto &s : catalog::code_basis()) {
            bases.push_back(FloatState::from_exact(s));
        }
        std::size_t good = 0, critical = 0;
        for (int s = 0; s < 100; s++) {
            FloatState v = s < 50 ? FloatState::random(s % 2 ? Dims{3, 3, 3} : dims, rng)
                                  : [&] {
                                        const FloatState &b = bases[s % bases.size()];
                                        return apply(GroupElement::random_unitary(b.dims, rng), b);
                                    }();
            CriticalityReport rep = is_critical(v, o.tol);
            bool lie = rep.residual_lie <= o.tol, marginal = rep.residual_marginal <= o.tol;
            good += lie == marginal;
            critical += lie && marginal;
        }
        return Outcome{good == 100, ratio(good, 100) + " (" + std::to_string(critical) + " critical)"};
    });
}

void suite_code442(Runner &r, const SuiteOptions &o) {
    long n = std::lcm(o.conductor, 24L);
    std::optional<CodeSubspace> code;
    r.exact("stabilizer fixed space of X^(x4), Z^(x4): dim", "4", [&] {
        code = stabilizer_subspace(catalog::qubit_stabilizer_generators(n));
        return std::to_string(code->dimension());
    });
    r.exact("kl_check(., 2) is_code is_pure", "true true", [&] {
        KlReport rep = kl_check(code.value(), 2);
        return yes_no(rep.is_code) + " " + yes_no(rep.is_pure);
    });
    r.exact("distance", "2", [&] { return std::to_string(distance(code.value())); });
}

using SuiteFn = void (*)(Runner &, const SuiteOptions &);

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"code332", suite_code332},
        {"ame4", suite_ame4},
        {"correspondence", suite_correspondence},
        {"weyl", suite_weyl},
        {"local-symmetry", suite_local_symmetry},
        {"invariants", suite_invariants},
        {"kempfness", suite_kempfness},
        {"code442-qubit", suite_code442},
    };
    return suites;
}

SuiteReport run_one(const std::string &name, SuiteFn fn, const SuiteOptions &options) {
    SuiteReport report{name, options.seed, options.conductor, {}};
    Runner runner(report);
    fn(runner, options);
    return report;
}

}  // namespace

std::string status_name(CheckStatus status) {
    switch (status) {
        case CheckStatus::kPass:
            return "pass";
        case CheckStatus::kFail:
            return "fail";
        case CheckStatus::kSkip:
            return "skip";
    }
    return "?";
}

bool SuiteReport::passed() const {
    for (const auto &c : checks) {
        if (c.status == CheckStatus::kFail) {
            return false;
        }
    }
    return true;
}

int SuiteReport::exit_status() const {
    return passed() ? 0 : 1;
}

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &[name, fn] : registry()) {
            out.push_back(name);
        }
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string &name, const SuiteOptions &options) {
    if (options.conductor <= 0 || options.conductor % 12 != 0) {
        throw std::invalid_argument("conductor must be a positive multiple of 12, got " + std::to_string(options.conductor));
    }
    if (options.tol <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (name != "all") {
        for (const auto &[suite, fn] : registry()) {
            if (suite == name) {
                return run_one(name, fn, options);
            }
        }
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    std::vector<SuiteReport> parts;
    if (options.parallel) {
        std::vector<std::future<SuiteReport>> futures;
        for (const auto &[suite, fn] : registry()) {
            futures.push_back(std::async(std::launch::async, run_one, suite, fn, options));
        }
        for (auto &f : futures) {
            parts.push_back(f.get());
        }
    } else {
        for (const auto &[suite, fn] : registry()) {
            parts.push_back(run_one(suite, fn, options));
        }
    }
    SuiteReport all{"all", options.seed, options.conductor, {}};
    for (auto &part : parts) {
        for (auto &c : part.checks) {
            c.name = part.suite + "/" + c.name;
            all.checks.push_back(std::move(c));
        }
    }
    return all;
}

io::Json to_json(const SuiteReport &report) {
    io::Json checks = io::Json::array();
    for (const auto &c : report.checks) {
        checks.push_back(io::Json{
            {"name", c.name},
            {"status", status_name(c.status)},
            {"expected", c.expected},
            {"actual", c.actual},
            {"elapsed_ms", c.elapsed_ms},
        });
    }
    return io::Json{
        {"schema", io::kReportSchema},
        {"suite", report.suite},
        {"seed", report.seed},
        {"conductor", report.conductor},
        {"status", report.passed() ? "pass" : "fail"},
        {"exit_status", report.exit_status()},
        {"checks", std::move(checks)},
    };
}

std::string to_text(const SuiteReport &report) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const auto &c : report.checks) {
        failed += c.status == CheckStatus::kFail;
        char ms[32];
        std::snprintf(ms, sizeof(ms), "%.1f ms", c.elapsed_ms);
        out << (c.status == CheckStatus::kPass ? "PASS" : c.status == CheckStatus::kFail ? "FAIL" : "SKIP") << "  "
            << c.name << "\n      expected: " << c.expected << "\n      actual:   " << c.actual << "  (" << ms
            << ")\n";
    }
    out << report.suite << ": " << (report.checks.size() - failed) << "/" << report.checks.size() << " checks passed\n";
    return out.str();
}

}  // namespace ame
