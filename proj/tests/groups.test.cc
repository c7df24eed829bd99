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

#include "ame/groups.h"

#include <array>
#include <map>
#include <random>

#include "gtest/gtest.h"

#include "ame/catalog.h"
#include "ame/invariants.h"
#include "ame/kempfness.h"
#include "test_util.h"

using namespace ame;
using ame_test::q;

namespace {

const MatrixGroup<LocalOperator> &local_group() {
    static const MatrixGroup<LocalOperator> group = local_symmetry_group();
    return group;
}

const MatrixGroup<ExactMatrix> &weyl() {
    static const MatrixGroup<ExactMatrix> group = weyl_group();
    return group;
}

// Independent floating-point closure: elements are kept as per-site complex
// matrices with no canonical form, and identified by their action on a fixed
// random vector (equal operators give equal images; distinct elements of a
// finite group separate a generic vector).
std::size_t float_closure_order(const std::vector<LocalOperator> &gens, std::size_t cap) {
    auto to_float = [](const LocalOperator &op) {
        GroupElement g;
        for (std::size_t k = 0; k < op.num_sites(); k++) {
            CMat m(op.factors()[k].rows(), op.factors()[k].cols());
            for (Eigen::Index r = 0; r < m.rows(); r++) {
                for (Eigen::Index c = 0; c < m.cols(); c++) {
                    m(r, c) = op.factors()[k](r, c).to_complex();
                }
            }
            g.factors.push_back(k == 0 ? CMat(m * op.scalar().to_complex()) : m);
        }
        return g;
    };
    std::vector<GroupElement> fgens;
    for (const auto &g : gens) {
        fgens.push_back(to_float(g));
    }
    std::mt19937_64 rng(99);
    FloatState probe = FloatState::random(gens[0].dims(), rng);
    CVec functionals = FloatState::random(gens[0].dims(), rng).amps;
    auto signature = [&](const GroupElement &g) {
        CVec image = apply(g, probe).amps;
        return std::array<std::complex<double>, 2>{image(0), functionals.dot(image)};
    };
    // Bucketed by the rounded real part of the first coordinate; neighbours are
    // searched so rounding boundaries cannot split equal elements.
    std::map<long, std::vector<std::array<std::complex<double>, 2>>> seen;
    auto insert = [&](const GroupElement &g) {
        auto sig = signature(g);
        long bucket = std::lround(sig[0].real() * 1e6);
        for (long b = bucket - 1; b <= bucket + 1; b++) {
            auto it = seen.find(b);
            if (it == seen.end()) {
                continue;
            }
            for (const auto &s : it->second) {
                if (std::abs(s[0] - sig[0]) < 1e-8 && std::abs(s[1] - sig[1]) < 1e-8) {
                    return false;
                }
            }
        }
        seen[bucket].push_back(sig);
        return true;
    };
    std::vector<GroupElement> elements{GroupElement::identity(gens[0].dims())};
    insert(elements[0]);
    for (std::size_t head = 0; head < elements.size() && elements.size() <= cap; head++) {
        for (const auto &g : fgens) {
            GroupElement next;
            for (std::size_t k = 0; k < g.factors.size(); k++) {
                next.factors.push_back(elements[head].factors[k] * g.factors[k]);
            }
            if (insert(next)) {
                elements.push_back(std::move(next));
            }
        }
    }
    return elements.size();
}

}  // namespace

TEST(groups, closure_small) {
    ExactMatrix x = pauli_x(3, 12), z = pauli_z(3, 12);
    // 9 Paulis X^a Z^b times the phases {1, w, w^2}.
    ASSERT_EQ(closure(std::vector<ExactMatrix>{x, z}, 270).order(), 27u);
    ASSERT_EQ(closure(std::vector<ExactMatrix>{ExactMatrix::identity(3, 12)}, 10).order(), 1u);
    ASSERT_EQ(closure(catalog::stabilizer_generators(), 90).order(), 9u);
    ASSERT_THROW(closure(std::vector<ExactMatrix>{x, z}, 20), ClosureCapExceeded);
    ASSERT_THROW(closure(std::vector<ExactMatrix>{}, 20), std::invalid_argument);
}

TEST(groups, closure_order_is_deterministic) {
    auto a = weyl_group();
    auto b = weyl_group();
    ASSERT_EQ(a.elements, b.elements);
    ASSERT_TRUE(a.elements[0].is_identity());
}

TEST(groups, reflection_examples) {
    auto vecs = catalog::reflection_vectors();
    auto shown = catalog::weyl_generators_displayed();
    Cyclotomic w = catalog::omega();
    ExactMatrix r1 = reflection({vecs[0], 3});
    ASSERT_EQ(r1, ExactMatrix::diagonal({q(12, 1), q(12, 1), w}));
    ASSERT_EQ(reflection({vecs[2], 3}), ExactMatrix::diagonal({q(12, 1), w, q(12, 1)}));
    for (std::size_t i = 0; i < 3; i++) {
        ASSERT_EQ(reflection({vecs[i], 3}), shown[i]) << i;
    }
    ASSERT_TRUE(reflection({vecs[1], 1}).is_identity());
    ASSERT_THROW(reflection({{q(12, 0), q(12, 0), q(12, 0)}, 3}), std::invalid_argument);
}

TEST(groups, reflection_acts_as_defined) {
    auto vecs = catalog::reflection_vectors();
    Cyclotomic w = catalog::omega();
    ExactMatrix r = reflection({vecs[1], 3});
    ExactMatrix a = ExactMatrix::column(vecs[1]);
    ASSERT_EQ(r * a, a * w);
    // (1, -1, 0) is orthogonal to e_2.
    ExactMatrix perp = ExactMatrix::column({q(12, 1), q(12, -1), q(12, 0)});
    ASSERT_EQ(r * perp, perp);
}

TEST(groups, displayed_r2) {
    Cyclotomic w = catalog::omega();
    Cyclotomic one = q(12, 1);
    ExactMatrix m(3, 3, {one, w, w, w, one, w, w, w, one});
    ExactMatrix expected = m * (inv_sqrt3(12) * Cyclotomic::root_of_unity(1, 12));
    ASSERT_EQ(catalog::weyl_generators_displayed()[1], expected);
}

TEST(groups, weyl_group) {
    ASSERT_EQ(weyl().order(), 648u);
    for (const auto &r : catalog::weyl_generators_displayed()) {
        ASSERT_TRUE(is_complex_reflection(r));
        ASSERT_TRUE(r.is_unitary());
    }
    ASSERT_FALSE(is_complex_reflection(ExactMatrix::identity(3, 12)));
    ASSERT_FALSE(is_complex_reflection(ExactMatrix::identity(3, 12) * catalog::omega()));
    GroupAxiomReport axioms = verify_group_axioms(weyl(), 200, 5);
    ASSERT_TRUE(axioms.closed);
    ASSERT_TRUE(axioms.has_inverses);
    ASSERT_EQ(axioms.checked, 200u);
}

TEST(groups, weyl_elements_preserve_invariants) {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> pick(0, weyl().order() - 1);
    for (int t = 0; t < 50; t++) {
        const ExactMatrix &g = weyl().elements[pick(rng)];
        ASSERT_TRUE(check_weyl_invariance(g, 3, 100 + t).invariant);
    }
}

TEST(groups, mu_matrix_examples) {
    CodeSubspace code = catalog::code332();
    auto qs = catalog::coset_representatives();
    auto shown = catalog::weyl_generators_displayed();
    ASSERT_EQ(mu_matrix(qs[0], code), shown[0]);
    ASSERT_TRUE(mu_matrix(catalog::stabilizer_generators()[0], code).is_identity());
    ASSERT_TRUE(mu_matrix(LocalOperator::identity({3, 3, 3}, 12), code).is_identity());
    ExactMatrix x = pauli_x(3, 12), id = ExactMatrix::identity(3, 12);
    ASSERT_THROW(mu_matrix(LocalOperator(q(12, 1), {x, id, id}), code), std::domain_error);
}

TEST(groups, coset_representatives) {
    CosetReport report = verify_coset_representatives();
    ASSERT_TRUE(report.ok);
    ASSERT_TRUE(report.mismatches.empty());
    for (const auto &qi : catalog::coset_representatives()) {
        ASSERT_TRUE(is_special_unitary(qi));
        ASSERT_TRUE(is_special_linear(qi));
    }
}

TEST(groups, perturbed_coset_representative_is_rejected) {
    auto qs = catalog::coset_representatives();
    std::vector<ExactMatrix> factors = qs[1].factors();
    factors[0](0, 0) = factors[0](0, 0) * catalog::omega();
    std::vector<LocalOperator> reps{qs[0], LocalOperator(qs[1].scalar(), factors), qs[2]};
    auto shown = catalog::weyl_generators_displayed();
    std::vector<ExactMatrix> targets(shown.begin(), shown.end());
    CosetReport report = verify_coset_representatives(reps, targets, catalog::code332());
    ASSERT_FALSE(report.ok);
    ASSERT_TRUE(report.mu_matches[0]);
    ASSERT_FALSE(report.mu_matches[1]);
    ASSERT_TRUE(report.mu_matches[2]);
    bool located = !report.mismatches.empty() || !report.errors.empty();
    ASSERT_TRUE(located);
    for (const auto &m : report.mismatches) {
        ASSERT_EQ(m.representative, 1u);
    }
}

TEST(groups, q2_factors_are_special_unitary_over_conductor_36) {
    // det M = 3(1 - w), so F = zeta_36 M / sqrt(3) has det 1 and F^(x3) = Q_2.
    long n = 36;
    Cyclotomic w = catalog::omega(n), one = q(n, 1);
    ExactMatrix m(3, 3, {w, one, one, one, w, one, one, one, w});
    ExactMatrix f = m * (Cyclotomic::root_of_unity(1, n) * inv_sqrt3(n));
    ASSERT_TRUE(f.is_unitary());
    ASSERT_TRUE(f.determinant().is_one());
    ASSERT_EQ(LocalOperator(one, {f, f, f}), catalog::coset_representatives(n)[1]);
}

TEST(groups, transversal_group_equals_weyl_group) {
    auto t = transversal_group(catalog::code332());
    ASSERT_EQ(t.order(), 648u);
    for (const auto &g : t.elements) {
        ASSERT_TRUE(weyl().contains(g));
    }
    // The stabilizer part contributes only the identity.
    for (const auto &s : catalog::stabilizer_generators()) {
        ASSERT_TRUE(mu_matrix(s, catalog::code332()).is_identity());
    }
}

TEST(groups, local_symmetry_generators) {
    auto gens = catalog::local_symmetry_generators();
    PureState phi = catalog::phi();
    for (const auto &g : gens) {
        ASSERT_EQ(apply(g, phi), phi);
    }
    ExactMatrix x = pauli_x(3, 12), id = ExactMatrix::identity(3, 12);
    ASSERT_EQ(gens[0], LocalOperator(q(12, 1), {id, x, x, x}));
}

TEST(groups, local_symmetry_order_matches_float_oracle) {
    auto gens = catalog::local_symmetry_generators();
    std::size_t oracle = float_closure_order(std::vector<LocalOperator>(gens.begin(), gens.end()), 60000);
    ASSERT_EQ(local_group().order(), oracle);
    // 648 * 9 / 3: T and w T in N(C) give the same operator conj(mu(T)) (x) T.
    ASSERT_EQ(oracle, 1944u);
}

TEST(groups, code_normalizer_order_matches_float_oracle) {
    std::vector<LocalOperator> gens = catalog::stabilizer_generators();
    for (const auto &qi : catalog::coset_representatives()) {
        gens.push_back(qi);
    }
    std::size_t oracle = float_closure_order(gens, 60000);
    ASSERT_EQ(oracle, 648u * 9u);
    ASSERT_EQ(code_normalizer_group().order(), oracle);
}

TEST(groups, symmetry_lift_is_three_to_one) {
    CodeSubspace code = catalog::code332();
    ExactMatrix id = ExactMatrix::identity(3, 12);
    LocalOperator w_id(catalog::omega(), {id, id, id});
    ASSERT_TRUE(is_special_linear(w_id));
    ASSERT_TRUE(symmetry_lift(w_id, code).is_identity());
    auto qs = catalog::coset_representatives();
    ASSERT_EQ(symmetry_lift(qs[0], code), catalog::local_symmetry_generators()[2]);
    ASSERT_EQ(symmetry_lift(qs[1], code), catalog::local_symmetry_generators()[3]);
    ASSERT_EQ(symmetry_lift(qs[2], code), catalog::local_symmetry_generators()[4]);
}

TEST(groups, every_local_symmetry_fixes_phi) {
    PureState phi = catalog::phi();
    for (const auto &g : local_group().elements) {
        ASSERT_EQ(apply(g, phi), phi);
    }
    GroupAxiomReport axioms = verify_group_axioms(local_group(), 200, 6);
    ASSERT_TRUE(axioms.closed && axioms.has_inverses);
}

TEST(groups, local_symmetries_have_conjugate_form) {
    CodeSubspace code = catalog::code332();
    PureState phi = catalog::phi();
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<std::size_t> pick(0, local_group().order() - 1);
    for (int t = 0; t < 120; t++) {
        SymmetryFormReport rep = check_symmetry_form(local_group().elements[pick(rng)], code, phi);
        ASSERT_TRUE(rep.fixes_phi);
        ASSERT_TRUE(rep.inverse_transpose_identity);
        ASSERT_TRUE(rep.conjugate_form) << rep.error;
    }
    ExactMatrix x = pauli_x(3, 12), id = ExactMatrix::identity(3, 12);
    SymmetryFormReport bad = check_symmetry_form(LocalOperator(q(12, 1), {id, x, id, id}), code, phi);
    ASSERT_FALSE(bad.fixes_phi);
    ASSERT_FALSE(bad.error.empty());
}

TEST(groups, centralizer_containment) {
    CentralizerReport rep = centralizer_containment_check();
    ASSERT_TRUE(rep.ok());
    ASSERT_EQ(rep.order, 9u);
    ASSERT_EQ(5832u / 648u, rep.order);
    ASSERT_TRUE(rep.generators_commute);
    ASSERT_FALSE(centralizer_containment_check(1944, 648).order_consistent);
}
