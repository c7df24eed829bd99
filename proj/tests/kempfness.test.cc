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

#include "ame/kempfness.h"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ame/catalog.h"

using namespace ame;

namespace {

const Dims kQutrits{3, 3, 3, 3};

FloatState phi() {
    return FloatState::from_exact(catalog::phi());
}

FloatState ket(const std::vector<std::size_t> &digits) {
    Dims dims(digits.size(), 3);
    return FloatState::from_exact(PureState::basis(dims, digits, 12));
}

}  // namespace

TEST(kempfness, gell_mann_basis) {
    for (std::size_t d : {2u, 3u, 4u}) {
        auto basis = gell_mann_basis(d);
        ASSERT_EQ(basis.size(), d * d - 1);
        for (std::size_t a = 0; a < basis.size(); a++) {
            ASSERT_LT((basis[a] - basis[a].adjoint()).norm(), 1e-14);
            ASSERT_LT(std::abs(basis[a].trace()), 1e-14);
            for (std::size_t b = 0; b < basis.size(); b++) {
                double expected = a == b ? 2 : 0;
                ASSERT_NEAR(std::abs((basis[a] * basis[b]).trace() - expected), 0, 1e-12);
            }
        }
    }
}

TEST(kempfness, criticality_examples) {
    ASSERT_TRUE(is_critical(phi()).critical);
    ASSERT_TRUE(is_critical(FloatState::from_exact(catalog::code_basis()[0])).critical);
    CriticalityReport product = is_critical(ket({0, 0, 0}));
    ASSERT_FALSE(product.critical);
    ASSERT_GT(product.residual_marginal, 0.5);
    FloatState zero{{3}, CVec::Zero(3)};
    ASSERT_THROW(is_critical(zero), std::invalid_argument);
    ASSERT_THROW(is_critical(phi(), 0), std::invalid_argument);
}

TEST(kempfness, criticality_definitions_agree) {
    std::mt19937_64 rng(41);
    std::vector<FloatState> states;
    for (int t = 0; t < 50; t++) {
        states.push_back(FloatState::random(kQutrits, rng));
    }
    for (int t = 0; t < 50; t++) {
        states.push_back(apply(GroupElement::random_unitary(kQutrits, rng), phi()));
    }
    for (const auto &v : states) {
        CriticalityReport rep = is_critical(v);
        ASSERT_EQ(rep.residual_lie < 1e-8, rep.residual_marginal < 1e-8);
    }
}

TEST(kempfness, gradient_matches_finite_differences) {
    std::mt19937_64 rng(42);
    const double h = 1e-5;
    for (int t = 0; t < 20; t++) {
        FloatState w = FloatState::random({3, 3, 2}, rng);
        auto grad = log_norm_gradient(w);
        for (std::size_t site = 0; site < w.dims.size(); site++) {
            auto basis = gell_mann_basis(w.dims[site]);
            for (std::size_t a = 0; a < basis.size(); a++) {
                CMat e = basis[a];
                double up = std::log(apply_site(matrix_exp(e * h), site, w).norm2());
                double down = std::log(apply_site(matrix_exp(e * -h), site, w).norm2());
                ASSERT_NEAR(grad[site][a], (up - down) / (2 * h), 1e-5);
            }
        }
    }
}

TEST(kempfness, matrix_exp) {
    CMat z = CMat::Zero(3, 3);
    ASSERT_LT((matrix_exp(z) - CMat::Identity(3, 3)).norm(), 1e-15);
    CMat d = CMat::Zero(2, 2);
    d(0, 0) = 2.0;
    d(1, 1) = {0, 1};
    CMat e = matrix_exp(d);
    ASSERT_NEAR(std::abs(e(0, 0) - std::exp(2.0)), 0, 1e-12);
    ASSERT_NEAR(std::abs(e(1, 1) - std::exp(std::complex<double>(0, 1))), 0, 1e-14);
}

TEST(kempfness, random_group_elements_have_unit_determinant) {
    std::mt19937_64 rng(43);
    for (int t = 0; t < 20; t++) {
        for (const auto &g : {GroupElement::random(kQutrits, 1.0, rng), GroupElement::random_unitary(kQutrits, rng)}) {
            for (const auto &f : g.factors) {
                ASSERT_NEAR(std::abs(f.determinant() - 1.0), 0, 1e-9);
            }
        }
    }
}

TEST(kempfness, flow_from_phi_stops_immediately) {
    FlowReport rep = norm_minimization_flow(phi());
    ASSERT_TRUE(rep.converged);
    ASSERT_LE(rep.iterations, 1u);
    ASSERT_NEAR(rep.final_norm2, rep.initial_norm2, 1e-12);
}

TEST(kempfness, flow_returns_to_phi_norm) {
    std::mt19937_64 rng(44);
    double target = phi().norm2();
    for (int t = 0; t < 5; t++) {
        FloatState start = apply(GroupElement::random(kQutrits, 1.0, rng), phi());
        FlowReport rep = norm_minimization_flow(start);
        ASSERT_TRUE(rep.converged);
        ASSERT_FALSE(rep.norm_collapsed);
        ASSERT_NEAR(rep.final_norm2, target, 1e-6 * target);
        ASSERT_TRUE(is_critical(rep.final_state, 1e-6).critical);
        for (std::size_t i = 1; i < rep.norm_trace.size(); i++) {
            ASSERT_LE(rep.norm_trace[i], rep.norm_trace[i - 1] * (1 + 1e-9));
        }
        // The recorded g reproduces the final state.
        FloatState again = apply(rep.g, start);
        ASSERT_LT((again.amps - rep.final_state.amps).norm(), 1e-8 * std::sqrt(target));
    }
}

TEST(kempfness, product_state_collapses) {
    FlowReport rep = norm_minimization_flow(ket({0, 0, 1}));
    ASSERT_TRUE(rep.norm_collapsed);
    ASSERT_LT(rep.final_norm2, 1e-12);
    ASSERT_FALSE(rep.converged);
}

TEST(kempfness, inequality) {
    InequalityReport at_phi = kempf_ness_inequality_test(phi(), 1000, 45);
    ASSERT_TRUE(at_phi.holds);
    ASSERT_EQ(at_phi.samples, 1000u);
    ASSERT_GE(at_phi.min_ratio, 1 - 1e-9);
    InequalityReport at_product = kempf_ness_inequality_test(ket({0, 0, 0, 0}), 1000, 45);
    ASSERT_FALSE(at_product.holds);
    ASSERT_LT(at_product.min_ratio, 1);
    FloatState identity_image = apply(GroupElement::identity(kQutrits), phi());
    ASSERT_NEAR(identity_image.norm2() / phi().norm2(), 1, 1e-15);
}

TEST(kempfness, local_unitaries_preserve_lu_invariants) {
    std::mt19937_64 rng(46);
    for (int t = 0; t < 10; t++) {
        FloatState v = FloatState::random(kQutrits, rng);
        FloatState w = apply(GroupElement::random_unitary(kQutrits, rng), v);
        ASSERT_NEAR(w.norm2(), v.norm2(), 1e-10 * v.norm2());
        ASSERT_TRUE(lu_necessary_conditions(v, w, 1e-9));
        ASSERT_EQ(is_critical(v).critical, is_critical(w).critical);
    }
    ASSERT_FALSE(lu_necessary_conditions(phi(), ket({0, 0, 0, 0}), 1e-9));
}
