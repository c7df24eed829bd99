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

#include "ame/qecc.h"

#include <random>

#include "gtest/gtest.h"

#include "ame/catalog.h"
#include "ame/io.h"
#include "test_util.h"

using namespace ame;
using ame_test::q;

namespace {

// Rational unit combinations of the basis, times a root-of-unity phase per term.
std::vector<PureState> random_code_states(const CodeSubspace &code, std::size_t count, std::mt19937_64 &rng) {
    long n = code.conductor();
    std::uniform_int_distribution<long> phase(0, n - 1);
    std::vector<PureState> out;
    for (std::size_t t = 0; t < count; t++) {
        auto coeffs = ame_test::rational_unit_vector(code.dimension(), rng);
        PureState v = PureState::zero(code.basis[0].dims(), n);
        for (std::size_t i = 0; i < code.dimension(); i++) {
            v = v + code.basis[i] * (Cyclotomic(n, coeffs[i]) * Cyclotomic::root_of_unity(phase(rng), n));
        }
        out.push_back(v);
    }
    return out;
}

// C (x) |0>: an impure ((4,3,2))_3 code. Z on the last site fixes every codeword.
CodeSubspace impure_code() {
    std::vector<PureState> basis;
    for (const auto &s : catalog::code_basis()) {
        std::vector<Cyclotomic> amps;
        for (const auto &a : s.amps()) {
            amps.push_back(a);
            amps.push_back(Cyclotomic(12));
            amps.push_back(Cyclotomic(12));
        }
        basis.emplace_back(Dims{3, 3, 3, 3}, amps);
    }
    return CodeSubspace::from_basis(basis);
}

CodeSubspace qubit_repetition() {
    return CodeSubspace::from_basis(
        {PureState::basis({2, 2, 2}, {0, 0, 0}, 24), PureState::basis({2, 2, 2}, {1, 1, 1}, 24)});
}

std::vector<CodeSubspace> corpus() {
    return {
        catalog::code332(),
        stabilizer_subspace(catalog::qubit_stabilizer_generators()),
        impure_code(),
        qubit_repetition(),
        CodeSubspace::from_basis({PureState::basis({3, 3, 3}, {0, 0, 0}, 12)}),
    };
}

}  // namespace

TEST(qecc, paulis) {
    ExactMatrix x = pauli_x(3, 12), z = pauli_z(3, 12);
    Cyclotomic w = catalog::omega();
    ASSERT_TRUE(x(1, 0).is_one());
    ASSERT_EQ(z(1, 1), w);
    // ZX = xi XZ.
    ASSERT_EQ(z * x, x * z * w);
    ASSERT_EQ(pauli_xz(3, 1, 1, 12), x * z);
    ASSERT_TRUE(is_prime(2) && is_prime(3) && !is_prime(4) && !is_prime(1));
}

TEST(qecc, error_basis_counts) {
    // 1 + 3 sites * 8 nontrivial X^a Z^b.
    ASSERT_EQ(pauli_error_basis(3, 3, 1, 12).size(), 25u);
    auto trivial = pauli_error_basis(1, 2, 0, 24);
    ASSERT_EQ(trivial.size(), 1u);
    ASSERT_TRUE(trivial[0].op.is_identity());
    ASSERT_EQ(pauli_error_basis(3, 3, 3, 12).size(), 729u);
    ASSERT_THROW(pauli_error_basis(2, 4, 1, 12), std::invalid_argument);
    ASSERT_THROW(pauli_error_basis(2, 3, 3, 12), std::invalid_argument);
}

TEST(qecc, error_basis_weights_and_order) {
    auto basis = pauli_error_basis(3, 3, 2, 12);
    ASSERT_EQ(basis.size(), 1u + 24u + 3u * 64u);
    std::size_t last = 0;
    for (const auto &e : basis) {
        ASSERT_GE(e.weight(), last);
        last = e.weight();
        std::size_t nontrivial = 0;
        for (const auto &f : e.op.factors()) {
            nontrivial += !f.is_identity();
        }
        ASSERT_EQ(e.weight(), nontrivial);
    }
    ASSERT_EQ(basis[0].label(), "(0,0)(0,0)(0,0)");
}

TEST(qecc, kl_check_examples) {
    CodeSubspace code = catalog::code332();
    KlReport two = kl_check(code, 2);
    ASSERT_TRUE(two.is_code);
    ASSERT_TRUE(two.is_pure);
    ASSERT_TRUE(two.violations.empty());
    ASSERT_EQ(two.c_table.size(), 25u);
    ASSERT_EQ(two.n, 3u);
    ASSERT_EQ(two.k, 3u);

    KlReport three = kl_check(code, 3);
    ASSERT_FALSE(three.is_code);
    ASSERT_FALSE(three.violations.empty());

    CodeSubspace single = CodeSubspace::from_basis({PureState::basis({3, 3, 3}, {0, 0, 0}, 12)});
    ASSERT_TRUE(kl_check(single, 1).is_code);
}

TEST(qecc, kl_report_json) {
    auto j = io::to_json(kl_check(qubit_repetition(), 2));
    ASSERT_EQ(j["parameters"]["n"], 3);
    ASSERT_EQ(j["parameters"]["K"], 2);
    ASSERT_EQ(j["parameters"]["d"], 2);
    ASSERT_EQ(j["parameters"]["D"], 2);
    ASSERT_FALSE(j["is_code"].get<bool>());
    ASSERT_FALSE(j["violations"].empty());
    ASSERT_TRUE(j["violations"][0].contains("error_label"));
}

TEST(qecc, distance_examples) {
    ASSERT_EQ(distance(catalog::code332()), 2u);
    ASSERT_EQ(distance(qubit_repetition()), 1u);
    ASSERT_EQ(distance(stabilizer_subspace(catalog::qubit_stabilizer_generators())), 2u);
}

TEST(qecc, uniformity_examples) {
    ASSERT_TRUE(r_uniform_check(catalog::phi(), 2).uniform);
    ASSERT_TRUE(r_uniform_check(catalog::code_basis()[0], 1).uniform);
    UniformityReport product = r_uniform_check(PureState::basis({3, 3, 3}, {0, 0, 0}, 12), 1);
    ASSERT_FALSE(product.uniform);
    ASSERT_EQ(product.worst_subset.size(), 1u);
    ASSERT_GT(product.worst_deviation, 0.5);
    ASSERT_THROW(r_uniform_check(catalog::phi(), 5), std::invalid_argument);
}

TEST(qecc, singleton_examples) {
    ASSERT_TRUE(singleton_check(3, 3, 2, 3));
    ASSERT_TRUE(singleton_saturated(3, 3, 2, 3));
    // Allowed by the bound, yet no such qubit code exists.
    ASSERT_TRUE(singleton_check(3, 2, 2, 2));
    ASSERT_TRUE(singleton_check(2, 1, 2, 2));
    ASSERT_TRUE(singleton_saturated(2, 1, 2, 2));
    ASSERT_FALSE(singleton_check(3, 3, 3, 3));
}

TEST(qecc, stabilizer_examples) {
    CodeSubspace fixed = stabilizer_subspace(catalog::stabilizer_generators());
    ASSERT_EQ(fixed.dimension(), 3u);
    ASSERT_TRUE(same_span(fixed.basis_vectors(), catalog::code332().basis_vectors()));

    CodeSubspace everything = stabilizer_subspace({LocalOperator::identity({3, 3}, 12)});
    ASSERT_EQ(everything.dimension(), 9u);

    CodeSubspace qubits = stabilizer_subspace(catalog::qubit_stabilizer_generators());
    ASSERT_EQ(qubits.dimension(), 4u);
    KlReport rep = kl_check(qubits, 2);
    ASSERT_TRUE(rep.is_code && rep.is_pure);

    ASSERT_THROW(stabilizer_subspace({}), std::invalid_argument);
}

TEST(qecc, from_basis_rejects_non_orthonormal) {
    PureState a = PureState::basis({3}, {0}, 12);
    PureState b = a + PureState::basis({3}, {1}, 12);
    ASSERT_THROW(CodeSubspace::from_basis({a, b}), std::invalid_argument);
    ASSERT_THROW(CodeSubspace::from_basis({a * q(12, 2)}), std::invalid_argument);
    ASSERT_THROW(CodeSubspace::from_basis({}), std::invalid_argument);
}

TEST(qecc, purity_bridge) {
    std::mt19937_64 rng(11);
    for (const auto &code : corpus()) {
        std::size_t d = distance(code);
        if (d < 2) {
            continue;
        }
        bool pure = kl_check(code, d).is_pure;
        bool all_uniform = true;
        std::vector<PureState> states = code.basis;
        for (auto &v : random_code_states(code, 10, rng)) {
            states.push_back(std::move(v));
        }
        for (const auto &v : states) {
            all_uniform = all_uniform && r_uniform_check(v, d - 1).uniform;
        }
        ASSERT_EQ(pure, all_uniform) << "n=" << code.n << " K=" << code.dimension();
    }
}

TEST(qecc, impure_code_is_a_code) {
    CodeSubspace code = impure_code();
    KlReport rep = kl_check(code, 2);
    ASSERT_TRUE(rep.is_code);
    ASSERT_FALSE(rep.is_pure);
}

TEST(qecc, mds_implies_pure) {
    for (const auto &code : corpus()) {
        std::size_t d = distance(code);
        if (d > code.n) {
            continue;
        }
        KlReport rep = kl_check(code, d);
        if (rep.is_code && singleton_saturated(code.n, code.dimension(), d, code.local_dim)) {
            ASSERT_TRUE(rep.is_pure) << "n=" << code.n << " K=" << code.dimension();
        }
    }
}

TEST(qecc, distance_is_monotone) {
    for (const auto &code : corpus()) {
        std::size_t d = distance(code);
        for (std::size_t e = 1; e <= d && e <= code.n; e++) {
            ASSERT_TRUE(kl_check(code, e).is_code);
        }
        if (d <= code.n) {
            ASSERT_FALSE(kl_check(code, d + 1).is_code);
        }
    }
}
