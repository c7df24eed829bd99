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

#include "ame/correspondence.h"

#include <random>

#include "gtest/gtest.h"

#include "ame/catalog.h"
#include "ame/groups.h"
#include "test_util.h"

using namespace ame;
using ame_test::q;

namespace {

// Basis u'_j = sum_i g_ij s_i of the same code, for a unitary g.
CodeSubspace rotated_code(const ExactMatrix &g) {
    auto s = catalog::code_basis();
    std::vector<PureState> basis;
    for (std::size_t j = 0; j < 3; j++) {
        PureState v = PureState::zero(s[0].dims(), 12);
        for (std::size_t i = 0; i < 3; i++) {
            v = v + s[i] * g(i, j);
        }
        basis.push_back(v);
    }
    return CodeSubspace::from_basis(basis);
}

}  // namespace

TEST(correspondence, purify_code332_is_phi) {
    PureState v = purify_code(catalog::code332());
    ASSERT_EQ(v, catalog::phi_normalized());
    ASSERT_TRUE(inner(v, v).is_one());
    ASSERT_TRUE(r_uniform_check(v, 2).uniform);
}

TEST(correspondence, reduce_phi_is_code332) {
    CodeSubspace code = reduce_state(catalog::phi_normalized());
    ASSERT_EQ(code.dimension(), 3u);
    ASSERT_TRUE(same_span(code.basis_vectors(), catalog::code332().basis_vectors()));
    KlReport rep = kl_check(code, 2);
    ASSERT_TRUE(rep.is_code && rep.is_pure);
}

TEST(correspondence, bell_pair) {
    CodeSubspace line = CodeSubspace::from_basis({PureState::basis({2}, {0}, 24), PureState::basis({2}, {1}, 24)});
    PureState bell = purify_code(line);
    Cyclotomic h = *sqrt_rational(mpq_class(1, 2), 24);
    PureState expected = (PureState::basis({2, 2}, {0, 0}, 24) + PureState::basis({2, 2}, {1, 1}, 24)) * h;
    ASSERT_EQ(bell, expected);
    ASSERT_TRUE(same_span(reduce_state(bell).basis_vectors(), line.basis_vectors()));
}

TEST(correspondence, roundtrips) {
    CorrespondenceReport from_code = roundtrip(catalog::code332());
    ASSERT_TRUE(from_code.roundtrip_executed);
    ASSERT_TRUE(from_code.roundtrip_exact);
    ASSERT_TRUE(from_code.ame_verified);
    ASSERT_TRUE(from_code.kl_verified);
    ASSERT_EQ(from_code.code_distance, 2u);

    CorrespondenceReport from_state = roundtrip(catalog::phi_normalized());
    ASSERT_TRUE(from_state.roundtrip_executed);
    ASSERT_TRUE(from_state.roundtrip_exact);
    ASSERT_TRUE(from_state.ame_verified);
    ASSERT_TRUE(from_state.kl_verified);
}

TEST(correspondence, roundtrip_of_a_non_ame_code) {
    // span{|00>, |11>} purifies to GHZ: 1-uniform, but the code has distance 1.
    CodeSubspace code = CodeSubspace::from_basis(
        {PureState::basis({2, 2}, {0, 0}, 24), PureState::basis({2, 2}, {1, 1}, 24)});
    CorrespondenceReport rep = roundtrip(code);
    ASSERT_TRUE(rep.roundtrip_executed);
    ASSERT_TRUE(rep.roundtrip_exact);
    ASSERT_TRUE(rep.ame_verified);
    ASSERT_FALSE(rep.kl_verified);
    ASSERT_EQ(rep.code_distance, 1u);
}

TEST(correspondence, rotated_bases_recover_the_same_code) {
    auto weyl = weyl_group();
    std::mt19937_64 rng(21);
    std::uniform_int_distribution<std::size_t> pick(0, weyl.order() - 1);
    for (int t = 0; t < 10; t++) {
        CodeSubspace code = rotated_code(weyl.elements[pick(rng)]);
        PureState v = purify_code(code);
        ASSERT_TRUE(inner(v, v).is_one());
        ASSERT_TRUE(r_uniform_check(v, 2).uniform);
        ASSERT_TRUE(same_span(reduce_state(v).basis_vectors(), catalog::code332().basis_vectors()));
        ASSERT_TRUE(roundtrip(code).roundtrip_exact);
    }
}

TEST(correspondence, errors) {
    CodeSubspace small = CodeSubspace::from_basis({PureState::basis({3, 3}, {0, 0}, 12)});
    ASSERT_THROW(purify_code(small), std::invalid_argument);
    // |0000> contracts to one nonzero vector only.
    ASSERT_THROW(reduce_state(PureState::basis({3, 3, 3, 3}, {0, 0, 0, 0}, 12)), std::domain_error);
}
