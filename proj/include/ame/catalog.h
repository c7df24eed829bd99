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

#ifndef AME_CATALOG_H
#define AME_CATALOG_H

#include <array>
#include <vector>

#include "ame/qecc.h"

// Fixed objects of the four-qutrit AME / ((3,3,2))_3 setting, built exactly
// over Q(zeta_12) unless a conductor is given. omega = zeta_12^4.

namespace ame::catalog {

constexpr long kConductor = 12;

Cyclotomic omega(long conductor = kConductor);

/// (1/sqrt 3) * sum of the nine kets |i j (i+j) (2i+j)> from two orthogonal
/// Latin squares. Scaled so each <i|_0 |Phi> has unit norm: <Phi|Phi> = 3.
PureState phi(long conductor = kConductor);
/// phi() / sqrt(3), the unit-norm representative.
PureState phi_normalized(long conductor = kConductor);

/// s_1, s_2, s_3: the contractions <0|, <1|, <2| of phi() on site 0.
std::array<PureState, 3> code_basis(long conductor = kConductor);
/// The ((3,3,2))_3 code spanned by code_basis().
CodeSubspace code332(long conductor = kConductor);

/// X (x) X (x) X and Z (x) Z (x) Z on three qutrits.
std::vector<LocalOperator> stabilizer_generators(long conductor = kConductor);
/// X^(x4) and Z^(x4) on four qubits (conductor defaults to 24).
std::vector<LocalOperator> qubit_stabilizer_generators(long conductor = 24);

/// Reflection vectors e_1 = |2>, e_2 = (i/sqrt 3)(|0>+|1>+|2>), e_3 = |1>.
std::array<std::vector<Cyclotomic>, 3> reflection_vectors(long conductor = kConductor);
/// R_1, R_2, R_3 written out entry by entry (not via the reflection formula).
std::array<ExactMatrix, 3> weyl_generators_displayed(long conductor = kConductor);

/// Three operators in SU_3^(x3) preserving the code and mapping to R_1, R_2, R_3.
std::array<LocalOperator, 3> coset_representatives(long conductor = kConductor);

/// The five generators of the local symmetry group of phi(), in order:
/// I(x)X(x)X(x)X, I(x)Z(x)Z(x)Z, conj(R_1)(x)Q_1, conj(R_2)(x)Q_2, conj(R_3)(x)Q_3,
/// each written out as displayed rather than assembled.
std::array<LocalOperator, 5> local_symmetry_generators(long conductor = kConductor);

}  // namespace ame::catalog

#endif
