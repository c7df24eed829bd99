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

#include "ame/catalog.h"

#include <stdexcept>

namespace ame::catalog {

namespace {

long require12(long conductor) {
    if (conductor % 12 != 0) {
        throw std::invalid_argument("catalog objects need a conductor divisible by 12");
    }
    return conductor;
}

Cyclotomic zeta12(long k, long conductor) {
    return Cyclotomic::root_of_unity(k * (conductor / 12), conductor);
}

Cyclotomic one(long conductor) {
    return Cyclotomic(conductor, 1);
}

ExactMatrix diag3(const Cyclotomic &a, const Cyclotomic &b, const Cyclotomic &c) {
    return ExactMatrix::diagonal({a, b, c});
}

// [[w,1,1],[1,w,1],[1,1,w]]
ExactMatrix omega_circulant(long conductor) {
    Cyclotomic w = omega(conductor);
    Cyclotomic o = one(conductor);
    return ExactMatrix(3, 3, {w, o, o, o, w, o, o, o, w});
}

}  // namespace

Cyclotomic omega(long conductor) {
    return zeta12(4, require12(conductor));
}

PureState phi(long conductor) {
    require12(conductor);
    return PureState::from_kets(
        {3, 3, 3, 3},
        {"0000", "0111", "0222", "1012", "1120", "1201", "2021", "2102", "2210"},
        inv_sqrt3(conductor));
}

PureState phi_normalized(long conductor) {
    return phi(conductor) * inv_sqrt3(conductor);
}

std::array<PureState, 3> code_basis(long conductor) {
    require12(conductor);
    Cyclotomic s = inv_sqrt3(conductor);
    Dims d{3, 3, 3};
    return {
        PureState::from_kets(d, {"000", "111", "222"}, s),
        PureState::from_kets(d, {"012", "120", "201"}, s),
        PureState::from_kets(d, {"021", "102", "210"}, s),
    };
}

CodeSubspace code332(long conductor) {
    auto b = code_basis(conductor);
    return CodeSubspace::from_basis({b[0], b[1], b[2]}, 2);
}

std::vector<LocalOperator> stabilizer_generators(long conductor) {
    return {
        LocalOperator::uniform(pauli_x(3, conductor), 3),
        LocalOperator::uniform(pauli_z(3, conductor), 3),
    };
}

std::vector<LocalOperator> qubit_stabilizer_generators(long conductor) {
    return {
        LocalOperator::uniform(pauli_x(2, conductor), 4),
        LocalOperator::uniform(pauli_z(2, conductor), 4),
    };
}

std::array<std::vector<Cyclotomic>, 3> reflection_vectors(long conductor) {
    require12(conductor);
    Cyclotomic z(conductor);
    Cyclotomic o = one(conductor);
    Cyclotomic e2 = zeta12(3, conductor) * inv_sqrt3(conductor);
    return {
        std::vector<Cyclotomic>{z, z, o},
        std::vector<Cyclotomic>{e2, e2, e2},
        std::vector<Cyclotomic>{z, o, z},
    };
}

std::array<ExactMatrix, 3> weyl_generators_displayed(long conductor) {
    require12(conductor);
    Cyclotomic o = one(conductor);
    Cyclotomic w = omega(conductor);
    ExactMatrix r2(3, 3, {o, w, w, w, o, w, w, w, o});
    return {
        diag3(o, o, w),
        r2 * (inv_sqrt3(conductor) * zeta12(1, conductor)),
        diag3(o, w, o),
    };
}

std::array<LocalOperator, 3> coset_representatives(long conductor) {
    require12(conductor);
    Cyclotomic o = one(conductor);
    Cyclotomic w = omega(conductor);
    Cyclotomic w2 = w * w;
    ExactMatrix m = omega_circulant(conductor);
    Cyclotomic inv_sqrt27 = inv_sqrt3(conductor) * mpq_class(1, 3);
    return {
        LocalOperator(w, {diag3(o, o, w2), diag3(o, w2, o), diag3(w2, o, o)}),
        LocalOperator(inv_sqrt27 * zeta12(1, conductor), {m, m, m}),
        LocalOperator(w, {diag3(w2, o, o), diag3(o, w2, o), diag3(o, o, w2)}),
    };
}

std::array<LocalOperator, 5> local_symmetry_generators(long conductor) {
    require12(conductor);
    Cyclotomic o = one(conductor);
    Cyclotomic w = omega(conductor);
    Cyclotomic w2 = w * w;
    ExactMatrix id = ExactMatrix::identity(3, conductor);
    ExactMatrix x = pauli_x(3, conductor);
    ExactMatrix z = pauli_z(3, conductor);
    ExactMatrix m = omega_circulant(conductor);
    return {
        LocalOperator(o, {id, x, x, x}),
        LocalOperator(o, {id, z, z, z}),
        LocalOperator(w, {diag3(o, o, w2), diag3(o, o, w2), diag3(o, w2, o), diag3(w2, o, o)}),
        LocalOperator(w2 * mpq_class(1, 9), {m, m, m, m}),
        LocalOperator(w, {diag3(o, w2, o), diag3(w2, o, o), diag3(o, w2, o), diag3(o, o, w2)}),
    };
}

}  // namespace ame::catalog
