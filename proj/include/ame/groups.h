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

#ifndef AME_GROUPS_H
#define AME_GROUPS_H

#include <cstddef>
#include <cstdint>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "ame/qecc.h"

namespace ame {

struct ClosureCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline ExactMatrix group_identity_like(const ExactMatrix &m) {
    return ExactMatrix::identity(m.rows(), m.conductor());
}
inline LocalOperator group_identity_like(const LocalOperator &op) {
    return LocalOperator::identity(op.dims(), op.conductor());
}

/// A finite group of exact matrices or factored operators, enumerated by
/// closure. Elements are stored in breadth-first discovery order.
template <typename T>
struct MatrixGroup {
    std::vector<T> generators;
    std::vector<T> elements;
    std::unordered_map<T, std::size_t> index;
    std::size_t cap = 0;

    std::size_t order() const {
        return elements.size();
    }
    bool contains(const T &x) const {
        return index.count(x) != 0;
    }
};

/// Breadth-first closure under right multiplication by the generators,
/// starting from the identity. Generators are visited in the given order and
/// the frontier is FIFO, so element order is reproducible.
/// Throws ClosureCapExceeded once more than `cap` elements are found.
template <typename T>
MatrixGroup<T> closure(std::vector<T> generators, std::size_t cap) {
    if (generators.empty()) {
        throw std::invalid_argument("closure needs at least one generator");
    }
    MatrixGroup<T> group;
    group.cap = cap;
    group.generators = std::move(generators);
    auto insert = [&](T x) {
        auto [it, fresh] = group.index.emplace(x, group.elements.size());
        if (!fresh) {
            return false;
        }
        if (group.elements.size() >= cap) {
            throw ClosureCapExceeded("closure exceeded cap of " + std::to_string(cap) + " elements");
        }
        group.elements.push_back(std::move(x));
        return true;
    };
    insert(group_identity_like(group.generators[0]));
    for (std::size_t head = 0; head < group.elements.size(); head++) {
        for (const auto &g : group.generators) {
            T next = group.elements[head] * g;
            insert(std::move(next));
        }
    }
    return group;
}

struct GroupAxiomReport {
    bool closed = true;
    bool has_inverses = true;
    std::size_t checked = 0;
};

/// Checks g*h and h^-1 membership for every generator g and `samples`
/// randomly chosen elements h.
template <typename T>
GroupAxiomReport verify_group_axioms(const MatrixGroup<T> &group, std::size_t samples, std::uint64_t seed) {
    GroupAxiomReport report;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, group.order() - 1);
    for (std::size_t s = 0; s < samples; s++) {
        const T &h = group.elements[pick(rng)];
        for (const auto &g : group.generators) {
            report.closed = report.closed && group.contains(g * h);
        }
        report.has_inverses = report.has_inverses && group.contains(h.inverse());
        report.checked++;
    }
    return report;
}

using CodeGate = ExactMatrix;

struct ReflectionSpec {
    std::vector<Cyclotomic> vector;
    long order = 2;
};

/// I - (1 - zeta_d) a a^dagger / (a^dagger a). Needs d | conductor.
CodeGate reflection(const ReflectionSpec &spec);

/// Eigenvalue multiset {1, ..., 1, zeta} check: rank(M - I) == 1 and
/// trace(M) == (n - 1) + zeta for some root of unity zeta != 1 of order | conductor.
bool is_complex_reflection(const CodeGate &m);

/// Closure of the three order-3 reflections in the standard reflection vectors.
MatrixGroup<ExactMatrix> weyl_group(std::size_t cap = 6480, long conductor = 12);

/// mu(g)_ij = <u_i|g|u_j>. Throws std::domain_error if g does not map the
/// code into itself, which is decided by an exact solve against the Gram matrix.
CodeGate mu_matrix(const LocalOperator &g, const CodeSubspace &code);

/// True iff scalar * (x) factors lies in SU_d^(x n): every factor is a positive
/// multiple of a unitary and scalar^d * prod det(factor) == 1.
bool is_special_unitary(const LocalOperator &op);
/// True iff scalar^d * prod det(factor) == 1 (all local dims equal to d).
bool is_special_linear(const LocalOperator &op);

struct CosetMismatch {
    std::size_t representative;
    std::size_t row;
    std::size_t col;
    std::string expected;
    std::string actual;
};

struct CosetReport {
    bool ok = false;
    std::vector<bool> mu_matches;
    std::vector<bool> special_unitary;
    std::vector<CosetMismatch> mismatches;
    std::vector<std::string> errors;
};

CosetReport verify_coset_representatives(
    const std::vector<LocalOperator> &representatives,
    const std::vector<ExactMatrix> &targets,
    const CodeSubspace &code);
/// The catalogued representatives against the displayed R_1, R_2, R_3.
CosetReport verify_coset_representatives();

/// Closure of mu(g) over g in {X^(x3), Z^(x3), Q_1, Q_2, Q_3}.
MatrixGroup<ExactMatrix> transversal_group(const CodeSubspace &code, std::size_t cap = 6480);

/// Closure of X^(x3), Z^(x3), Q_1, Q_2, Q_3 as three-site operators: the
/// code normalizer N(C) inside SL_3^(x3).
MatrixGroup<LocalOperator> code_normalizer_group(std::size_t cap = 58320);

/// conj(mu(T')) (x) T' for T' the rescaling of `t` that makes mu(T')
/// unitary. Throws std::domain_error if mu(t) is not a multiple of a unitary.
/// The map is three-to-one on N(C): t and omega * t have the same image.
LocalOperator symmetry_lift(const LocalOperator &t, const CodeSubspace &code);

/// Closure of the five four-site generators. Throws std::domain_error if a
/// generator does not fix phi().
MatrixGroup<LocalOperator> local_symmetry_group(std::size_t cap = 58320);

struct SymmetryFormReport {
    bool fixes_phi = false;
    /// mu(A_1 (x) A_2 (x) A_3) == (lambda A_0^T)^-1.
    bool inverse_transpose_identity = false;
    /// element == conj(mu(T')) (x) T' for T' the unitary rescaling of the three-site part.
    bool conjugate_form = false;
    std::string error;
};

SymmetryFormReport check_symmetry_form(const LocalOperator &element, const CodeSubspace &code, const PureState &phi);

struct CentralizerReport {
    std::size_t order = 0;
    bool fixes_code_pointwise = false;
    bool special_linear = false;
    bool generators_commute = false;
    bool order_consistent = false;
    bool ok() const {
        return order == 9 && fixes_code_pointwise && special_linear && generators_commute && order_consistent;
    }
};

/// Checks that the stabilizer group is a centralizer of the code: order 9,
/// fixes every codeword, lies in SL_3^(x3) and commutes.
/// `normalizer_order` and `weyl_order` are the computed orders of N(C) and
/// W(C); their quotient must equal the centralizer order.
CentralizerReport centralizer_containment_check(std::size_t normalizer_order = 5832, std::size_t weyl_order = 648);

}  // namespace ame

#endif
