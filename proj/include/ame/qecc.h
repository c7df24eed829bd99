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

#ifndef AME_QECC_H
#define AME_QECC_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ame/tensor.h"

namespace ame {

/// X|i> = |i+1 mod D>.
ExactMatrix pauli_x(std::size_t local_dim, long conductor);
/// Z|i> = xi^i |i>, xi = exp(2 pi i / D).
ExactMatrix pauli_z(std::size_t local_dim, long conductor);
/// X^a Z^b.
ExactMatrix pauli_xz(std::size_t local_dim, std::size_t a, std::size_t b, long conductor);

bool is_prime(std::size_t n);

/// A K-dimensional subspace of (C^D)^(x n) with an orthonormal basis.
struct CodeSubspace {
    std::size_t n = 0;
    std::size_t local_dim = 0;
    std::vector<PureState> basis;
    std::optional<std::size_t> claimed_distance;

    /// Validates dims and exact orthonormality; throws std::invalid_argument
    /// naming the failing check.
    static CodeSubspace from_basis(std::vector<PureState> basis, std::optional<std::size_t> claimed_distance = {});

    std::size_t dimension() const {
        return basis.size();
    }
    long conductor() const {
        return basis.at(0).conductor();
    }
    std::vector<std::vector<Cyclotomic>> basis_vectors() const;
};

/// A tensor product of single-site Pauli products X^a Z^b.
struct ErrorBasisElement {
    LocalOperator op;
    std::vector<std::pair<std::size_t, std::size_t>> exponents;

    /// Number of non-identity sites, recomputed from the exponents.
    std::size_t weight() const;
    /// "(a,b)(a,b)..." per site.
    std::string label() const;
};

/// Every Pauli product of weight <= max_weight, identity first, then by
/// increasing weight; within a weight, lexicographic in (support, exponents).
std::vector<ErrorBasisElement> pauli_error_basis(std::size_t n, std::size_t local_dim, std::size_t max_weight, long conductor);

struct KlViolation {
    std::string error_label;
    std::size_t i;
    std::size_t j;
    Cyclotomic value;
};

struct KlReport {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t d = 0;
    std::size_t local_dim = 0;
    bool is_code = false;
    bool is_pure = false;
    /// c(E) = <u_0|E|u_0> per error label, in sweep order.
    std::vector<std::pair<std::string, Cyclotomic>> c_table;
    std::vector<KlViolation> violations;
};

/// Knill-Laflamme conditions <u_i|E|u_j> = c(E) delta_ij for all wt(E) < d.
KlReport kl_check(const CodeSubspace &code, std::size_t d);

/// Largest d with kl_check(code, d).is_code, searched upward from 1 and
/// capped at n + 1 (reached e.g. by one-dimensional codes).
std::size_t distance(const CodeSubspace &code);

struct UniformityReport {
    bool uniform = false;
    std::vector<std::size_t> worst_subset;
    /// Largest |entry| of rho_S - I/D^r over the worst subset, in floating point.
    double worst_deviation = 0;
};

/// True iff every r-site reduction of |v><v|/<v|v> equals I / prod(d).
UniformityReport r_uniform_check(const PureState &v, std::size_t r);

/// log_D K <= n - 2(d-1), evaluated exactly as K * D^(2(d-1)) <= D^n.
bool singleton_check(std::size_t n, std::size_t k, std::size_t d, std::size_t local_dim);
/// K * D^(2(d-1)) == D^n.
bool singleton_saturated(std::size_t n, std::size_t k, std::size_t d, std::size_t local_dim);

/// Simultaneous +1 eigenspace of the generators, orthonormalized exactly.
CodeSubspace stabilizer_subspace(const std::vector<LocalOperator> &generators);

}  // namespace ame

#endif
