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

#ifndef AME_TENSOR_H
#define AME_TENSOR_H

#include <cstddef>
#include <string>
#include <vector>

#include "ame/cyclotomic.h"
#include "ame/matrix.h"

namespace ame {

// Sites are numbered from 0. Site 0 is the slowest-varying index of the
// amplitude array, so contracting <i| on site 0 picks out a contiguous block.

using Dims = std::vector<std::size_t>;

std::size_t total_dim(const Dims &dims);

/// Exact amplitude tensor over sites of local dimensions `dims`.
class PureState {
   public:
    PureState(Dims dims, std::vector<Cyclotomic> amps);
    static PureState zero(Dims dims, long conductor);
    /// |digits[0] digits[1] ...>.
    static PureState basis(Dims dims, const std::vector<std::size_t> &digits, long conductor);
    /// Sum of basis kets written as digit strings ("0121"), times `scale`.
    static PureState from_kets(const Dims &dims, const std::vector<std::string> &kets, const Cyclotomic &scale);

    const Dims &dims() const {
        return dims_;
    }
    std::size_t num_sites() const {
        return dims_.size();
    }
    long conductor() const {
        return amps_[0].conductor();
    }
    const std::vector<Cyclotomic> &amps() const {
        return amps_;
    }
    const Cyclotomic &amp(std::size_t index) const {
        return amps_[index];
    }

    /// <v|v> as an exact rational. Throws std::domain_error when <v|v> is an
    /// irrational real of the field, e.g. 1 + sqrt(3).
    mpq_class norm2() const;
    bool is_zero() const;

    PureState operator+(const PureState &other) const;
    PureState operator-(const PureState &other) const;
    PureState operator*(const Cyclotomic &scalar) const;
    bool operator==(const PureState &other) const {
        return dims_ == other.dims_ && amps_ == other.amps_;
    }
    bool operator!=(const PureState &other) const {
        return !(*this == other);
    }

    std::string str() const;

   private:
    Dims dims_;
    std::vector<Cyclotomic> amps_;
};

/// scalar * (factor_0 (x) factor_1 (x) ...), kept factored.
///
/// Canonical form: every factor's first nonzero entry (row-major scan) is 1,
/// with the removed multiplier folded into `scalar`. Two canonical operators
/// are equal as linear maps iff their scalars and factors are equal. The
/// zero operator is canonicalized to scalar 0 with all-zero factors.
class LocalOperator {
   public:
    LocalOperator(Cyclotomic scalar, std::vector<ExactMatrix> factors);

    static LocalOperator identity(const Dims &dims, long conductor);
    /// Same matrix on every site.
    static LocalOperator uniform(const ExactMatrix &factor, std::size_t sites);

    const Cyclotomic &scalar() const {
        return scalar_;
    }
    const std::vector<ExactMatrix> &factors() const {
        return factors_;
    }
    std::size_t num_sites() const {
        return factors_.size();
    }
    Dims dims() const;
    long conductor() const {
        return scalar_.conductor();
    }

    bool is_zero() const;
    bool is_identity() const;
    /// All factors invertible and scalar nonzero.
    bool is_invertible() const;

    LocalOperator operator*(const LocalOperator &other) const;
    LocalOperator inverse() const;
    LocalOperator adjoint() const;
    /// Entrywise complex conjugate.
    LocalOperator conj() const;
    /// Full prod(d) x prod(d) matrix. Only for small operators.
    ExactMatrix to_dense() const;
    /// Tensor product with another operator, other's sites appended.
    LocalOperator tensor(const LocalOperator &other) const;

    bool operator==(const LocalOperator &other) const {
        return scalar_ == other.scalar_ && factors_ == other.factors_;
    }
    bool operator!=(const LocalOperator &other) const {
        return !(*this == other);
    }
    std::size_t hash() const;
    std::string str() const;

   private:
    void canonicalize();

    Cyclotomic scalar_;
    std::vector<ExactMatrix> factors_;
};

/// Exact density operator on a list of sites.
struct DensityOperator {
    Dims dims;
    ExactMatrix matrix;

    static DensityOperator from_state(const PureState &v);
    Cyclotomic trace() const {
        return matrix.trace();
    }
    /// True iff matrix == c * I for some scalar c.
    bool is_proportional_to_identity() const;
};

/// sum_k conj(a_k) b_k.
Cyclotomic inner(const PureState &a, const PureState &b);
/// op |v>, contracting one site at a time.
PureState apply(const LocalOperator &op, const PureState &v);
/// Reduced density operator of |v><v| on `keep` (sorted, unique, nonempty).
DensityOperator partial_trace(const PureState &v, const std::vector<std::size_t> &keep);
DensityOperator partial_trace(const DensityOperator &rho, const std::vector<std::size_t> &keep);
/// <bra_index|_site |v>, an (n-1)-site state.
PureState contract_site(std::size_t bra_index, std::size_t site, const PureState &v);
/// prod_{i != site} d_i x d_site matrix whose column j is contract_site(j, site, v).
ExactMatrix matricize(const PureState &v, std::size_t site);

}  // namespace ame

template <>
struct std::hash<ame::LocalOperator> {
    std::size_t operator()(const ame::LocalOperator &op) const {
        return op.hash();
    }
};

#endif
