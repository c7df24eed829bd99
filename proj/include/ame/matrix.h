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

#ifndef AME_MATRIX_H
#define AME_MATRIX_H

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "ame/cyclotomic.h"

namespace ame {

/// Dense row-major matrix over Q(zeta_N).
class ExactMatrix {
   public:
    ExactMatrix(std::size_t rows, std::size_t cols, long conductor);
    ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries);

    static ExactMatrix identity(std::size_t n, long conductor);
    static ExactMatrix diagonal(const std::vector<Cyclotomic> &diag);
    /// Column vector.
    static ExactMatrix column(std::vector<Cyclotomic> entries);
    /// Horizontal concatenation of equal-length column vectors.
    static ExactMatrix from_columns(const std::vector<std::vector<Cyclotomic>> &columns);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    long conductor() const {
        return conductor_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Cyclotomic &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Cyclotomic &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    const std::vector<Cyclotomic> &entries() const {
        return data_;
    }
    std::vector<Cyclotomic> column_vector(std::size_t c) const;

    ExactMatrix transpose() const;
    ExactMatrix conj() const;
    ExactMatrix adjoint() const;
    Cyclotomic trace() const;
    Cyclotomic determinant() const;
    /// Throws std::domain_error if singular.
    ExactMatrix inverse() const;

    bool is_zero() const;
    bool is_identity() const;
    /// U^dagger U == I.
    bool is_unitary() const;
    /// Entry equals conj of its transpose partner everywhere.
    bool is_hermitian() const;

    ExactMatrix operator*(const ExactMatrix &other) const;
    ExactMatrix operator+(const ExactMatrix &other) const;
    ExactMatrix operator-(const ExactMatrix &other) const;
    ExactMatrix operator*(const Cyclotomic &scalar) const;
    bool operator==(const ExactMatrix &other) const;
    bool operator!=(const ExactMatrix &other) const {
        return !(*this == other);
    }

    std::size_t hash() const;
    std::string str() const;

   private:
    std::size_t rows_;
    std::size_t cols_;
    long conductor_;
    std::vector<Cyclotomic> data_;
};

ExactMatrix kron(const ExactMatrix &a, const ExactMatrix &b);

/// Reduced row echelon form. `pivots` receives the pivot column of each
/// nonzero row.
ExactMatrix rref(ExactMatrix m, std::vector<std::size_t> *pivots = nullptr);
std::size_t rank(const ExactMatrix &m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Cyclotomic>> nullspace(const ExactMatrix &m);
/// Solves a x = b for square nonsingular a; nullopt when singular.
std::optional<std::vector<Cyclotomic>> solve(const ExactMatrix &a, const std::vector<Cyclotomic> &b);

/// Sum of conj(a_k) b_k.
Cyclotomic dot(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b);
/// Gram-Schmidt followed by exact normalization. Drops dependent vectors.
/// Throws std::domain_error if some norm has no square root in the field.
std::vector<std::vector<Cyclotomic>> orthonormalize(const std::vector<std::vector<Cyclotomic>> &vectors);
/// True iff span(a) == span(b).
bool same_span(const std::vector<std::vector<Cyclotomic>> &a, const std::vector<std::vector<Cyclotomic>> &b);

}  // namespace ame

template <>
struct std::hash<ame::ExactMatrix> {
    std::size_t operator()(const ame::ExactMatrix &m) const {
        return m.hash();
    }
};

#endif
