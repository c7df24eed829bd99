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

#include "ame/matrix.h"

#include <sstream>
#include <stdexcept>

namespace ame {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, long conductor)
    : rows_(rows), cols_(cols), conductor_(conductor), data_(rows * cols, Cyclotomic(conductor)) {
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<Cyclotomic> entries)
    : rows_(rows), cols_(cols), conductor_(0), data_(std::move(entries)) {
    if (data_.size() != rows * cols || data_.empty()) {
        throw std::invalid_argument(
            "matrix shape " + std::to_string(rows) + "x" + std::to_string(cols) + " does not match " +
            std::to_string(data_.size()) + " entries");
    }
    conductor_ = data_[0].conductor();
    for (const auto &e : data_) {
        if (e.conductor() != conductor_) {
            throw std::invalid_argument("matrix entries have mixed conductors");
        }
    }
}

ExactMatrix ExactMatrix::identity(std::size_t n, long conductor) {
    ExactMatrix m(n, n, conductor);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = Cyclotomic(conductor, 1);
    }
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic> &diag) {
    if (diag.empty()) {
        throw std::invalid_argument("empty diagonal");
    }
    ExactMatrix m(diag.size(), diag.size(), diag[0].conductor());
    for (std::size_t i = 0; i < diag.size(); i++) {
        m(i, i) = diag[i];
    }
    return m;
}

ExactMatrix ExactMatrix::column(std::vector<Cyclotomic> entries) {
    std::size_t n = entries.size();
    return ExactMatrix(n, 1, std::move(entries));
}

ExactMatrix ExactMatrix::from_columns(const std::vector<std::vector<Cyclotomic>> &columns) {
    if (columns.empty() || columns[0].empty()) {
        throw std::invalid_argument("from_columns needs at least one nonempty column");
    }
    std::size_t rows = columns[0].size();
    ExactMatrix m(rows, columns.size(), columns[0][0].conductor());
    for (std::size_t c = 0; c < columns.size(); c++) {
        if (columns[c].size() != rows) {
            throw std::invalid_argument("columns have different lengths");
        }
        for (std::size_t r = 0; r < rows; r++) {
            m(r, c) = columns[c][r];
        }
    }
    return m;
}

std::vector<Cyclotomic> ExactMatrix::column_vector(std::size_t c) const {
    std::vector<Cyclotomic> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        v.push_back((*this)(r, c));
    }
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, conductor_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

ExactMatrix ExactMatrix::conj() const {
    ExactMatrix t = *this;
    for (auto &e : t.data_) {
        e = e.conj();
    }
    return t;
}

ExactMatrix ExactMatrix::adjoint() const {
    return transpose().conj();
}

Cyclotomic ExactMatrix::trace() const {
    Cyclotomic t(conductor_);
    for (std::size_t i = 0; i < std::min(rows_, cols_); i++) {
        t += (*this)(i, i);
    }
    return t;
}

Cyclotomic ExactMatrix::determinant() const {
    if (!is_square()) {
        throw std::invalid_argument("determinant of a non-square matrix");
    }
    ExactMatrix m = *this;
    Cyclotomic det(conductor_, 1);
    for (std::size_t col = 0; col < cols_; col++) {
        std::size_t pivot = col;
        while (pivot < rows_ && m(pivot, col).is_zero()) {
            pivot++;
        }
        if (pivot == rows_) {
            return Cyclotomic(conductor_);
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < cols_; c++) {
                std::swap(m(pivot, c), m(col, c));
            }
            det = -det;
        }
        det *= m(col, col);
        Cyclotomic inv = m(col, col).inverse();
        for (std::size_t r = col + 1; r < rows_; r++) {
            if (m(r, col).is_zero()) {
                continue;
            }
            Cyclotomic f = m(r, col) * inv;
            for (std::size_t c = col; c < cols_; c++) {
                if (!m(col, c).is_zero()) {
                    m(r, c) -= f * m(col, c);
                }
            }
        }
    }
    return det;
}

ExactMatrix ExactMatrix::inverse() const {
    if (!is_square()) {
        throw std::invalid_argument("inverse of a non-square matrix");
    }
    std::size_t n = rows_;
    ExactMatrix aug(n, 2 * n, conductor_);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            aug(r, c) = (*this)(r, c);
        }
        aug(r, n + r) = Cyclotomic(conductor_, 1);
    }
    std::vector<std::size_t> pivots;
    ExactMatrix red = rref(aug, &pivots);
    if (pivots.size() < n || pivots[n - 1] != n - 1) {
        throw std::domain_error("matrix is singular");
    }
    ExactMatrix inv(n, n, conductor_);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            inv(r, c) = red(r, n + c);
        }
    }
    return inv;
}

bool ExactMatrix::is_zero() const {
    for (const auto &e : data_) {
        if (!e.is_zero()) {
            return false;
        }
    }
    return true;
}

bool ExactMatrix::is_identity() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            const auto &e = (*this)(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool ExactMatrix::is_unitary() const {
    return is_square() && (adjoint() * *this).is_identity();
}

bool ExactMatrix::is_hermitian() const {
    return is_square() && adjoint() == *this;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix &other) const {
    if (cols_ != other.rows_) {
        throw std::invalid_argument("matrix product shape mismatch");
    }
    if (conductor_ != other.conductor_) {
        throw std::invalid_argument("matrix product conductor mismatch");
    }
    ExactMatrix out(rows_, other.cols_, conductor_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t k = 0; k < cols_; k++) {
            const auto &a = (*this)(r, k);
            if (a.is_zero()) {
                continue;
            }
            for (std::size_t c = 0; c < other.cols_; c++) {
                const auto &b = other(k, c);
                if (!b.is_zero()) {
                    out(r, c) += a * b;
                }
            }
        }
    }
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix sum shape mismatch");
    }
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); i++) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw std::invalid_argument("matrix difference shape mismatch");
    }
    ExactMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); i++) {
        out.data_[i] -= other.data_[i];
    }
    return out;
}

ExactMatrix ExactMatrix::operator*(const Cyclotomic &scalar) const {
    ExactMatrix out = *this;
    for (auto &e : out.data_) {
        if (!e.is_zero()) {
            e *= scalar;
        }
    }
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix &other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::size_t ExactMatrix::hash() const {
    std::size_t h = rows_ * 131u + cols_;
    for (const auto &e : data_) {
        h = h * 1000003u ^ e.hash();
    }
    return h;
}

std::string ExactMatrix::str() const {
    std::ostringstream out;
    for (std::size_t r = 0; r < rows_; r++) {
        out << "[";
        for (std::size_t c = 0; c < cols_; c++) {
            out << (c ? ", " : "") << (*this)(r, c).str();
        }
        out << "]\n";
    }
    return out.str();
}

ExactMatrix kron(const ExactMatrix &a, const ExactMatrix &b) {
    ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.conductor());
    for (std::size_t ar = 0; ar < a.rows(); ar++) {
        for (std::size_t ac = 0; ac < a.cols(); ac++) {
            if (a(ar, ac).is_zero()) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); br++) {
                for (std::size_t bc = 0; bc < b.cols(); bc++) {
                    if (!b(br, bc).is_zero()) {
                        out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
                    }
                }
            }
        }
    }
    return out;
}

ExactMatrix rref(ExactMatrix m, std::vector<std::size_t> *pivots) {
    std::vector<std::size_t> piv;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); col++) {
        std::size_t p = row;
        while (p < m.rows() && m(p, col).is_zero()) {
            p++;
        }
        if (p == m.rows()) {
            continue;
        }
        if (p != row) {
            for (std::size_t c = 0; c < m.cols(); c++) {
                std::swap(m(p, c), m(row, c));
            }
        }
        Cyclotomic inv = m(row, col).inverse();
        for (std::size_t c = col; c < m.cols(); c++) {
            if (!m(row, c).is_zero()) {
                m(row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < m.rows(); r++) {
            if (r == row || m(r, col).is_zero()) {
                continue;
            }
            Cyclotomic f = m(r, col);
            for (std::size_t c = col; c < m.cols(); c++) {
                if (!m(row, c).is_zero()) {
                    m(r, c) -= f * m(row, c);
                }
            }
        }
        piv.push_back(col);
        row++;
    }
    if (pivots) {
        *pivots = std::move(piv);
    }
    return m;
}

std::size_t rank(const ExactMatrix &m) {
    std::vector<std::size_t> pivots;
    rref(m, &pivots);
    return pivots.size();
}

std::vector<std::vector<Cyclotomic>> nullspace(const ExactMatrix &m) {
    std::vector<std::size_t> pivots;
    ExactMatrix red = rref(m, &pivots);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) {
        is_pivot[p] = true;
    }
    std::vector<std::vector<Cyclotomic>> basis;
    for (std::size_t free = 0; free < m.cols(); free++) {
        if (is_pivot[free]) {
            continue;
        }
        std::vector<Cyclotomic> v(m.cols(), Cyclotomic(m.conductor()));
        v[free] = Cyclotomic(m.conductor(), 1);
        for (std::size_t r = 0; r < pivots.size(); r++) {
            v[pivots[r]] = -red(r, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Cyclotomic>> solve(const ExactMatrix &a, const std::vector<Cyclotomic> &b) {
    if (!a.is_square() || b.size() != a.rows()) {
        throw std::invalid_argument("solve needs a square system");
    }
    std::size_t n = a.rows();
    ExactMatrix aug(n, n + 1, a.conductor());
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            aug(r, c) = a(r, c);
        }
        aug(r, n) = b[r];
    }
    std::vector<std::size_t> pivots;
    ExactMatrix red = rref(aug, &pivots);
    if (pivots.size() != n || pivots.back() != n - 1) {
        return std::nullopt;
    }
    std::vector<Cyclotomic> x;
    x.reserve(n);
    for (std::size_t r = 0; r < n; r++) {
        x.push_back(red(r, n));
    }
    return x;
}

Cyclotomic dot(const std::vector<Cyclotomic> &a, const std::vector<Cyclotomic> &b) {
    if (a.size() != b.size() || a.empty()) {
        throw std::invalid_argument("dot product of mismatched or empty vectors");
    }
    Cyclotomic s(a[0].conductor());
    for (std::size_t i = 0; i < a.size(); i++) {
        if (!a[i].is_zero() && !b[i].is_zero()) {
            s += a[i].conj() * b[i];
        }
    }
    return s;
}

std::vector<std::vector<Cyclotomic>> orthonormalize(const std::vector<std::vector<Cyclotomic>> &vectors) {
    std::vector<std::vector<Cyclotomic>> ortho;
    std::vector<Cyclotomic> norms;
    for (const auto &v : vectors) {
        std::vector<Cyclotomic> w = v;
        for (std::size_t k = 0; k < ortho.size(); k++) {
            Cyclotomic f = dot(ortho[k], w) / norms[k];
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t i = 0; i < w.size(); i++) {
                w[i] -= f * ortho[k][i];
            }
        }
        Cyclotomic n2 = dot(w, w);
        if (n2.is_zero()) {
            continue;
        }
        ortho.push_back(std::move(w));
        norms.push_back(n2);
    }
    for (std::size_t k = 0; k < ortho.size(); k++) {
        auto root = sqrt_rational(norms[k].to_rational(), norms[k].conductor());
        if (!root) {
            throw std::domain_error(
                "norm^2 = " + norms[k].str() + " has no square root in Q(zeta_" +
                std::to_string(norms[k].conductor()) + ")");
        }
        Cyclotomic inv = root->inverse();
        for (auto &e : ortho[k]) {
            e *= inv;
        }
    }
    return ortho;
}

bool same_span(const std::vector<std::vector<Cyclotomic>> &a, const std::vector<std::vector<Cyclotomic>> &b) {
    if (a.empty() || b.empty()) {
        return a.empty() && b.empty();
    }
    std::size_t ra = rank(ExactMatrix::from_columns(a));
    std::size_t rb = rank(ExactMatrix::from_columns(b));
    if (ra != rb) {
        return false;
    }
    std::vector<std::vector<Cyclotomic>> both = a;
    both.insert(both.end(), b.begin(), b.end());
    return rank(ExactMatrix::from_columns(both)) == ra;
}

}  // namespace ame
