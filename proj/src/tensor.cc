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

#include "ame/tensor.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ame {

std::size_t total_dim(const Dims &dims) {
    std::size_t n = 1;
    for (auto d : dims) {
        n *= d;
    }
    return n;
}

namespace {

void check_dims(const Dims &dims) {
    if (dims.empty()) {
        throw std::invalid_argument("a state needs at least one site");
    }
    for (auto d : dims) {
        if (d == 0) {
            throw std::invalid_argument("local dimension must be positive");
        }
    }
}

// Stride of each site in the row-major amplitude array.
std::vector<std::size_t> strides(const Dims &dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        s[k - 1] = s[k] * dims[k];
    }
    return s;
}

}  // namespace

PureState::PureState(Dims dims, std::vector<Cyclotomic> amps) : dims_(std::move(dims)), amps_(std::move(amps)) {
    check_dims(dims_);
    if (amps_.size() != total_dim(dims_)) {
        throw std::invalid_argument(
            "state has " + std::to_string(amps_.size()) + " amplitudes, dims need " +
            std::to_string(total_dim(dims_)));
    }
    for (const auto &a : amps_) {
        if (a.conductor() != amps_[0].conductor()) {
            throw std::invalid_argument("state amplitudes have mixed conductors");
        }
    }
}

PureState PureState::zero(Dims dims, long conductor) {
    check_dims(dims);
    std::size_t n = total_dim(dims);
    return PureState(std::move(dims), std::vector<Cyclotomic>(n, Cyclotomic(conductor)));
}

PureState PureState::basis(Dims dims, const std::vector<std::size_t> &digits, long conductor) {
    if (digits.size() != dims.size()) {
        throw std::invalid_argument("basis ket has wrong number of digits");
    }
    std::size_t index = 0;
    for (std::size_t k = 0; k < dims.size(); k++) {
        if (digits[k] >= dims[k]) {
            throw std::out_of_range("basis digit out of range");
        }
        index = index * dims[k] + digits[k];
    }
    PureState s = zero(std::move(dims), conductor);
    s.amps_[index] = Cyclotomic(conductor, 1);
    return s;
}

PureState PureState::from_kets(const Dims &dims, const std::vector<std::string> &kets, const Cyclotomic &scale) {
    PureState s = zero(dims, scale.conductor());
    for (const auto &ket : kets) {
        std::vector<std::size_t> digits;
        for (char ch : ket) {
            digits.push_back(static_cast<std::size_t>(ch - '0'));
        }
        s = s + basis(dims, digits, scale.conductor());
    }
    return s * scale;
}

mpq_class PureState::norm2() const {
    Cyclotomic s(conductor());
    for (const auto &a : amps_) {
        if (!a.is_zero()) {
            s += a.conj() * a;
        }
    }
    return s.to_rational();
}

bool PureState::is_zero() const {
    return std::all_of(amps_.begin(), amps_.end(), [](const Cyclotomic &a) { return a.is_zero(); });
}

PureState PureState::operator+(const PureState &other) const {
    if (dims_ != other.dims_) {
        throw std::invalid_argument("adding states of different dims");
    }
    PureState r = *this;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        r.amps_[i] += other.amps_[i];
    }
    return r;
}

PureState PureState::operator-(const PureState &other) const {
    return *this + other * Cyclotomic(other.conductor(), -1);
}

PureState PureState::operator*(const Cyclotomic &scalar) const {
    PureState r = *this;
    for (auto &a : r.amps_) {
        if (!a.is_zero()) {
            a *= scalar;
        }
    }
    return r;
}

std::string PureState::str() const {
    std::ostringstream out;
    auto st = strides(dims_);
    bool first = true;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        if (amps_[i].is_zero()) {
            continue;
        }
        out << (first ? "" : " + ") << "(" << amps_[i].str() << ")|";
        for (std::size_t k = 0; k < dims_.size(); k++) {
            out << (i / st[k]) % dims_[k];
        }
        out << ">";
        first = false;
    }
    return first ? "0" : out.str();
}

LocalOperator::LocalOperator(Cyclotomic scalar, std::vector<ExactMatrix> factors)
    : scalar_(std::move(scalar)), factors_(std::move(factors)) {
    if (factors_.empty()) {
        throw std::invalid_argument("operator needs at least one factor");
    }
    for (const auto &f : factors_) {
        if (!f.is_square()) {
            throw std::invalid_argument("operator factors must be square");
        }
        if (f.conductor() != scalar_.conductor()) {
            throw std::invalid_argument("operator factor conductor differs from scalar conductor");
        }
    }
    canonicalize();
}

void LocalOperator::canonicalize() {
    bool zero = scalar_.is_zero();
    for (auto &f : factors_) {
        if (zero) {
            break;
        }
        const auto &entries = f.entries();
        auto lead = std::find_if(entries.begin(), entries.end(), [](const Cyclotomic &e) { return !e.is_zero(); });
        if (lead == entries.end()) {
            zero = true;
            break;
        }
        if (lead->is_one()) {
            continue;
        }
        Cyclotomic c = *lead;
        f = f * c.inverse();
        scalar_ *= c;
    }
    if (zero) {
        scalar_ = Cyclotomic(scalar_.conductor());
        for (auto &f : factors_) {
            f = ExactMatrix(f.rows(), f.cols(), scalar_.conductor());
        }
    }
}

LocalOperator LocalOperator::identity(const Dims &dims, long conductor) {
    std::vector<ExactMatrix> factors;
    for (auto d : dims) {
        factors.push_back(ExactMatrix::identity(d, conductor));
    }
    return LocalOperator(Cyclotomic(conductor, 1), std::move(factors));
}

LocalOperator LocalOperator::uniform(const ExactMatrix &factor, std::size_t sites) {
    return LocalOperator(Cyclotomic(factor.conductor(), 1), std::vector<ExactMatrix>(sites, factor));
}

Dims LocalOperator::dims() const {
    Dims d;
    for (const auto &f : factors_) {
        d.push_back(f.rows());
    }
    return d;
}

bool LocalOperator::is_zero() const {
    return scalar_.is_zero();
}

bool LocalOperator::is_identity() const {
    return scalar_.is_one() &&
           std::all_of(factors_.begin(), factors_.end(), [](const ExactMatrix &f) { return f.is_identity(); });
}

bool LocalOperator::is_invertible() const {
    if (scalar_.is_zero()) {
        return false;
    }
    for (const auto &f : factors_) {
        if (f.determinant().is_zero()) {
            return false;
        }
    }
    return true;
}

LocalOperator LocalOperator::operator*(const LocalOperator &other) const {
    if (factors_.size() != other.factors_.size()) {
        throw std::invalid_argument("operator product across different site counts");
    }
    std::vector<ExactMatrix> f;
    f.reserve(factors_.size());
    for (std::size_t k = 0; k < factors_.size(); k++) {
        f.push_back(factors_[k] * other.factors_[k]);
    }
    return LocalOperator(scalar_ * other.scalar_, std::move(f));
}

LocalOperator LocalOperator::inverse() const {
    std::vector<ExactMatrix> f;
    for (const auto &m : factors_) {
        f.push_back(m.inverse());
    }
    return LocalOperator(scalar_.inverse(), std::move(f));
}

LocalOperator LocalOperator::adjoint() const {
    std::vector<ExactMatrix> f;
    for (const auto &m : factors_) {
        f.push_back(m.adjoint());
    }
    return LocalOperator(scalar_.conj(), std::move(f));
}

LocalOperator LocalOperator::conj() const {
    std::vector<ExactMatrix> f;
    for (const auto &m : factors_) {
        f.push_back(m.conj());
    }
    return LocalOperator(scalar_.conj(), std::move(f));
}

ExactMatrix LocalOperator::to_dense() const {
    ExactMatrix m = factors_[0];
    for (std::size_t k = 1; k < factors_.size(); k++) {
        m = kron(m, factors_[k]);
    }
    return m * scalar_;
}

LocalOperator LocalOperator::tensor(const LocalOperator &other) const {
    std::vector<ExactMatrix> f = factors_;
    f.insert(f.end(), other.factors_.begin(), other.factors_.end());
    return LocalOperator(scalar_ * other.scalar_, std::move(f));
}

std::size_t LocalOperator::hash() const {
    std::size_t h = scalar_.hash();
    for (const auto &f : factors_) {
        h = h * 1000003u ^ f.hash();
    }
    return h;
}

std::string LocalOperator::str() const {
    std::ostringstream out;
    out << "(" << scalar_.str() << ")";
    for (const auto &f : factors_) {
        out << " (x) [";
        for (std::size_t r = 0; r < f.rows(); r++) {
            out << (r ? "; " : "");
            for (std::size_t c = 0; c < f.cols(); c++) {
                out << (c ? ", " : "") << f(r, c).str();
            }
        }
        out << "]";
    }
    return out.str();
}

DensityOperator DensityOperator::from_state(const PureState &v) {
    std::vector<std::size_t> all(v.num_sites());
    for (std::size_t k = 0; k < all.size(); k++) {
        all[k] = k;
    }
    return partial_trace(v, all);
}

bool DensityOperator::is_proportional_to_identity() const {
    const ExactMatrix &m = matrix;
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (r == c ? m(r, c) != m(0, 0) : !m(r, c).is_zero()) {
                return false;
            }
        }
    }
    return true;
}

Cyclotomic inner(const PureState &a, const PureState &b) {
    if (a.dims() != b.dims()) {
        throw std::invalid_argument("inner product of states with different dims");
    }
    return dot(a.amps(), b.amps());
}

PureState apply(const LocalOperator &op, const PureState &v) {
    if (op.dims() != v.dims()) {
        throw std::invalid_argument("operator dims do not match state dims");
    }
    const Dims &dims = v.dims();
    auto st = strides(dims);
    std::vector<Cyclotomic> cur = v.amps();
    std::vector<Cyclotomic> next(cur.size(), Cyclotomic(v.conductor()));
    for (std::size_t k = 0; k < dims.size(); k++) {
        const ExactMatrix &f = op.factors()[k];
        std::size_t d = dims[k];
        std::size_t stride = st[k];
        for (auto &e : next) {
            e = Cyclotomic(v.conductor());
        }
        for (std::size_t i = 0; i < cur.size(); i++) {
            if (cur[i].is_zero()) {
                continue;
            }
            std::size_t digit = (i / stride) % d;
            std::size_t base = i - digit * stride;
            for (std::size_t row = 0; row < d; row++) {
                const auto &e = f(row, digit);
                if (!e.is_zero()) {
                    next[base + row * stride] += e * cur[i];
                }
            }
        }
        std::swap(cur, next);
    }
    PureState out(dims, std::move(cur));
    return out * op.scalar();
}

namespace {

void check_keep(const std::vector<std::size_t> &keep, std::size_t sites) {
    if (keep.empty()) {
        throw std::invalid_argument("partial trace needs a nonempty keep set");
    }
    for (std::size_t i = 0; i < keep.size(); i++) {
        if (keep[i] >= sites || (i > 0 && keep[i] <= keep[i - 1])) {
            throw std::invalid_argument("keep set must be sorted, unique and within range");
        }
    }
}

// Splits a full index into (kept index, traced index).
struct SiteSplit {
    Dims kept_dims;
    std::vector<std::size_t> kept_of;
    std::vector<std::size_t> rest_of;

    SiteSplit(const Dims &dims, const std::vector<std::size_t> &keep) {
        std::vector<bool> is_kept(dims.size(), false);
        for (auto k : keep) {
            is_kept[k] = true;
            kept_dims.push_back(dims[k]);
        }
        auto st = strides(dims);
        std::size_t n = total_dim(dims);
        kept_of.resize(n);
        rest_of.resize(n);
        for (std::size_t i = 0; i < n; i++) {
            std::size_t a = 0, b = 0;
            for (std::size_t k = 0; k < dims.size(); k++) {
                std::size_t digit = (i / st[k]) % dims[k];
                if (is_kept[k]) {
                    a = a * dims[k] + digit;
                } else {
                    b = b * dims[k] + digit;
                }
            }
            kept_of[i] = a;
            rest_of[i] = b;
        }
    }
};

}  // namespace

DensityOperator partial_trace(const PureState &v, const std::vector<std::size_t> &keep) {
    check_keep(keep, v.num_sites());
    SiteSplit split(v.dims(), keep);
    std::size_t kd = total_dim(split.kept_dims);
    std::size_t rd = v.amps().size() / kd;
    // Reshape to kd x rd, then rho = A A^dagger.
    std::vector<std::vector<const Cyclotomic *>> rows(kd, std::vector<const Cyclotomic *>(rd, nullptr));
    for (std::size_t i = 0; i < v.amps().size(); i++) {
        rows[split.kept_of[i]][split.rest_of[i]] = &v.amp(i);
    }
    ExactMatrix rho(kd, kd, v.conductor());
    for (std::size_t a = 0; a < kd; a++) {
        for (std::size_t b = a; b < kd; b++) {
            Cyclotomic s(v.conductor());
            for (std::size_t r = 0; r < rd; r++) {
                const auto &x = *rows[a][r];
                const auto &y = *rows[b][r];
                if (!x.is_zero() && !y.is_zero()) {
                    s += x * y.conj();
                }
            }
            rho(b, a) = s.conj();
            rho(a, b) = std::move(s);
        }
    }
    return {split.kept_dims, std::move(rho)};
}

DensityOperator partial_trace(const DensityOperator &rho, const std::vector<std::size_t> &keep) {
    check_keep(keep, rho.dims.size());
    SiteSplit split(rho.dims, keep);
    std::size_t n = total_dim(rho.dims);
    std::size_t kd = total_dim(split.kept_dims);
    ExactMatrix out(kd, kd, rho.matrix.conductor());
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (split.rest_of[i] == split.rest_of[j] && !rho.matrix(i, j).is_zero()) {
                out(split.kept_of[i], split.kept_of[j]) += rho.matrix(i, j);
            }
        }
    }
    return {split.kept_dims, std::move(out)};
}

PureState contract_site(std::size_t bra_index, std::size_t site, const PureState &v) {
    const Dims &dims = v.dims();
    if (site >= dims.size()) {
        throw std::out_of_range("site " + std::to_string(site) + " out of range");
    }
    if (bra_index >= dims[site]) {
        throw std::out_of_range("bra index " + std::to_string(bra_index) + " out of range");
    }
    if (dims.size() < 2) {
        throw std::invalid_argument("contracting the only site leaves no state");
    }
    auto st = strides(dims);
    Dims rest;
    for (std::size_t k = 0; k < dims.size(); k++) {
        if (k != site) {
            rest.push_back(dims[k]);
        }
    }
    std::vector<Cyclotomic> amps;
    amps.reserve(v.amps().size() / dims[site]);
    std::size_t outer = v.amps().size() / (st[site] * dims[site]);
    for (std::size_t hi = 0; hi < outer; hi++) {
        for (std::size_t lo = 0; lo < st[site]; lo++) {
            amps.push_back(v.amp(hi * st[site] * dims[site] + bra_index * st[site] + lo));
        }
    }
    return PureState(std::move(rest), std::move(amps));
}

ExactMatrix matricize(const PureState &v, std::size_t site) {
    if (v.num_sites() < 2) {
        throw std::invalid_argument("matricize needs at least two sites");
    }
    std::vector<std::vector<Cyclotomic>> columns;
    for (std::size_t j = 0; j < v.dims().at(site); j++) {
        columns.push_back(contract_site(j, site, v).amps());
    }
    return ExactMatrix::from_columns(columns);
}

}  // namespace ame
