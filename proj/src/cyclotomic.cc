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

#include "ame/cyclotomic.h"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ame {

namespace {

using Poly = std::vector<long>;

Poly poly_mul(const Poly &a, const Poly &b) {
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

// Exact division by a monic polynomial.
Poly poly_div_monic(Poly num, const Poly &den) {
    std::size_t dn = den.size() - 1;
    Poly q(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        long c = num[k];
        q[k - dn] = c;
        for (std::size_t j = 0; j <= dn; j++) {
            num[k - dn + j] -= c * den[j];
        }
    }
    for (long c : num) {
        if (c != 0) {
            throw std::logic_error("cyclotomic polynomial division left a remainder");
        }
    }
    return q;
}

Poly cyclotomic_polynomial(long n) {
    Poly xn(n + 1, 0);
    xn[0] = -1;
    xn[n] = 1;
    Poly den{1};
    for (long d = 1; d < n; d++) {
        if (n % d == 0) {
            den = poly_mul(den, cyclotomic_polynomial(d));
        }
    }
    return poly_div_monic(xn, den);
}

std::size_t hash_mpz(const mpz_class &z) {
    std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t()));
    if (mpz_size(z.get_mpz_t()) > 0) {
        h = h * 1000003u ^ static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), 0));
    }
    return h * 31u + static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
}

}  // namespace

long euler_phi(long n) {
    if (n < 1) {
        throw std::invalid_argument("euler_phi requires n >= 1");
    }
    long result = n;
    long m = n;
    for (long p = 2; p * p <= m; p++) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

CyclotomicField::CyclotomicField(long conductor)
    : conductor_(conductor), degree_(static_cast<int>(euler_phi(conductor))), modulus_(cyclotomic_polynomial(conductor)) {
    std::size_t table = std::max<std::size_t>(conductor_, 2 * static_cast<std::size_t>(degree_));
    std::vector<Poly> dense(table, Poly(degree_, 0));
    for (std::size_t k = 0; k < table; k++) {
        if (k < static_cast<std::size_t>(degree_)) {
            dense[k][k] = 1;
            continue;
        }
        // x^k = x * x^(k-1); fold the x^degree term back through Phi_N.
        const Poly &prev = dense[k - 1];
        long top = prev[degree_ - 1];
        for (int i = degree_ - 1; i > 0; i--) {
            dense[k][i] = prev[i - 1];
        }
        dense[k][0] = 0;
        for (int i = 0; i < degree_; i++) {
            dense[k][i] -= top * modulus_[i];
        }
    }
    powers_.resize(table);
    for (std::size_t k = 0; k < table; k++) {
        for (int i = 0; i < degree_; i++) {
            if (dense[k][i] != 0) {
                powers_[k].push_back({i, dense[k][i]});
            }
        }
    }
    for (long k = 2; k < conductor_; k++) {
        if (std::gcd(k, conductor_) == 1) {
            units_.push_back(k);
        }
    }
}

const CyclotomicField &CyclotomicField::get(long conductor) {
    if (conductor < 1) {
        throw std::invalid_argument("conductor must be positive, got " + std::to_string(conductor));
    }
    // Fields are never destroyed, so a per-thread memo of the last lookup
    // avoids taking the lock on the hot path.
    thread_local const CyclotomicField *last = nullptr;
    if (last != nullptr && last->conductor_ == conductor) {
        return *last;
    }
    static std::mutex mutex;
    static std::map<long, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard<std::mutex> lock(mutex);
    auto &slot = registry[conductor];
    if (!slot) {
        slot.reset(new CyclotomicField(conductor));
    }
    last = slot.get();
    return *slot;
}

Cyclotomic::Cyclotomic(long conductor)
    : field_(&CyclotomicField::get(conductor)), coeffs_(field_->degree()) {
}

Cyclotomic::Cyclotomic(long conductor, const mpq_class &rational) : Cyclotomic(conductor) {
    coeffs_[0] = rational;
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(long conductor, long numerator, long denominator) : Cyclotomic(conductor) {
    if (denominator == 0) {
        throw std::domain_error("zero denominator");
    }
    coeffs_[0] = mpq_class(numerator, denominator);
    coeffs_[0].canonicalize();
}

Cyclotomic Cyclotomic::from_coeffs(long conductor, std::vector<mpq_class> coeffs) {
    const auto &field = CyclotomicField::get(conductor);
    if (coeffs.size() != static_cast<std::size_t>(field.degree())) {
        throw std::invalid_argument(
            "conductor " + std::to_string(conductor) + " needs " + std::to_string(field.degree()) +
            " coefficients, got " + std::to_string(coeffs.size()));
    }
    for (auto &c : coeffs) {
        c.canonicalize();
    }
    return Cyclotomic(&field, std::move(coeffs));
}

Cyclotomic Cyclotomic::root_of_unity(long k, long conductor) {
    Cyclotomic result(conductor);
    long r = ((k % conductor) + conductor) % conductor;
    for (const auto &t : result.field_->power(r)) {
        result.coeffs_[t.index] = t.coeff;
    }
    return result;
}

bool Cyclotomic::is_zero() const {
    for (const auto &c : coeffs_) {
        if (sgn(c) != 0) {
            return false;
        }
    }
    return true;
}

bool Cyclotomic::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); i++) {
        if (sgn(coeffs_[i]) != 0) {
            return false;
        }
    }
    return true;
}

bool Cyclotomic::is_one() const {
    return is_rational() && coeffs_[0] == 1;
}

mpq_class Cyclotomic::to_rational() const {
    if (!is_rational()) {
        throw std::domain_error("not a rational: " + str());
    }
    return coeffs_[0];
}

void Cyclotomic::require_same_field(const Cyclotomic &other) const {
    if (field_ != other.field_) {
        throw std::invalid_argument(
            "conductor mismatch: " + std::to_string(conductor()) + " vs " + std::to_string(other.conductor()));
    }
}

Cyclotomic Cyclotomic::galois(long k) const {
    long n = conductor();
    long r = ((k % n) + n) % n;
    if (std::gcd(r, n) != 1) {
        throw std::invalid_argument("galois exponent must be a unit mod the conductor");
    }
    Cyclotomic result(n);
    for (std::size_t j = 0; j < coeffs_.size(); j++) {
        if (sgn(coeffs_[j]) == 0) {
            continue;
        }
        for (const auto &t : field_->power((j * r) % n)) {
            result.coeffs_[t.index] += coeffs_[j] * t.coeff;
        }
    }
    return result;
}

Cyclotomic Cyclotomic::conj() const {
    if (is_rational()) {
        return *this;
    }
    return galois(conductor() - 1);
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) {
        throw std::domain_error("division by zero in Q(zeta_" + std::to_string(conductor()) + ")");
    }
    if (is_rational()) {
        Cyclotomic r(field_, std::vector<mpq_class>(coeffs_.size()));
        r.coeffs_[0] = 1 / coeffs_[0];
        return r;
    }
    // a * prod_{k != 1} sigma_k(a) is the field norm, a rational.
    Cyclotomic others(conductor(), 1);
    for (long k : field_->nontrivial_units()) {
        others *= galois(k);
    }
    mpq_class norm = (*this * others).to_rational();
    others *= mpq_class(1 / norm);
    return others;
}

std::complex<double> Cyclotomic::to_complex() const {
    std::complex<double> total = 0;
    double n = static_cast<double>(conductor());
    for (std::size_t j = 0; j < coeffs_.size(); j++) {
        if (sgn(coeffs_[j]) != 0) {
            double angle = 2 * std::numbers::pi * static_cast<double>(j) / n;
            total += coeffs_[j].get_d() * std::polar(1.0, angle);
        }
    }
    return total;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); j++) {
        if (sgn(coeffs_[j]) == 0) {
            continue;
        }
        if (!first) {
            out << (sgn(coeffs_[j]) > 0 ? " + " : " - ");
        } else if (sgn(coeffs_[j]) < 0) {
            out << "-";
        }
        mpq_class mag = abs(coeffs_[j]);
        if (j == 0) {
            out << mag.get_str();
        } else {
            if (mag != 1) {
                out << mag.get_str() << "*";
            }
            out << "z" << conductor() << "^" << j;
        }
        first = false;
    }
    return first ? "0" : out.str();
}

std::size_t Cyclotomic::hash() const {
    std::size_t h = static_cast<std::size_t>(conductor());
    for (const auto &c : coeffs_) {
        h = h * 1000003u ^ hash_mpz(c.get_num());
        h = h * 1000003u ^ hash_mpz(c.get_den());
    }
    return h;
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto &c : r.coeffs_) {
        c = -c;
    }
    return r;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] += other.coeffs_[i];
    }
    return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &other) {
    require_same_field(other);
    for (std::size_t i = 0; i < coeffs_.size(); i++) {
        coeffs_[i] -= other.coeffs_[i];
    }
    return *this;
}

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &other) {
    *this = *this * other;
    return *this;
}

Cyclotomic &Cyclotomic::operator/=(const Cyclotomic &other) {
    *this = *this * other.inverse();
    return *this;
}

Cyclotomic &Cyclotomic::operator*=(const mpq_class &rational) {
    for (auto &c : coeffs_) {
        c *= rational;
    }
    return *this;
}

Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b) {
    a.require_same_field(b);
    std::size_t deg = a.coeffs_.size();
    if (a.is_rational()) {
        return b * a.coeffs_[0];
    }
    if (b.is_rational()) {
        return a * b.coeffs_[0];
    }
    std::vector<mpq_class> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; i++) {
        if (sgn(a.coeffs_[i]) == 0) {
            continue;
        }
        for (std::size_t j = 0; j < deg; j++) {
            if (sgn(b.coeffs_[j]) != 0) {
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
    }
    std::vector<mpq_class> out(deg);
    for (std::size_t k = 0; k < prod.size(); k++) {
        if (sgn(prod[k]) == 0) {
            continue;
        }
        if (k < deg) {
            out[k] += prod[k];
        } else {
            for (const auto &t : a.field_->power(k)) {
                out[t.index] += prod[k] * t.coeff;
            }
        }
    }
    return Cyclotomic(a.field_, std::move(out));
}

bool Cyclotomic::operator==(const Cyclotomic &other) const {
    return field_ == other.field_ && coeffs_ == other.coeffs_;
}

Cyclotomic inv_sqrt3(long conductor) {
    if (conductor % 12 != 0) {
        throw std::invalid_argument("1/sqrt(3) needs a conductor divisible by 12, got " + std::to_string(conductor));
    }
    long step = conductor / 12;
    Cyclotomic r = Cyclotomic::root_of_unity(step, conductor) + Cyclotomic::root_of_unity(-step, conductor);
    return r * mpq_class(1, 3);
}

namespace {

// sqrt(p) for prime p via quadratic Gauss sums, if available in Q(zeta_N).
std::optional<Cyclotomic> sqrt_prime(long p, long conductor) {
    Cyclotomic root(conductor);
    if (p == 2) {
        if (conductor % 8 != 0) {
            return std::nullopt;
        }
        long s = conductor / 8;
        root = Cyclotomic::root_of_unity(s, conductor) + Cyclotomic::root_of_unity(-s, conductor);
    } else {
        bool minus = p % 4 == 3;
        if (conductor % p != 0 || (minus && conductor % 4 != 0)) {
            return std::nullopt;
        }
        long s = conductor / p;
        for (long k = 1; k < p; k++) {
            // Legendre symbol by Euler's criterion.
            long e = (p - 1) / 2, base = k % p, acc = 1;
            while (e > 0) {
                if (e & 1) {
                    acc = acc * base % p;
                }
                base = base * base % p;
                e >>= 1;
            }
            Cyclotomic z = Cyclotomic::root_of_unity(k * s, conductor);
            root += acc == 1 ? z : -z;
        }
        if (minus) {
            // Gauss sum squares to -p; multiply by -i.
            root *= Cyclotomic::root_of_unity(3 * (conductor / 4), conductor);
        }
    }
    if (root.to_complex().real() < 0) {
        root = -root;
    }
    return root;
}

}  // namespace

std::optional<Cyclotomic> sqrt_rational(const mpq_class &value, long conductor) {
    if (sgn(value) < 0) {
        return std::nullopt;
    }
    if (sgn(value) == 0) {
        return Cyclotomic(conductor);
    }
    // sqrt(p/q) = sqrt(p*q)/q; split p*q into square * squarefree.
    mpz_class m = value.get_num() * value.get_den();
    mpz_class square = 1;
    std::vector<long> primes;
    for (long f = 2; f <= 1000000 && f * f <= m; f++) {
        int mult = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), f)) {
            m /= f;
            mult++;
        }
        for (int i = 0; i < mult / 2; i++) {
            square *= f;
        }
        if (mult % 2 == 1) {
            primes.push_back(f);
        }
    }
    if (m > 1) {
        if (mpz_perfect_square_p(m.get_mpz_t())) {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), m.get_mpz_t());
            square *= s;
        } else if (m.fits_slong_p() && m < mpz_class(1000000) * 1000000) {
            primes.push_back(m.get_si());
        } else {
            throw std::domain_error("sqrt_rational: cannot factor " + m.get_str());
        }
    }
    Cyclotomic result(conductor, mpq_class(square, value.get_den()));
    for (long p : primes) {
        auto r = sqrt_prime(p, conductor);
        if (!r) {
            return std::nullopt;
        }
        result *= *r;
    }
    return result;
}

long default_conductor(long local_dim) {
    long c = std::lcm(4 * local_dim, 12L);
    if (local_dim == 2) {
        c = std::lcm(c, 8L);
    }
    return c;
}

mpq_class parse_rational(const std::string &text) {
    mpq_class r;
    if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
        throw std::invalid_argument("malformed rational '" + text + "'");
    }
    r.canonicalize();
    return r;
}

std::string format_rational(const mpq_class &value) {
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace ame
