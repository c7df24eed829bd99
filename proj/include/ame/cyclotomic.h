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

#ifndef AME_CYCLOTOMIC_H
#define AME_CYCLOTOMIC_H

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ame {

long euler_phi(long n);

/// Precomputed data for Q(zeta_N): the N-th cyclotomic polynomial and the
/// reductions of zeta^k onto the power basis {1, zeta, ..., zeta^(phi(N)-1)}.
///
/// Fields are interned; `get` returns a reference that stays valid for the
/// lifetime of the process, so values can carry a raw pointer to their field.
class CyclotomicField {
   public:
    struct Term {
        int index;
        long coeff;
    };

    static const CyclotomicField &get(long conductor);

    long conductor() const {
        return conductor_;
    }
    int degree() const {
        return degree_;
    }
    /// Coefficients of Phi_N, lowest degree first; monic, length degree()+1.
    const std::vector<long> &modulus() const {
        return modulus_;
    }
    /// zeta^k reduced to the power basis, as sparse integer terms.
    /// Valid for 0 <= k < max(N, 2*degree()).
    const std::vector<Term> &power(std::size_t k) const {
        return powers_[k];
    }
    /// The units k of Z/N other than 1; the Galois group is {zeta -> zeta^k}.
    const std::vector<long> &nontrivial_units() const {
        return units_;
    }

   private:
    explicit CyclotomicField(long conductor);

    long conductor_;
    int degree_;
    std::vector<long> modulus_;
    std::vector<std::vector<Term>> powers_;
    std::vector<long> units_;
};

/// Exact element of Q(zeta_N) in the power basis, always reduced modulo Phi_N.
///
/// Two values are equal iff they live in the same field and have identical
/// coefficient vectors. Mixing conductors in arithmetic throws.
class Cyclotomic {
   public:
    explicit Cyclotomic(long conductor);
    Cyclotomic(long conductor, const mpq_class &rational);
    Cyclotomic(long conductor, long numerator, long denominator = 1);

    static Cyclotomic from_coeffs(long conductor, std::vector<mpq_class> coeffs);
    static Cyclotomic root_of_unity(long k, long conductor);

    long conductor() const {
        return field_->conductor();
    }
    const CyclotomicField &field() const {
        return *field_;
    }
    std::span<const mpq_class> coeffs() const {
        return coeffs_;
    }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    mpq_class to_rational() const;

    Cyclotomic conj() const;
    /// Field automorphism zeta -> zeta^k, k coprime to the conductor.
    Cyclotomic galois(long k) const;
    /// Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    std::complex<double> to_complex() const;
    std::string str() const;
    std::size_t hash() const;

    Cyclotomic operator-() const;
    Cyclotomic &operator+=(const Cyclotomic &other);
    Cyclotomic &operator-=(const Cyclotomic &other);
    Cyclotomic &operator*=(const Cyclotomic &other);
    Cyclotomic &operator/=(const Cyclotomic &other);
    Cyclotomic &operator*=(const mpq_class &rational);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) {
        return a += b;
    }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) {
        return a -= b;
    }
    friend Cyclotomic operator*(const Cyclotomic &a, const Cyclotomic &b);
    friend Cyclotomic operator/(const Cyclotomic &a, const Cyclotomic &b) {
        return a * b.inverse();
    }
    friend Cyclotomic operator*(Cyclotomic a, const mpq_class &r) {
        return a *= r;
    }
    friend Cyclotomic operator*(const mpq_class &r, Cyclotomic a) {
        return a *= r;
    }

    bool operator==(const Cyclotomic &other) const;
    bool operator!=(const Cyclotomic &other) const {
        return !(*this == other);
    }

   private:
    Cyclotomic(const CyclotomicField *field, std::vector<mpq_class> coeffs)
        : field_(field), coeffs_(std::move(coeffs)) {
    }
    void require_same_field(const Cyclotomic &other) const;

    const CyclotomicField *field_;
    std::vector<mpq_class> coeffs_;
};

/// 1/sqrt(3) = (zeta_12 + zeta_12^-1)/3 embedded in Q(zeta_N). Requires 12 | N.
Cyclotomic inv_sqrt3(long conductor);

/// Positive square root of a nonnegative rational, if it lies in Q(zeta_N).
std::optional<Cyclotomic> sqrt_rational(const mpq_class &value, long conductor);

/// Smallest conductor used for prime local dimension D: lcm(4D, 12), raised
/// to a multiple of 8 for D = 2 so that sqrt(2) is available.
long default_conductor(long local_dim);

/// Parses "p/q" or "p".
mpq_class parse_rational(const std::string &text);
/// Always "p/q", including "/1" for integers.
std::string format_rational(const mpq_class &value);

}  // namespace ame

template <>
struct std::hash<ame::Cyclotomic> {
    std::size_t operator()(const ame::Cyclotomic &value) const {
        return value.hash();
    }
};

#endif
