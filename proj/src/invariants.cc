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

#include "ame/invariants.h"

#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace ame {

namespace {

Cyclotomic pow(const Cyclotomic &x, int k) {
    Cyclotomic r(x.conductor(), 1);
    for (int i = 0; i < k; i++) {
        r *= x;
    }
    return r;
}

constexpr long kHeight = 100;

// Number of distinct rationals p/q with |p| <= kHeight and 1 <= q <= kHeight.
std::size_t count_sample_space() {
    std::size_t count = 1;  // zero
    for (long q = 1; q <= kHeight; q++) {
        for (long p = 1; p <= kHeight; p++) {
            if (std::gcd(p, q) == 1) {
                count += 2;
            }
        }
    }
    return count;
}

}  // namespace

CartanPoint CartanPoint::rational(long conductor, const mpq_class &a, const mpq_class &b, const mpq_class &c) {
    return {Cyclotomic(conductor, a), Cyclotomic(conductor, b), Cyclotomic(conductor, c)};
}

CartanPoint CartanPoint::scaled(const Cyclotomic &lambda) const {
    return {a * lambda, b * lambda, c * lambda};
}

CartanPoint act(const ExactMatrix &gate, const CartanPoint &p) {
    if (gate.rows() != 3 || gate.cols() != 3) {
        throw std::invalid_argument("Cartan gates are 3x3");
    }
    std::array<const Cyclotomic *, 3> x{&p.a, &p.b, &p.c};
    std::array<Cyclotomic, 3> y{Cyclotomic(p.a.conductor()), Cyclotomic(p.a.conductor()), Cyclotomic(p.a.conductor())};
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t c = 0; c < 3; c++) {
            if (!gate(r, c).is_zero() && !x[c]->is_zero()) {
                y[r] += gate(r, c) * *x[c];
            }
        }
    }
    return {y[0], y[1], y[2]};
}

InvariantTriple eval_invariants(const CartanPoint &p) {
    Cyclotomic a3 = pow(p.a, 3), b3 = pow(p.b, 3), c3 = pow(p.c, 3);
    Cyclotomic a6 = a3 * a3, b6 = b3 * b3, c6 = c3 * c3;
    Cyclotomic a9 = a6 * a3, b9 = b6 * b3, c9 = c6 * c3;
    mpq_class ten(10), four(4), two(2);

    Cyclotomic i6 = a6 + b6 + c6 - (a3 * b3 + a3 * c3 + b3 * c3) * ten;
    Cyclotomic i9 = (a3 - b3) * (a3 - c3) * (b3 - c3);
    Cyclotomic i12 = a9 * (b3 + c3) + b9 * (a3 + c3) + c9 * (a3 + b3) - (a6 * b6 + a6 * c6 + b6 * c6) * four +
                     (a6 * b3 * c3 + a3 * b6 * c3 + a3 * b3 * c6) * two;
    return {i6, i9, i12};
}

InvarianceReport check_weyl_invariance(const ExactMatrix &gate, std::size_t trials, std::uint64_t seed) {
    InvarianceReport report;
    report.trials = trials;
    report.sample_space = count_sample_space();
    report.false_pass_bound = std::pow(12.0 / static_cast<double>(report.sample_space), static_cast<double>(trials));
    report.invariant = true;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-kHeight, kHeight);
    std::uniform_int_distribution<long> den(1, kHeight);
    auto draw = [&] {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        return q;
    };
    for (std::size_t t = 0; t < trials; t++) {
        CartanPoint p = CartanPoint::rational(gate.conductor(), draw(), draw(), draw());
        if (!(eval_invariants(act(gate, p)) == eval_invariants(p))) {
            report.invariant = false;
            report.counterexample = "(" + p.a.str() + ", " + p.b.str() + ", " + p.c.str() + ")";
            break;
        }
    }
    return report;
}

std::string branch_name(FingerprintBranch branch) {
    switch (branch) {
        case FingerprintBranch::kI6:
            return "I6";
        case FingerprintBranch::kI9:
            return "I9";
        case FingerprintBranch::kI12:
            return "I12";
    }
    return "?";
}

Fingerprint invariant_ratio_fingerprint(const CartanPoint &p) {
    InvariantTriple t = eval_invariants(p);
    if (!t.i6.is_zero()) {
        Cyclotomic i6_2 = t.i6 * t.i6;
        return {FingerprintBranch::kI6, {t.i9 * t.i9 / (i6_2 * t.i6), t.i12 / i6_2}};
    }
    if (!t.i9.is_zero()) {
        Cyclotomic i9_2 = t.i9 * t.i9;
        return {FingerprintBranch::kI9, {Cyclotomic(t.i6.conductor()), pow(t.i12, 3) / (i9_2 * i9_2)}};
    }
    if (!t.i12.is_zero()) {
        long n = t.i6.conductor();
        return {FingerprintBranch::kI12, {Cyclotomic(n), Cyclotomic(n)}};
    }
    throw std::domain_error("all invariants vanish; the fingerprint is undefined");
}

}  // namespace ame
