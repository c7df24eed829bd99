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

#ifndef AME_INVARIANTS_H
#define AME_INVARIANTS_H

#include <array>
#include <cstdint>
#include <string>

#include "ame/matrix.h"

namespace ame {

/// Coordinates (a, b, c) of a s_1 + b s_2 + c s_3 in the code basis.
struct CartanPoint {
    Cyclotomic a;
    Cyclotomic b;
    Cyclotomic c;

    static CartanPoint rational(long conductor, const mpq_class &a, const mpq_class &b, const mpq_class &c);
    CartanPoint scaled(const Cyclotomic &lambda) const;
    bool operator==(const CartanPoint &other) const = default;
};

/// gate * (a, b, c)^T for a 3x3 gate.
CartanPoint act(const ExactMatrix &gate, const CartanPoint &p);

struct InvariantTriple {
    Cyclotomic i6;
    Cyclotomic i9;
    Cyclotomic i12;
    bool operator==(const InvariantTriple &other) const = default;
};

/// The degree 6, 9 and 12 generators of the Weyl-invariant ring:
///   I6  = a^6 + b^6 + c^6 - 10 (a^3 b^3 + a^3 c^3 + b^3 c^3)
///   I9  = (a^3 - b^3)(a^3 - c^3)(b^3 - c^3)
///   I12 = a^9 (b^3 + c^3) + b^9 (a^3 + c^3) + c^9 (a^3 + b^3)
///         - 4 (a^6 b^6 + a^6 c^6 + b^6 c^6) + 2 (a^6 b^3 c^3 + a^3 b^6 c^3 + a^3 b^3 c^6)
InvariantTriple eval_invariants(const CartanPoint &p);

struct InvarianceReport {
    bool invariant = false;
    std::size_t trials = 0;
    /// Sampling set size |S| of rationals p/q with |p| <= 100, 1 <= q <= 100.
    std::size_t sample_space = 0;
    /// Upper bound on the chance a non-invariant gate passes every trial:
    /// (12 / |S|)^trials by Schwartz-Zippel on the degree <= 12 difference.
    double false_pass_bound = 1;
    /// First failing point, if any.
    std::string counterexample;
};

/// Randomized identity test of I(gate * p) == I(p) at `trials` exact
/// rational points of height <= 100.
InvarianceReport check_weyl_invariance(const ExactMatrix &gate, std::size_t trials, std::uint64_t seed);

/// Which invariant serves as the nonzero denominator.
enum class FingerprintBranch { kI6, kI9, kI12 };

struct Fingerprint {
    FingerprintBranch branch;
    /// kI6:  (I9^2 / I6^3, I12 / I6^2)
    /// kI9:  (I6^3 / I9^2, I12^3 / I9^4)   (first entry is 0 on this branch)
    /// kI12: (I6^2 / I12, I9^4 / I12^3)    (both entries 0 on this branch)
    std::array<Cyclotomic, 2> ratios;
    bool operator==(const Fingerprint &other) const = default;
};

std::string branch_name(FingerprintBranch branch);

/// Scale-invariant ratios of the invariants. Throws std::domain_error when
/// I6 = I9 = I12 = 0 (the point is in the nullcone; no fingerprint exists).
Fingerprint invariant_ratio_fingerprint(const CartanPoint &p);

}  // namespace ame

#endif
