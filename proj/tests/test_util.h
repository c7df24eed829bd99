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

#ifndef AME_TESTS_TEST_UTIL_H
#define AME_TESTS_TEST_UTIL_H

#include <complex>
#include <random>
#include <vector>

#include "ame/cyclotomic.h"
#include "ame/matrix.h"
#include "ame/tensor.h"

namespace ame_test {

inline ame::Cyclotomic q(long conductor, long num, long den = 1) {
    return ame::Cyclotomic(conductor, num, den);
}

/// Power-basis coefficients p/q with |p| <= height, 1 <= q <= height.
inline ame::Cyclotomic random_cyclotomic(long conductor, long height, std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> num(-height, height), den(1, height);
    std::vector<mpq_class> coeffs;
    for (long k = 0; k < ame::euler_phi(conductor); k++) {
        mpq_class c(num(rng), den(rng));
        c.canonicalize();
        coeffs.push_back(c);
    }
    return ame::Cyclotomic::from_coeffs(conductor, coeffs);
}

/// Rational point on the unit sphere in R^k by inverse stereographic
/// projection of integers t_1..t_{k-1}.
inline std::vector<mpq_class> rational_unit_vector(std::size_t k, std::mt19937_64 &rng) {
    std::uniform_int_distribution<long> t(-6, 6);
    std::vector<long> ts;
    long s = 0;
    for (std::size_t i = 0; i + 1 < k; i++) {
        ts.push_back(t(rng));
        s += ts.back() * ts.back();
    }
    std::vector<mpq_class> out;
    for (auto x : ts) {
        out.push_back(mpq_class(2 * x, s + 1));
    }
    out.push_back(mpq_class(s - 1, s + 1));
    for (auto &x : out) {
        x.canonicalize();
    }
    return out;
}

/// Dense complex image of an exact matrix.
inline std::vector<std::complex<double>> to_complex(const ame::ExactMatrix &m) {
    std::vector<std::complex<double>> out;
    for (const auto &x : m.entries()) {
        out.push_back(x.to_complex());
    }
    return out;
}

}  // namespace ame_test

#endif
