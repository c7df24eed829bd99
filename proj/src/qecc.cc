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

#include "ame/qecc.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace ame {

ExactMatrix pauli_x(std::size_t local_dim, long conductor) {
    ExactMatrix x(local_dim, local_dim, conductor);
    for (std::size_t i = 0; i < local_dim; i++) {
        x((i + 1) % local_dim, i) = Cyclotomic(conductor, 1);
    }
    return x;
}

ExactMatrix pauli_z(std::size_t local_dim, long conductor) {
    long d = static_cast<long>(local_dim);
    if (conductor % d != 0) {
        throw std::invalid_argument(
            "conductor " + std::to_string(conductor) + " lacks the " + std::to_string(d) + "-th roots of unity");
    }
    std::vector<Cyclotomic> diag;
    for (long i = 0; i < d; i++) {
        diag.push_back(Cyclotomic::root_of_unity(i * (conductor / d), conductor));
    }
    return ExactMatrix::diagonal(diag);
}

ExactMatrix pauli_xz(std::size_t local_dim, std::size_t a, std::size_t b, long conductor) {
    ExactMatrix m = ExactMatrix::identity(local_dim, conductor);
    ExactMatrix x = pauli_x(local_dim, conductor);
    ExactMatrix z = pauli_z(local_dim, conductor);
    for (std::size_t i = 0; i < a; i++) {
        m = m * x;
    }
    for (std::size_t i = 0; i < b; i++) {
        m = m * z;
    }
    return m;
}

bool is_prime(std::size_t n) {
    if (n < 2) {
        return false;
    }
    for (std::size_t p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            return false;
        }
    }
    return true;
}

CodeSubspace CodeSubspace::from_basis(std::vector<PureState> basis, std::optional<std::size_t> claimed_distance) {
    if (basis.empty()) {
        throw std::invalid_argument("code basis is empty");
    }
    const Dims &dims = basis[0].dims();
    for (auto d : dims) {
        if (d != dims[0]) {
            throw std::invalid_argument("code basis states must have equal local dimensions on every site");
        }
    }
    for (std::size_t i = 0; i < basis.size(); i++) {
        if (basis[i].dims() != dims) {
            throw std::invalid_argument("code basis state " + std::to_string(i) + " has different dims");
        }
        for (std::size_t j = i; j < basis.size(); j++) {
            Cyclotomic g = inner(basis[i], basis[j]);
            bool ok = i == j ? g.is_one() : g.is_zero();
            if (!ok) {
                throw std::invalid_argument(
                    "code basis is not orthonormal: <u" + std::to_string(i) + "|u" + std::to_string(j) +
                    "> = " + g.str());
            }
        }
    }
    CodeSubspace code;
    code.n = dims.size();
    code.local_dim = dims[0];
    code.basis = std::move(basis);
    code.claimed_distance = claimed_distance;
    return code;
}

std::vector<std::vector<Cyclotomic>> CodeSubspace::basis_vectors() const {
    std::vector<std::vector<Cyclotomic>> out;
    for (const auto &b : basis) {
        out.push_back(b.amps());
    }
    return out;
}

std::size_t ErrorBasisElement::weight() const {
    return static_cast<std::size_t>(std::count_if(
        exponents.begin(), exponents.end(), [](const auto &e) { return e.first != 0 || e.second != 0; }));
}

std::string ErrorBasisElement::label() const {
    std::string s;
    for (const auto &[a, b] : exponents) {
        s += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return s;
}

std::vector<ErrorBasisElement> pauli_error_basis(
    std::size_t n, std::size_t local_dim, std::size_t max_weight, long conductor) {
    if (!is_prime(local_dim)) {
        throw std::invalid_argument("Pauli error basis needs a prime local dimension, got " + std::to_string(local_dim));
    }
    if (max_weight > n) {
        throw std::invalid_argument("max_weight exceeds the number of sites");
    }
    std::size_t dd = local_dim * local_dim;
    std::vector<ExactMatrix> single;
    for (std::size_t a = 0; a < local_dim; a++) {
        for (std::size_t b = 0; b < local_dim; b++) {
            single.push_back(pauli_xz(local_dim, a, b, conductor));
        }
    }
    std::vector<ErrorBasisElement> out;
    for (std::size_t w = 0; w <= max_weight; w++) {
        // Supports of size w in lexicographic order.
        std::vector<bool> mask(n, false);
        std::fill(mask.begin(), mask.begin() + static_cast<long>(w), true);
        do {
            std::vector<std::size_t> support;
            for (std::size_t k = 0; k < n; k++) {
                if (mask[k]) {
                    support.push_back(k);
                }
            }
            // Each supported site takes one of the dd-1 non-identity products.
            std::vector<std::size_t> choice(w, 1);
            while (true) {
                std::vector<std::pair<std::size_t, std::size_t>> exps(n, {0, 0});
                std::vector<ExactMatrix> factors(n, single[0]);
                for (std::size_t s = 0; s < w; s++) {
                    exps[support[s]] = {choice[s] / local_dim, choice[s] % local_dim};
                    factors[support[s]] = single[choice[s]];
                }
                out.push_back({LocalOperator(Cyclotomic(conductor, 1), std::move(factors)), std::move(exps)});
                std::size_t pos = w;
                while (pos > 0) {
                    if (++choice[pos - 1] < dd) {
                        break;
                    }
                    choice[pos - 1] = 1;
                    pos--;
                }
                if (pos == 0) {
                    break;
                }
            }
        } while (std::prev_permutation(mask.begin(), mask.end()));
    }
    return out;
}

KlReport kl_check(const CodeSubspace &code, std::size_t d) {
    if (d < 1) {
        throw std::invalid_argument("distance must be at least 1");
    }
    KlReport report;
    report.n = code.n;
    report.k = code.dimension();
    report.d = d;
    report.local_dim = code.local_dim;
    std::size_t max_weight = std::min(d - 1, code.n);
    auto errors = pauli_error_basis(code.n, code.local_dim, max_weight, code.conductor());
    bool pure = true;
    std::size_t k = code.dimension();
    for (const auto &e : errors) {
        std::vector<PureState> images;
        for (const auto &u : code.basis) {
            images.push_back(apply(e.op, u));
        }
        Cyclotomic c = inner(code.basis[0], images[0]);
        std::string label = e.label();
        for (std::size_t i = 0; i < k; i++) {
            for (std::size_t j = 0; j < k; j++) {
                Cyclotomic m = (i == 0 && j == 0) ? c : inner(code.basis[i], images[j]);
                bool ok = i == j ? m == c : m.is_zero();
                if (!ok) {
                    report.violations.push_back({label, i, j, m});
                }
            }
        }
        if (e.weight() > 0 && !c.is_zero()) {
            pure = false;
        }
        report.c_table.emplace_back(std::move(label), std::move(c));
    }
    report.is_code = report.violations.empty();
    report.is_pure = report.is_code && pure;
    return report;
}

std::size_t distance(const CodeSubspace &code) {
    std::size_t d = 1;
    while (d <= code.n && kl_check(code, d + 1).is_code) {
        d++;
    }
    return d;
}

UniformityReport r_uniform_check(const PureState &v, std::size_t r) {
    std::size_t n = v.num_sites();
    if (r < 1 || r > n) {
        throw std::invalid_argument("r must lie in [1, n]");
    }
    mpq_class norm2 = v.norm2();
    if (sgn(norm2) == 0) {
        throw std::invalid_argument("uniformity of the zero vector is undefined");
    }
    Cyclotomic inv_norm(v.conductor(), mpq_class(1 / norm2));
    UniformityReport report;
    report.uniform = true;
    std::vector<bool> mask(n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(r), true);
    double worst = -1;
    do {
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < n; k++) {
            if (mask[k]) {
                keep.push_back(k);
            }
        }
        DensityOperator rho = partial_trace(v, keep);
        std::size_t dim = rho.matrix.rows();
        ExactMatrix diff = rho.matrix * inv_norm -
                           ExactMatrix::identity(dim, v.conductor()) * Cyclotomic(v.conductor(), mpq_class(1, dim));
        double dev = 0;
        for (const auto &e : diff.entries()) {
            dev = std::max(dev, std::abs(e.to_complex()));
        }
        if (!diff.is_zero()) {
            report.uniform = false;
        }
        if (dev > worst) {
            worst = dev;
            report.worst_subset = keep;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    report.worst_deviation = worst;
    return report;
}

namespace {

mpz_class ipow(std::size_t base, std::size_t exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

void check_params(std::size_t n, std::size_t k, std::size_t d, std::size_t local_dim) {
    if (n == 0 || k == 0 || d == 0 || local_dim == 0) {
        throw std::invalid_argument("code parameters must be positive");
    }
}

}  // namespace

bool singleton_check(std::size_t n, std::size_t k, std::size_t d, std::size_t local_dim) {
    check_params(n, k, d, local_dim);
    return k * ipow(local_dim, 2 * (d - 1)) <= ipow(local_dim, n);
}

bool singleton_saturated(std::size_t n, std::size_t k, std::size_t d, std::size_t local_dim) {
    check_params(n, k, d, local_dim);
    return k * ipow(local_dim, 2 * (d - 1)) == ipow(local_dim, n);
}

CodeSubspace stabilizer_subspace(const std::vector<LocalOperator> &generators) {
    if (generators.empty()) {
        throw std::invalid_argument("stabilizer needs at least one generator");
    }
    Dims dims = generators[0].dims();
    long conductor = generators[0].conductor();
    std::size_t dim = total_dim(dims);
    ExactMatrix stacked(dim * generators.size(), dim, conductor);
    for (std::size_t g = 0; g < generators.size(); g++) {
        if (generators[g].dims() != dims) {
            throw std::invalid_argument("stabilizer generators act on different dims");
        }
        ExactMatrix block = generators[g].to_dense() - ExactMatrix::identity(dim, conductor);
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                stacked(g * dim + r, c) = block(r, c);
            }
        }
    }
    auto kernel = nullspace(stacked);
    if (kernel.empty()) {
        throw std::invalid_argument("stabilizer fixes only the zero vector");
    }
    std::vector<PureState> basis;
    for (auto &v : orthonormalize(kernel)) {
        basis.emplace_back(dims, std::move(v));
    }
    return CodeSubspace::from_basis(std::move(basis));
}

}  // namespace ame
