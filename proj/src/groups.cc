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

#include "ame/groups.h"

#include "ame/catalog.h"

namespace ame {

CodeGate reflection(const ReflectionSpec &spec) {
    const auto &a = spec.vector;
    if (a.empty()) {
        throw std::invalid_argument("reflection vector is empty");
    }
    long conductor = a[0].conductor();
    if (spec.order < 1 || conductor % spec.order != 0) {
        throw std::invalid_argument(
            "reflection order " + std::to_string(spec.order) + " does not divide the conductor " +
            std::to_string(conductor));
    }
    Cyclotomic norm = dot(a, a);
    if (norm.is_zero()) {
        throw std::invalid_argument("reflection vector is zero");
    }
    Cyclotomic coef = (Cyclotomic(conductor, 1) - Cyclotomic::root_of_unity(conductor / spec.order, conductor)) / norm;
    std::size_t n = a.size();
    ExactMatrix m = ExactMatrix::identity(n, conductor);
    for (std::size_t r = 0; r < n; r++) {
        for (std::size_t c = 0; c < n; c++) {
            if (!a[r].is_zero() && !a[c].is_zero()) {
                m(r, c) -= coef * a[r] * a[c].conj();
            }
        }
    }
    return m;
}

bool is_complex_reflection(const CodeGate &m) {
    if (!m.is_square()) {
        return false;
    }
    long conductor = m.conductor();
    std::size_t n = m.rows();
    if (rank(m - ExactMatrix::identity(n, conductor)) != 1) {
        return false;
    }
    Cyclotomic zeta = m.trace() - Cyclotomic(conductor, static_cast<long>(n) - 1);
    if (zeta.is_zero() || zeta.is_one()) {
        return false;
    }
    Cyclotomic p(conductor, 1);
    for (long k = 0; k < 2 * conductor; k++) {
        p *= zeta;
    }
    return p.is_one();
}

MatrixGroup<ExactMatrix> weyl_group(std::size_t cap, long conductor) {
    std::vector<ExactMatrix> gens;
    for (const auto &v : catalog::reflection_vectors(conductor)) {
        gens.push_back(reflection({v, 3}));
    }
    return closure(std::move(gens), cap);
}

CodeGate mu_matrix(const LocalOperator &g, const CodeSubspace &code) {
    std::size_t k = code.dimension();
    long conductor = code.conductor();
    ExactMatrix gram(k, k, conductor);
    for (std::size_t i = 0; i < k; i++) {
        for (std::size_t j = 0; j < k; j++) {
            gram(i, j) = inner(code.basis[i], code.basis[j]);
        }
    }
    ExactMatrix mu(k, k, conductor);
    for (std::size_t j = 0; j < k; j++) {
        PureState image = apply(g, code.basis[j]);
        std::vector<Cyclotomic> rhs;
        for (std::size_t i = 0; i < k; i++) {
            rhs.push_back(inner(code.basis[i], image));
        }
        auto coeffs = solve(gram, rhs);
        if (!coeffs) {
            throw std::domain_error("code basis is linearly dependent");
        }
        PureState projected = PureState::zero(image.dims(), conductor);
        for (std::size_t i = 0; i < k; i++) {
            projected = projected + code.basis[i] * (*coeffs)[i];
            mu(i, j) = (*coeffs)[i];
        }
        if (projected != image) {
            throw std::domain_error(
                "operator does not preserve the code: image of basis vector " + std::to_string(j) +
                " leaves the subspace");
        }
    }
    return mu;
}

namespace {

std::size_t uniform_local_dim(const LocalOperator &op) {
    Dims dims = op.dims();
    for (auto d : dims) {
        if (d != dims[0]) {
            throw std::invalid_argument("special linear checks need equal local dimensions");
        }
    }
    return dims[0];
}

}  // namespace

bool is_special_linear(const LocalOperator &op) {
    std::size_t d = uniform_local_dim(op);
    Cyclotomic acc(op.conductor(), 1);
    for (std::size_t i = 0; i < d; i++) {
        acc *= op.scalar();
    }
    for (const auto &f : op.factors()) {
        acc *= f.determinant();
    }
    return acc.is_one();
}

bool is_special_unitary(const LocalOperator &op) {
    if (!is_special_linear(op)) {
        return false;
    }
    mpq_class size = (op.scalar().conj() * op.scalar()).to_rational();
    for (const auto &f : op.factors()) {
        ExactMatrix ff = f * f.adjoint();
        Cyclotomic r = ff(0, 0);
        if (!r.is_rational() || sgn(r.to_rational()) <= 0) {
            return false;
        }
        if (ff != ExactMatrix::identity(f.rows(), f.conductor()) * r) {
            return false;
        }
        size *= r.to_rational();
    }
    return size == 1;
}

CosetReport verify_coset_representatives(
    const std::vector<LocalOperator> &representatives,
    const std::vector<ExactMatrix> &targets,
    const CodeSubspace &code) {
    if (representatives.size() != targets.size()) {
        throw std::invalid_argument("need one target per representative");
    }
    CosetReport report;
    report.ok = true;
    for (std::size_t r = 0; r < representatives.size(); r++) {
        bool su = is_special_unitary(representatives[r]);
        report.special_unitary.push_back(su);
        bool match = false;
        try {
            ExactMatrix mu = mu_matrix(representatives[r], code);
            match = mu == targets[r];
            for (std::size_t i = 0; i < mu.rows() && !match; i++) {
                for (std::size_t j = 0; j < mu.cols(); j++) {
                    if (mu(i, j) != targets[r](i, j)) {
                        report.mismatches.push_back({r, i, j, targets[r](i, j).str(), mu(i, j).str()});
                    }
                }
            }
        } catch (const std::domain_error &e) {
            report.errors.push_back("representative " + std::to_string(r) + ": " + e.what());
        }
        report.mu_matches.push_back(match);
        report.ok = report.ok && su && match;
    }
    return report;
}

CosetReport verify_coset_representatives() {
    auto reps = catalog::coset_representatives();
    auto targets = catalog::weyl_generators_displayed();
    return verify_coset_representatives(
        {reps.begin(), reps.end()}, {targets.begin(), targets.end()}, catalog::code332());
}

MatrixGroup<ExactMatrix> transversal_group(const CodeSubspace &code, std::size_t cap) {
    long conductor = code.conductor();
    std::vector<LocalOperator> normalizer_gens = catalog::stabilizer_generators(conductor);
    for (const auto &q : catalog::coset_representatives(conductor)) {
        normalizer_gens.push_back(q);
    }
    std::vector<ExactMatrix> gens;
    for (const auto &g : normalizer_gens) {
        gens.push_back(mu_matrix(g, code));
    }
    return closure(std::move(gens), cap);
}

MatrixGroup<LocalOperator> code_normalizer_group(std::size_t cap) {
    std::vector<LocalOperator> gens = catalog::stabilizer_generators();
    for (const auto &q : catalog::coset_representatives()) {
        gens.push_back(q);
    }
    return closure(std::move(gens), cap);
}

LocalOperator symmetry_lift(const LocalOperator &t, const CodeSubspace &code) {
    long conductor = t.conductor();
    ExactMatrix mu = mu_matrix(t, code);
    ExactMatrix gram = mu.adjoint() * mu;
    Cyclotomic r = gram(0, 0);
    if (!r.is_rational() || sgn(r.to_rational()) <= 0 || gram != ExactMatrix::identity(mu.rows(), conductor) * r) {
        throw std::domain_error("mu(t) is not a positive multiple of a unitary");
    }
    std::vector<ExactMatrix> factors{mu.conj()};
    factors.insert(factors.end(), t.factors().begin(), t.factors().end());
    return LocalOperator(t.scalar() * Cyclotomic(conductor, mpq_class(1 / r.to_rational())), factors);
}

MatrixGroup<LocalOperator> local_symmetry_group(std::size_t cap) {
    PureState phi = catalog::phi();
    auto gens = catalog::local_symmetry_generators();
    for (std::size_t i = 0; i < gens.size(); i++) {
        if (apply(gens[i], phi) != phi) {
            throw std::domain_error("local symmetry generator " + std::to_string(i) + " does not fix phi");
        }
    }
    return closure(std::vector<LocalOperator>(gens.begin(), gens.end()), cap);
}

SymmetryFormReport check_symmetry_form(const LocalOperator &element, const CodeSubspace &code, const PureState &phi) {
    SymmetryFormReport report;
    report.fixes_phi = apply(element, phi) == phi;
    long conductor = element.conductor();
    std::vector<ExactMatrix> rest(element.factors().begin() + 1, element.factors().end());
    LocalOperator three_site(Cyclotomic(conductor, 1), rest);
    try {
        ExactMatrix mu = mu_matrix(three_site, code);
        ExactMatrix a0 = element.factors()[0] * element.scalar();
        report.inverse_transpose_identity = mu == a0.transpose().inverse();
        ExactMatrix gram = mu.adjoint() * mu;
        Cyclotomic r = gram(0, 0);
        if (r.is_rational() && sgn(r.to_rational()) > 0 && gram == ExactMatrix::identity(mu.rows(), conductor) * r) {
            // Rescaling the three-site part by 1/sqrt(r) makes mu unitary; the
            // product conj(mu) (x) part then picks up exactly 1/r.
            std::vector<ExactMatrix> factors{mu.conj()};
            factors.insert(factors.end(), rest.begin(), rest.end());
            LocalOperator expected(Cyclotomic(conductor, mpq_class(1 / r.to_rational())), factors);
            report.conjugate_form = expected == element;
        }
    } catch (const std::exception &e) {
        report.error = e.what();
    }
    return report;
}

CentralizerReport centralizer_containment_check(std::size_t normalizer_order, std::size_t weyl_order) {
    CentralizerReport report;
    auto gens = catalog::stabilizer_generators();
    auto group = closure(gens, 90);
    report.order = group.order();
    auto basis = catalog::code_basis();
    report.fixes_code_pointwise = true;
    report.special_linear = true;
    for (const auto &g : group.elements) {
        for (const auto &s : basis) {
            report.fixes_code_pointwise = report.fixes_code_pointwise && apply(g, s) == s;
        }
        report.special_linear = report.special_linear && is_special_linear(g);
    }
    report.generators_commute = gens[0] * gens[1] == gens[1] * gens[0];
    report.order_consistent =
        weyl_order != 0 && normalizer_order % weyl_order == 0 && normalizer_order / weyl_order == report.order;
    return report;
}

}  // namespace ame
