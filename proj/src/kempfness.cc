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

#include "ame/kempfness.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

namespace ame {

namespace {

std::vector<std::size_t> float_strides(const Dims &dims) {
    std::vector<std::size_t> s(dims.size(), 1);
    for (std::size_t k = dims.size(); k-- > 1;) {
        s[k - 1] = s[k] * dims[k];
    }
    return s;
}

CMat gaussian_matrix(std::size_t d, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    CMat m(d, d);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            m(r, c) = {normal(rng), normal(rng)};
        }
    }
    return m;
}

double spectral_norm(const CMat &m) {
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues()(0);
}

// Divides by a d-th root of det so that det == 1.
CMat normalize_det(const CMat &m) {
    std::complex<double> det = m.determinant();
    return m / std::pow(det, 1.0 / static_cast<double>(m.rows()));
}

CMat hermitian_traceless_part(const CMat &m) {
    CMat h = 0.5 * (m + m.adjoint());
    std::complex<double> tr = h.trace() / static_cast<double>(h.rows());
    return h - tr * CMat::Identity(h.rows(), h.cols());
}

}  // namespace

FloatState FloatState::from_exact(const PureState &v) {
    FloatState f{v.dims(), CVec(static_cast<Eigen::Index>(v.amps().size()))};
    for (std::size_t i = 0; i < v.amps().size(); i++) {
        f.amps(static_cast<Eigen::Index>(i)) = v.amp(i).to_complex();
    }
    return f;
}

FloatState FloatState::random(const Dims &dims, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    FloatState f{dims, CVec(static_cast<Eigen::Index>(total_dim(dims)))};
    for (Eigen::Index i = 0; i < f.amps.size(); i++) {
        f.amps(i) = {normal(rng), normal(rng)};
    }
    return f;
}

GroupElement GroupElement::identity(const Dims &dims) {
    GroupElement g;
    for (auto d : dims) {
        g.factors.push_back(CMat::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d)));
    }
    return g;
}

GroupElement GroupElement::random(const Dims &dims, double scale, std::mt19937_64 &rng) {
    GroupElement g;
    for (auto d : dims) {
        CMat x = gaussian_matrix(d, rng);
        x -= (x.trace() / static_cast<double>(d)) * CMat::Identity(x.rows(), x.cols());
        x *= scale / spectral_norm(x);
        g.factors.push_back(normalize_det(matrix_exp(x)));
    }
    return g;
}

GroupElement GroupElement::random_unitary(const Dims &dims, std::mt19937_64 &rng) {
    GroupElement g;
    for (auto d : dims) {
        Eigen::HouseholderQR<CMat> qr(gaussian_matrix(d, rng));
        CMat q = qr.householderQ();
        CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
        for (Eigen::Index i = 0; i < q.cols(); i++) {
            std::complex<double> ph = r(i, i) / std::abs(r(i, i));
            q.col(i) *= ph;
        }
        g.factors.push_back(normalize_det(q));
    }
    return g;
}

FloatState apply_site(const CMat &m, std::size_t site, const FloatState &v) {
    std::size_t d = v.dims.at(site);
    if (static_cast<std::size_t>(m.rows()) != d || static_cast<std::size_t>(m.cols()) != d) {
        throw std::invalid_argument("site matrix has wrong dimension");
    }
    auto st = float_strides(v.dims);
    std::size_t stride = st[site];
    FloatState out{v.dims, CVec::Zero(v.amps.size())};
    std::size_t n = static_cast<std::size_t>(v.amps.size());
    for (std::size_t i = 0; i < n; i++) {
        std::size_t digit = (i / stride) % d;
        std::size_t base = i - digit * stride;
        auto a = v.amps(static_cast<Eigen::Index>(i));
        for (std::size_t row = 0; row < d; row++) {
            out.amps(static_cast<Eigen::Index>(base + row * stride)) +=
                m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(digit)) * a;
        }
    }
    return out;
}

FloatState apply(const GroupElement &g, const FloatState &v) {
    if (g.factors.size() != v.dims.size()) {
        throw std::invalid_argument("group element and state have different site counts");
    }
    FloatState w = v;
    for (std::size_t k = 0; k < g.factors.size(); k++) {
        w = apply_site(g.factors[k], k, w);
    }
    return w;
}

std::vector<CMat> gell_mann_basis(std::size_t d) {
    using C = std::complex<double>;
    auto n = static_cast<Eigen::Index>(d);
    std::vector<CMat> basis;
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index k = j + 1; k < n; k++) {
            CMat m = CMat::Zero(n, n);
            m(j, k) = 1;
            m(k, j) = 1;
            basis.push_back(m);
        }
    }
    for (Eigen::Index j = 0; j < n; j++) {
        for (Eigen::Index k = j + 1; k < n; k++) {
            CMat m = CMat::Zero(n, n);
            m(j, k) = C(0, -1);
            m(k, j) = C(0, 1);
            basis.push_back(m);
        }
    }
    for (Eigen::Index l = 1; l < n; l++) {
        CMat m = CMat::Zero(n, n);
        double c = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (Eigen::Index j = 0; j < l; j++) {
            m(j, j) = c;
        }
        m(l, l) = -c * static_cast<double>(l);
        basis.push_back(m);
    }
    return basis;
}

CMat single_site_marginal(const FloatState &v, std::size_t site) {
    std::size_t d = v.dims.at(site);
    auto st = float_strides(v.dims);
    std::size_t stride = st[site];
    std::size_t n = static_cast<std::size_t>(v.amps.size());
    CMat rho = CMat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (std::size_t i = 0; i < n; i++) {
        std::size_t digit = (i / stride) % d;
        if (digit != 0) {
            continue;
        }
        for (std::size_t a = 0; a < d; a++) {
            auto x = v.amps(static_cast<Eigen::Index>(i + a * stride));
            for (std::size_t b = 0; b < d; b++) {
                rho(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) +=
                    x * std::conj(v.amps(static_cast<Eigen::Index>(i + b * stride)));
            }
        }
    }
    return rho / v.norm2();
}

CMat matrix_exp(const CMat &m) {
    double norm = m.cwiseAbs().rowwise().sum().maxCoeff();
    int squarings = 0;
    while (norm > 0.5) {
        norm /= 2;
        squarings++;
    }
    CMat a = m / std::pow(2.0, squarings);
    CMat term = CMat::Identity(m.rows(), m.cols());
    CMat sum = term;
    for (int k = 1; k <= 20; k++) {
        term = term * a / static_cast<double>(k);
        sum += term;
    }
    for (int s = 0; s < squarings; s++) {
        sum = sum * sum;
    }
    return sum;
}

CriticalityReport is_critical(const FloatState &v, double tol) {
    if (tol <= 0) {
        throw std::invalid_argument("tolerance must be positive");
    }
    if (v.norm2() == 0) {
        throw std::invalid_argument("criticality of the zero state is undefined");
    }
    CriticalityReport report;
    for (std::size_t k = 0; k < v.dims.size(); k++) {
        CMat rho = single_site_marginal(v, k);
        for (const auto &e : gell_mann_basis(v.dims[k])) {
            // <v|E_k|v>/<v|v> = Tr(rho_k E).
            report.residual_lie = std::max(report.residual_lie, std::abs((rho * e).trace()));
        }
        CMat dev = rho - CMat::Identity(rho.rows(), rho.cols()) / static_cast<double>(v.dims[k]);
        Eigen::SelfAdjointEigenSolver<CMat> eig(dev, Eigen::EigenvaluesOnly);
        report.residual_marginal = std::max(report.residual_marginal, eig.eigenvalues().cwiseAbs().maxCoeff());
    }
    report.critical = report.residual_lie <= tol && report.residual_marginal <= tol;
    return report;
}

std::vector<std::vector<double>> log_norm_gradient(const FloatState &w) {
    std::vector<std::vector<double>> grad;
    for (std::size_t k = 0; k < w.dims.size(); k++) {
        CMat rho = single_site_marginal(w, k);
        std::vector<double> row;
        for (const auto &e : gell_mann_basis(w.dims[k])) {
            row.push_back(2.0 * (rho * e).trace().real());
        }
        grad.push_back(std::move(row));
    }
    return grad;
}

FlowReport norm_minimization_flow(const FloatState &v, const FlowOptions &options) {
    if (options.max_iters == 0 || options.step <= 0 || options.tol <= 0) {
        throw std::invalid_argument("flow parameters must be positive");
    }
    if (v.norm2() == 0) {
        throw std::invalid_argument("flow from the zero state");
    }
    constexpr double kArmijo = 1e-4;
    constexpr double kMinStep = 1e-14;
    FlowReport report;
    report.g = GroupElement::identity(v.dims);
    report.initial_norm2 = v.norm2();
    report.norm_trace.push_back(report.initial_norm2);
    FloatState w = v;
    double step = options.step;
    for (std::size_t it = 0;; it++) {
        CriticalityReport crit = is_critical(w, options.tol);
        report.criticality_residual = crit.residual_lie;
        if (crit.residual_lie < options.tol) {
            report.converged = true;
            break;
        }
        if (it >= options.max_iters) {
            break;
        }
        if (w.norm2() <= 1e-12 * report.initial_norm2) {
            report.norm_collapsed = true;
            break;
        }
        // Descent direction on each site: minus the traceless part of the marginal.
        std::vector<CMat> dirs;
        double slope = 0;
        for (std::size_t k = 0; k < w.dims.size(); k++) {
            CMat p = hermitian_traceless_part(single_site_marginal(w, k));
            slope -= 2.0 * p.squaredNorm();
            dirs.push_back(-p);
        }
        double f0 = std::log(w.norm2());
        bool accepted = false;
        while (step >= kMinStep) {
            GroupElement move;
            for (const auto &d : dirs) {
                move.factors.push_back(normalize_det(matrix_exp(step * d)));
            }
            FloatState candidate = apply(move, w);
            double f1 = std::log(candidate.norm2());
            if (f1 <= f0 + kArmijo * step * slope) {
                w = std::move(candidate);
                for (std::size_t k = 0; k < move.factors.size(); k++) {
                    report.g.factors[k] = move.factors[k] * report.g.factors[k];
                }
                accepted = true;
                break;
            }
            step /= 2;
        }
        if (!accepted) {
            report.line_search_failed = true;
            break;
        }
        report.iterations = it + 1;
        report.norm_trace.push_back(w.norm2());
        step = std::min(options.step, 2 * step);
    }
    report.final_norm2 = w.norm2();
    report.final_state = std::move(w);
    return report;
}

InequalityReport kempf_ness_inequality_test(const FloatState &v, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> radius(0.0, 1.0);
    InequalityReport report;
    report.samples = samples;
    report.min_ratio = std::numeric_limits<double>::infinity();
    double base = v.norm2();
    for (std::size_t s = 0; s < samples; s++) {
        GroupElement g = GroupElement::random(v.dims, radius(rng), rng);
        report.min_ratio = std::min(report.min_ratio, apply(g, v).norm2() / base);
    }
    report.holds = report.min_ratio >= 1 - 1e-9;
    return report;
}

bool lu_necessary_conditions(const FloatState &a, const FloatState &b, double tol) {
    if (a.dims != b.dims || std::abs(a.norm2() - b.norm2()) > tol) {
        return false;
    }
    for (std::size_t k = 0; k < a.dims.size(); k++) {
        Eigen::SelfAdjointEigenSolver<CMat> ea(single_site_marginal(a, k), Eigen::EigenvaluesOnly);
        Eigen::SelfAdjointEigenSolver<CMat> eb(single_site_marginal(b, k), Eigen::EigenvaluesOnly);
        if ((ea.eigenvalues() - eb.eigenvalues()).cwiseAbs().maxCoeff() > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace ame
