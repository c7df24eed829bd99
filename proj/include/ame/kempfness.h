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

#ifndef AME_KEMPFNESS_H
#define AME_KEMPFNESS_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "ame/tensor.h"

namespace ame {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

/// Floating-point state for the analytic side (criticality, norm flows).
struct FloatState {
    Dims dims;
    CVec amps;

    static FloatState from_exact(const PureState &v);
    /// Complex Gaussian amplitudes.
    static FloatState random(const Dims &dims, std::mt19937_64 &rng);
    double norm2() const {
        return amps.squaredNorm();
    }
};

/// One d x d matrix per site, each of determinant 1.
struct GroupElement {
    std::vector<CMat> factors;

    static GroupElement identity(const Dims &dims);
    /// exp(X_k) per site, X_k a random complex traceless matrix rescaled to
    /// spectral norm `scale`.
    static GroupElement random(const Dims &dims, double scale, std::mt19937_64 &rng);
    /// Haar-like unitary per site, phase-fixed to determinant 1.
    static GroupElement random_unitary(const Dims &dims, std::mt19937_64 &rng);
};

/// (x) factors applied site by site.
FloatState apply(const GroupElement &g, const FloatState &v);
/// Single-site matrix applied to one site.
FloatState apply_site(const CMat &m, std::size_t site, const FloatState &v);

/// Generalized Gell-Mann matrices of dimension d: the d(d-1)/2 symmetric,
/// d(d-1)/2 antisymmetric and d-1 diagonal ones, in that order. Hermitian,
/// traceless, Tr(E_a E_b) = 2 delta_ab.
std::vector<CMat> gell_mann_basis(std::size_t d);

/// Reduced density matrix of |v><v| / <v|v> on one site.
CMat single_site_marginal(const FloatState &v, std::size_t site);

/// Scaling-and-squaring Taylor evaluation of exp(m).
CMat matrix_exp(const CMat &m);

struct CriticalityReport {
    bool critical = false;
    /// max over sites and Gell-Mann E of |<v|E|v>| / <v|v>.
    double residual_lie = 0;
    /// max over sites of || rho_k - I/d_k ||_2.
    double residual_marginal = 0;
};

/// Throws std::invalid_argument on the zero state or tol <= 0.
CriticalityReport is_critical(const FloatState &v, double tol = 1e-8);

/// Gradient of log <v|g^dagger g|v> at g = identity, along exp(t E) on each
/// site for each Gell-Mann E. Entry [site][a].
std::vector<std::vector<double>> log_norm_gradient(const FloatState &w);

struct FlowOptions {
    std::size_t max_iters = 2000;
    double step = 1.0;
    double tol = 1e-6;
};

struct FlowReport {
    double initial_norm2 = 0;
    double final_norm2 = 0;
    std::size_t iterations = 0;
    double criticality_residual = 0;
    bool converged = false;
    /// Norm^2 collapsed below 1e-12 of its start: the orbit closure meets 0.
    bool norm_collapsed = false;
    /// Backtracking could not find a decrease while still non-critical.
    bool line_search_failed = false;
    std::vector<double> norm_trace;
    GroupElement g;
    FloatState final_state;
};

/// Multiplicative steepest descent of log <v|g^dagger g|v> over
/// SL_{d_1} (x) ... (x) SL_{d_n} with Armijo backtracking (step halving).
FlowReport norm_minimization_flow(const FloatState &v, const FlowOptions &options = {});

struct InequalityReport {
    bool holds = false;
    double min_ratio = 0;
    std::size_t samples = 0;
};

/// Samples g = (x) exp(X_k), ||X_k||_2 <= 1, and tests
/// <v|g^dagger g|v> >= <v|v> (1 - 1e-9).
InequalityReport kempf_ness_inequality_test(const FloatState &v, std::size_t samples, std::uint64_t seed);

/// Necessary conditions for LU equivalence: equal norms and equal spectra of
/// every single-site marginal, within tol.
bool lu_necessary_conditions(const FloatState &a, const FloatState &b, double tol);

}  // namespace ame

#endif
