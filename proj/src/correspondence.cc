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

#include "ame/correspondence.h"

#include <stdexcept>

namespace ame {

namespace {

Cyclotomic sqrt_of(std::size_t d, long conductor) {
    auto r = sqrt_rational(mpq_class(static_cast<long>(d)), conductor);
    if (!r) {
        throw std::domain_error(
            "sqrt(" + std::to_string(d) + ") is not in Q(zeta_" + std::to_string(conductor) + ")");
    }
    return *r;
}

std::string describe(const CodeSubspace &code) {
    return "((" + std::to_string(code.n) + "," + std::to_string(code.dimension()) + ",?))_" +
           std::to_string(code.local_dim) + " subspace";
}

std::string describe(const PureState &v) {
    std::string s = std::to_string(v.num_sites()) + "-site state, dims (";
    for (std::size_t k = 0; k < v.dims().size(); k++) {
        s += (k ? "," : "") + std::to_string(v.dims()[k]);
    }
    return s + ")";
}

void fill_verification(CorrespondenceReport &report, const PureState &state, const CodeSubspace &code) {
    std::size_t n = state.num_sites();
    report.ame_verified = r_uniform_check(state, n / 2).uniform;
    report.code_distance = distance(code);
    std::size_t target = (n + 1) / 2;
    report.kl_verified = report.code_distance >= target && kl_check(code, target).is_pure;
}

}  // namespace

PureState purify_code(const CodeSubspace &code) {
    std::size_t d = code.local_dim;
    if (code.dimension() != d) {
        throw std::invalid_argument(
            "purification needs K = D basis vectors, got K = " + std::to_string(code.dimension()) + ", D = " +
            std::to_string(d));
    }
    long conductor = code.conductor();
    Cyclotomic scale = sqrt_of(d, conductor).inverse();
    Dims dims{d};
    dims.insert(dims.end(), code.basis[0].dims().begin(), code.basis[0].dims().end());
    std::vector<Cyclotomic> amps;
    amps.reserve(total_dim(dims));
    for (const auto &u : code.basis) {
        for (const auto &a : u.amps()) {
            amps.push_back(a * scale);
        }
    }
    return PureState(std::move(dims), std::move(amps));
}

CodeSubspace reduce_state(const PureState &v) {
    if (v.num_sites() < 2) {
        throw std::invalid_argument("reduction needs at least two sites");
    }
    std::size_t d = v.dims()[0];
    long conductor = v.conductor();
    Cyclotomic scale = sqrt_of(d, conductor);
    std::vector<PureState> basis;
    for (std::size_t i = 0; i < d; i++) {
        basis.push_back(contract_site(i, 0, v) * scale);
    }
    std::vector<std::vector<Cyclotomic>> vecs;
    for (const auto &b : basis) {
        vecs.push_back(b.amps());
    }
    if (rank(ExactMatrix::from_columns(vecs)) < d) {
        throw std::domain_error("reduction is not full rank: the state is not 1-uniform on site 0");
    }
    try {
        return CodeSubspace::from_basis(basis);
    } catch (const std::invalid_argument &) {
        // Not orthonormal as contracted; fall through to Gram-Schmidt.
    }
    std::vector<PureState> ortho;
    for (auto &a : orthonormalize(vecs)) {
        ortho.emplace_back(basis[0].dims(), std::move(a));
    }
    return CodeSubspace::from_basis(std::move(ortho));
}

CorrespondenceReport roundtrip(const CodeSubspace &code) {
    CorrespondenceReport report{CorrespondenceDirection::kFromCode, describe(code), "", false, false, 0, false, false};
    PureState state = purify_code(code);
    CodeSubspace back = reduce_state(state);
    report.output = describe(state);
    report.roundtrip_executed = true;
    report.roundtrip_exact = same_span(code.basis_vectors(), back.basis_vectors());
    fill_verification(report, state, code);
    return report;
}

CorrespondenceReport roundtrip(const PureState &v) {
    if (v.norm2() != 1) {
        throw std::invalid_argument("roundtrip needs a unit-norm state, got norm^2 = " + v.norm2().get_str());
    }
    CorrespondenceReport report{CorrespondenceDirection::kFromState, describe(v), "", false, false, 0, false, false};
    CodeSubspace code = reduce_state(v);
    PureState back = purify_code(code);
    report.output = describe(code);
    report.roundtrip_executed = true;
    report.roundtrip_exact = back == v;
    fill_verification(report, v, code);
    return report;
}

}  // namespace ame
