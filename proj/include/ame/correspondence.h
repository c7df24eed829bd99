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

#ifndef AME_CORRESPONDENCE_H
#define AME_CORRESPONDENCE_H

#include <string>

#include "ame/qecc.h"

namespace ame {

/// Purification of a code with K = D basis vectors on n-1 sites:
/// (1/sqrt D) sum_i |i> (x) |u_i>, the new site prepended as site 0.
PureState purify_code(const CodeSubspace &code);

/// Code spanned by sqrt(D) <i|_0 |v>, i < D, re-orthonormalized exactly when
/// the contractions are not already orthonormal. Throws std::domain_error if
/// the contractions span fewer than D dimensions.
CodeSubspace reduce_state(const PureState &v);

enum class CorrespondenceDirection {
    /// code -> state -> code
    kFromCode,
    /// state -> code -> state
    kFromState,
};

struct CorrespondenceReport {
    CorrespondenceDirection direction;
    std::string input;
    std::string output;
    /// The state involved is floor(n/2)-uniform.
    bool ame_verified = false;
    /// The code involved is pure with distance at least ceil(n/2), n the
    /// number of sites of the state.
    bool kl_verified = false;
    /// Exact distance of the code involved.
    std::size_t code_distance = 0;
    bool roundtrip_executed = false;
    /// Code direction: equal spans. State direction: identical amplitudes.
    bool roundtrip_exact = false;
};

CorrespondenceReport roundtrip(const CodeSubspace &code);
/// `v` must have unit norm.
CorrespondenceReport roundtrip(const PureState &v);

}  // namespace ame

#endif
