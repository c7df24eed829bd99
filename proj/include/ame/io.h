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

#ifndef AME_IO_H
#define AME_IO_H

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ame/correspondence.h"
#include "ame/groups.h"
#include "ame/invariants.h"
#include "ame/kempfness.h"
#include "ame/qecc.h"

// JSON file formats.
//
//   number   {"conductor": N, "coeffs": ["p/q", ...]}        power basis of Q(zeta_N)
//   state    {"dims": [...], "conductor": N, "amps": [number, ...]}   row-major
//   operator {"scalar": number, "factors": [[number, ...], ...]}      each factor row-major d x d
//   ops      {"operators": [operator, ...]}
//   code     {"n": n, "D": D, "conductor": N, "claimed_d": d, "basis": [[number, ...], ...]}
//
// Every file may carry a free-form "source" string describing where the
// values come from. It is preserved on ingest and ignored otherwise.

namespace ame::io {

using Json = nlohmann::ordered_json;

constexpr const char *kReportSchema = "ame-report/1";

/// Why an ingest failed. `field` is a JSON-pointer-like path ("amps/3/coeffs")
/// or the name of the failing check.
struct IngestError : std::runtime_error {
    enum class Kind { kParse, kInvariant };
    IngestError(Kind kind, std::string field, const std::string &message);

    Kind kind;
    std::string field;
};

Json to_json(const Cyclotomic &x);
Json to_json(const PureState &v);
Json to_json(const LocalOperator &op);
Json to_json(const std::vector<LocalOperator> &ops);
Json to_json(const CodeSubspace &code);

/// Single-site operator holding one matrix, for matrix-valued generators.
LocalOperator as_operator(const ExactMatrix &m);

Cyclotomic cyclotomic_from_json(const Json &j, const std::string &path = "");
PureState state_from_json(const Json &j);
/// Canonicalizes the operator (see LocalOperator).
LocalOperator operator_from_json(const Json &j, const std::string &path = "");
std::vector<LocalOperator> ops_from_json(const Json &j);
/// Checks dims and exact orthonormality of the basis and, if present, that
/// the claimed distance does not exceed the computed one.
CodeSubspace code_from_json(const Json &j);

enum class FileKind { kState, kOperator, kOps, kCode };

std::string kind_name(FileKind kind);

struct Ingested {
    FileKind kind;
    std::string source;
    std::variant<PureState, LocalOperator, std::vector<LocalOperator>, CodeSubspace> value;
};

/// Parses and validates a file, detecting its kind from its keys.
Ingested ingest_file(const std::string &path);
Ingested ingest(const Json &j);
Json to_json(const Ingested &object);

/// Reads and parses JSON; throws IngestError with the parser's line/column.
Json read_json(const std::string &path);
/// Writes with two-space indentation and a trailing newline.
void write_json(const std::string &path, const Json &j);

Json to_json(const KlReport &report);
Json to_json(const UniformityReport &report);
Json to_json(const CorrespondenceReport &report);
Json to_json(const CartanPoint &p);
Json to_json(const InvariantTriple &t);
Json to_json(const InvarianceReport &report);
Json to_json(const Fingerprint &f);
Json to_json(const CriticalityReport &report);
/// Omits the final state and group element.
Json to_json(const FlowReport &report);
Json to_json(const CosetReport &report);
Json to_json(const SymmetryFormReport &report);
Json to_json(const CentralizerReport &report);

}  // namespace ame::io

#endif
