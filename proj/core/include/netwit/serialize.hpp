// Copyright 2026 The netwit Authors
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

#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "netwit/graph.hpp"
#include "netwit/network.hpp"
#include "netwit/protocol.hpp"
#include "netwit/states.hpp"
#include "netwit/tensor.hpp"
#include "netwit/witness.hpp"

namespace netwit {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::json;

/// {"dims": [...], "re": [...], "im": [...]}, row-major.
Json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const Witness& w);
/// Metadata and the assembled state matrix.
Json to_json(const NetworkState& n);
Json to_json(const DetectionReport& r);
Json to_json(const std::vector<CutReport>& cuts);
Json to_json(const ChoiSearchResult& r);

/// {"n": n, "edges": [[i, j], ...]}.
Json to_json(const GraphSpec& g);
GraphSpec graph_from_json(const Json& j);

/// Tolerance constants used across the library, embedded in every report.
Json tolerances_json();

/// Sorted keys, two-space indent, doubles as %.12e, integers verbatim,
/// non-finite doubles as the strings "inf", "-inf", "nan". Ends with a newline.
std::string canonical_json(const Json& j);

/// Two lines: dotted paths of every scalar leaf reachable through objects
/// (arrays are skipped), then the values in the same order.
std::string flatten_csv(const Json& j);

enum class ReportFormat { json, csv };

/// Writes canonical_json or flatten_csv to `path`. Throws std::runtime_error
/// when the file cannot be written.
void write_report(const Json& report, const std::string& path, ReportFormat format);

}  // namespace netwit
