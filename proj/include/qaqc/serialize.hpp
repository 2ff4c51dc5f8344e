// Copyright 2026 The QAQC Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Circuit text formats. QASM is export-only (grammar in docs/qasm.md); the
 * JSON circuit document round-trips losslessly, angles as hex-float strings.
 */
#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "qaqc/sequence.hpp"

namespace qaqc {

/// Shortest decimal that parses back to exactly `value`.
std::string format_double(double value);
/// C99 hex-float ("%a") spelling of `value`.
std::string hex_float(double value);
/// Parses hex-float or decimal text; throws ArgumentError on junk.
double parse_float(std::string_view text);

std::string export_qasm(const GateSequence &seq);

std::string export_json(const GateSequence &seq);
/// Throws ParseError with the 1-based line and column of the first problem.
GateSequence import_json(std::string_view text);

nlohmann::json sequence_to_json(const GateSequence &seq);
/// Throws ArgumentError naming the offending field.
GateSequence sequence_from_json(const nlohmann::json &doc);

/// Converts a byte offset of `text` to a 1-based (line, column).
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

} // namespace qaqc
