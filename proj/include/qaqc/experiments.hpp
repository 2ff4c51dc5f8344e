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
 * Experiment runner behind the `qaqc` command line tool. The config document
 * is described in docs/config.md.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qaqc/optimize.hpp"

namespace qaqc {

enum class OptimizerKind { Anneal, Layered, Free, Bisection, Gradient };

[[nodiscard]] std::string optimizer_kind_name(OptimizerKind kind);
[[nodiscard]] OptimizerKind parse_optimizer_kind(const std::string &name);

struct ExperimentSpec {
    std::string name = "run";
    GateSequence target;
    /// Trainable structure for the continuous optimizers.
    std::optional<GateSequence> structure;
    std::string alphabet = "ibm";
    /// Coupling edges; empty means all-to-all.
    std::vector<std::pair<int, int>> edges;
    CostKind cost = CostKind::hst();
    OptimizerKind optimizer = OptimizerKind::Anneal;
    int initial_length = 3;
    int segment_length = 0;
    int rounds = 1;
    OptimizerConfig config;
    /// The parsed document, echoed into the report.
    nlohmann::json source;

    /// Throws ArgumentError naming the offending field.
    void validate() const;
    [[nodiscard]] Alphabet resolved_alphabet() const;
};

/**
 * Parses an experiment document. Syntax errors raise ParseError with the line
 * and column; semantic errors raise ArgumentError naming the field.
 */
ExperimentSpec parse_experiment_spec(std::string_view text);
ExperimentSpec experiment_spec_from_json(const nlohmann::json &doc);

struct CsvRow {
    std::uint64_t iteration = 0;
    double cost = 0.0;
    double std_error = 0.0;
    std::optional<double> gradient_norm;
    /// Exact noiseless C_HST at the row's sequence; LHST runs only.
    std::optional<double> hst_via_lhst_cost;
};

struct RunReport {
    ExperimentSpec spec;
    CompilationResult result;
    double wall_seconds = 0.0;
    std::vector<CsvRow> rows;
    /// 0 when the stopping criterion was met, 2 otherwise.
    int exit_code = 0;
};

RunReport run_experiment(const ExperimentSpec &spec);

/// Header plus one row per trace record; floats in shortest round-trip form.
std::string report_csv(const RunReport &report);
nlohmann::json report_json(const RunReport &report);
/// Writes <dir>/<name>.csv and <dir>/<name>.json; returns the CSV path.
std::filesystem::path write_report(const RunReport &report, const std::filesystem::path &dir);

struct DepthRow {
    int depth = 0;
    CostEstimate best_cost;
    std::size_t length = 0;
    std::size_t two_qubit_count = 0;
    GateSequence best_sequence;
};

/// Structure search with the circuit depth capped at 1..max_depth.
std::vector<DepthRow> scan_depth(const ExperimentSpec &spec, int max_depth);
std::string depth_csv(const std::vector<DepthRow> &rows);

/// Angle in [0, 2pi) as a multiple of pi, e.g. "0.25pi (1/4 pi)"; the fraction only when within 0.01 pi.
std::string angle_annotation(double theta);

/// RFC 4180 field quoting.
std::string csv_field(std::string_view text);

} // namespace qaqc
