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
#include "qaqc/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include "qaqc/anneal.hpp"
#include "qaqc/errors.hpp"
#include "qaqc/presets.hpp"
#include "qaqc/serialize.hpp"

namespace qaqc {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string &field, const std::string &what) {
    throw ArgumentError("field '" + field + "': " + what);
}

void check_keys(const json &obj, const std::string &where, std::initializer_list<const char *> keys) {
    const std::set<std::string> allowed(keys.begin(), keys.end());
    for (const auto &item : obj.items()) {
        if (allowed.count(item.key()) == 0) {
            field_error(where.empty() ? item.key() : where + "." + item.key(), "unknown key");
        }
    }
}

const json &require_object(const json &doc, const std::string &field) {
    if (!doc.is_object()) {
        field_error(field, "expected an object");
    }
    return doc;
}

template <typename T> T get_number(const json &obj, const char *key, const std::string &field, T fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json &v = obj.at(key);
    if constexpr (std::is_integral_v<T>) {
        if (!v.is_number_integer()) {
            field_error(field, "expected an integer");
        }
        if constexpr (std::is_unsigned_v<T>) {
            if (v.is_number_unsigned() || v.get<long long>() >= 0) {
                return v.get<T>();
            }
            field_error(field, "must be non-negative");
        }
        return v.get<T>();
    } else {
        if (!v.is_number()) {
            field_error(field, "expected a number");
        }
        return v.get<T>();
    }
}

std::string get_string(const json &obj, const char *key, const std::string &field,
                       const std::string &fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    if (!obj.at(key).is_string()) {
        field_error(field, "expected a string");
    }
    return obj.at(key).get<std::string>();
}

NoiseModel parse_noise(const json &doc) {
    if (doc.is_string()) {
        if (doc.get<std::string>() == "default") {
            return NoiseModel::defaults();
        }
        field_error("noise", "expected \"default\" or an object");
    }
    require_object(doc, "noise");
    check_keys(doc, "noise", {"p1", "p2", "gamma", "readout_flip0", "readout_flip1"});
    NoiseModel m = NoiseModel::noiseless();
    m.p1 = get_number(doc, "p1", "noise.p1", m.p1);
    m.p2 = get_number(doc, "p2", "noise.p2", m.p2);
    m.gamma = get_number(doc, "gamma", "noise.gamma", m.gamma);
    m.readout_flip0 = get_number(doc, "readout_flip0", "noise.readout_flip0", m.readout_flip0);
    m.readout_flip1 = get_number(doc, "readout_flip1", "noise.readout_flip1", m.readout_flip1);
    try {
        m.validate();
    } catch (const std::exception &e) {
        field_error("noise", e.what());
    }
    return m;
}

OptimizerConfig parse_config(const json &doc) {
    require_object(doc, "optimizer_config");
    check_keys(doc, "optimizer_config",
               {"tolerance", "max_restarts", "max_iterations", "shots", "learning_rate",
                "bisection_levels", "fine_delta", "annealing", "seed", "search", "max_proposals",
                "max_depth", "max_length", "compaction_proposals", "inner"});
    OptimizerConfig c;
    const std::string p = "optimizer_config.";
    c.tolerance = get_number(doc, "tolerance", p + "tolerance", c.tolerance);
    c.max_restarts = get_number(doc, "max_restarts", p + "max_restarts", c.max_restarts);
    c.max_iterations = get_number(doc, "max_iterations", p + "max_iterations", c.max_iterations);
    c.shots = get_number(doc, "shots", p + "shots", c.shots);
    c.learning_rate = get_number(doc, "learning_rate", p + "learning_rate", c.learning_rate);
    c.bisection_levels =
        get_number(doc, "bisection_levels", p + "bisection_levels", c.bisection_levels);
    if (doc.contains("fine_delta")) {
        const json &fd = doc.at("fine_delta");
        if (!fd.is_array()) {
            field_error(p + "fine_delta", "expected an array of numbers");
        }
        for (const auto &x : fd) {
            if (!x.is_number()) {
                field_error(p + "fine_delta", "expected an array of numbers");
            }
            c.fine_delta.push_back(x.get<double>());
        }
    }
    if (doc.contains("annealing")) {
        const json &a = require_object(doc.at("annealing"), p + "annealing");
        check_keys(a, p + "annealing", {"initial_temperature", "cooling_ratio"});
        c.annealing.initial_temperature = get_number(
            a, "initial_temperature", p + "annealing.initial_temperature",
            c.annealing.initial_temperature);
        c.annealing.cooling_ratio = get_number(a, "cooling_ratio", p + "annealing.cooling_ratio",
                                               c.annealing.cooling_ratio);
    }
    c.seed = get_number(doc, "seed", p + "seed", c.seed);
    c.search = get_string(doc, "search", p + "search", c.search);
    c.max_proposals = get_number(doc, "max_proposals", p + "max_proposals", c.max_proposals);
    c.max_depth = get_number(doc, "max_depth", p + "max_depth", c.max_depth);
    c.max_length = get_number(doc, "max_length", p + "max_length", c.max_length);
    c.compaction_proposals = get_number(doc, "compaction_proposals", p + "compaction_proposals",
                                        c.compaction_proposals);
    try {
        c.inner = parse_inner_optimizer(get_string(doc, "inner", p + "inner", "free"));
    } catch (const ArgumentError &e) {
        field_error(p + "inner", e.what());
    }
    return c;
}

GateSequence parse_circuit(const json &doc, const std::string &field) {
    try {
        return sequence_from_json(doc);
    } catch (const std::exception &e) {
        field_error(field, e.what());
    }
}

struct TargetChoice {
    GateSequence target;
    std::string preset;
    int n = 0;
    std::uint64_t seed = 0;
};

TargetChoice parse_target(const json &doc) {
    TargetChoice t;
    if (doc.is_string()) {
        t.preset = doc.get<std::string>();
    } else {
        require_object(doc, "target");
        check_keys(doc, "target", {"preset", "n", "seed", "circuit"});
        if (doc.contains("circuit")) {
            if (doc.contains("preset")) {
                field_error("target", "give either 'preset' or 'circuit', not both");
            }
            t.target = parse_circuit(doc.at("circuit"), "target.circuit");
            return t;
        }
        t.preset = get_string(doc, "preset", "target.preset", "");
        t.n = get_number(doc, "n", "target.n", 0);
        t.seed = get_number<std::uint64_t>(doc, "seed", "target.seed", 0);
    }
    try {
        t.target = preset_target(t.preset, t.n, t.seed);
    } catch (const ArgumentError &e) {
        field_error("target", e.what());
    }
    return t;
}

std::string fmt(double v) { return format_double(v); }

} // namespace

std::string optimizer_kind_name(OptimizerKind kind) {
    switch (kind) {
    case OptimizerKind::Anneal:
        return "anneal";
    case OptimizerKind::Layered:
        return "layered";
    case OptimizerKind::Free:
        return "free";
    case OptimizerKind::Bisection:
        return "bisection";
    case OptimizerKind::Gradient:
        return "gradient";
    }
    return "anneal";
}

OptimizerKind parse_optimizer_kind(const std::string &name) {
    for (const auto k : {OptimizerKind::Anneal, OptimizerKind::Layered, OptimizerKind::Free,
                         OptimizerKind::Bisection, OptimizerKind::Gradient}) {
        if (optimizer_kind_name(k) == name) {
            return k;
        }
    }
    throw ArgumentError("unknown optimizer '" + name + "'");
}

Alphabet ExperimentSpec::resolved_alphabet() const {
    Alphabet a = Alphabet::by_name(alphabet);
    if (edges.empty()) {
        return a;
    }
    return a.with_edges(std::set<std::pair<int, int>>(edges.begin(), edges.end()));
}

void ExperimentSpec::validate() const {
    if (name.empty() || name.find_first_of("/\\") != std::string::npos) {
        field_error("name", "must be a non-empty file stem");
    }
    try {
        config.validate();
    } catch (const ArgumentError &e) {
        // Config messages read "<field>: <problem>".
        const std::string what = e.what();
        const auto colon = what.find(": ");
        if (colon == std::string::npos) {
            field_error("optimizer_config", what);
        }
        const std::string key = what.substr(0, colon);
        field_error(key == "noise" ? key : "optimizer_config." + key, what.substr(colon + 2));
    }
    const int n = target.num_qubits();
    for (const auto &[a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
            field_error("edges", "edge outside the target register");
        }
    }
    if (optimizer == OptimizerKind::Free || optimizer == OptimizerKind::Bisection ||
        optimizer == OptimizerKind::Gradient) {
        if (!structure) {
            field_error("structure", "required by the " + optimizer_kind_name(optimizer) +
                                         " optimizer");
        }
        if (structure->num_qubits() != n) {
            field_error("structure", "register width differs from the target");
        }
    }
    if (initial_length < 1) {
        field_error("initial_length", "must be at least 1");
    }
    if (segment_length < 0) {
        field_error("segment_length", "must be non-negative");
    }
    if (rounds < 1) {
        field_error("rounds", "must be at least 1");
    }
    if (cost.type == CostType::Weighted && !(cost.q >= 0.0 && cost.q <= 1.0)) {
        field_error("cost", "weight must lie in [0, 1]");
    }
}

ExperimentSpec experiment_spec_from_json(const json &doc) {
    require_object(doc, "<root>");
    check_keys(doc, "",
               {"name", "target", "structure", "alphabet", "edges", "cost", "optimizer",
                "initial_length", "segment_length", "rounds", "optimizer_config", "noise"});
    ExperimentSpec spec;
    spec.source = doc;
    spec.name = get_string(doc, "name", "name", spec.name);
    if (!doc.contains("target")) {
        field_error("target", "missing");
    }
    const TargetChoice target = parse_target(doc.at("target"));
    spec.target = target.target;
    if (doc.contains("structure")) {
        const json &s = doc.at("structure");
        if (s.is_string() && s.get<std::string>() == "preset") {
            if (!preset_has_ansatz(target.preset)) {
                field_error("structure", "target preset has no trainable structure");
            }
            spec.structure = preset_ansatz(target.preset, target.n, target.seed);
        } else {
            spec.structure = parse_circuit(s, "structure");
        }
    } else if (preset_has_ansatz(target.preset)) {
        spec.structure = preset_ansatz(target.preset, target.n, target.seed);
    }
    spec.alphabet = get_string(doc, "alphabet", "alphabet", spec.alphabet);
    try {
        Alphabet::by_name(spec.alphabet);
    } catch (const std::exception &e) {
        field_error("alphabet", e.what());
    }
    if (doc.contains("edges")) {
        const json &e = doc.at("edges");
        if (!e.is_array()) {
            field_error("edges", "expected an array of [a, b] pairs");
        }
        for (const auto &pair : e) {
            if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
                !pair[1].is_number_integer()) {
                field_error("edges", "expected an array of [a, b] pairs");
            }
            spec.edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
    }
    try {
        spec.cost = CostKind::parse(get_string(doc, "cost", "cost", "hst"));
    } catch (const ArgumentError &e) {
        field_error("cost", e.what());
    }
    try {
        spec.optimizer = parse_optimizer_kind(get_string(doc, "optimizer", "optimizer", "anneal"));
    } catch (const ArgumentError &e) {
        field_error("optimizer", e.what());
    }
    spec.initial_length = get_number(doc, "initial_length", "initial_length", spec.initial_length);
    spec.segment_length = get_number(doc, "segment_length", "segment_length", spec.segment_length);
    spec.rounds = get_number(doc, "rounds", "rounds", spec.rounds);
    if (doc.contains("optimizer_config")) {
        spec.config = parse_config(doc.at("optimizer_config"));
    }
    if (doc.contains("noise") && !doc.at("noise").is_null()) {
        spec.config.noise = parse_noise(doc.at("noise"));
    }
    spec.validate();
    return spec;
}

ExperimentSpec parse_experiment_spec(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = line_column(text, offset);
        throw ParseError("malformed experiment JSON", line, column);
    }
    return experiment_spec_from_json(doc);
}

RunReport run_experiment(const ExperimentSpec &spec) {
    spec.validate();
    const auto start = std::chrono::steady_clock::now();
    const Alphabet alphabet = spec.resolved_alphabet();
    RunReport report;
    report.spec = spec;
    switch (spec.optimizer) {
    case OptimizerKind::Anneal:
        report.result =
            anneal_structure(spec.target, alphabet, spec.initial_length, spec.cost, spec.config);
        break;
    case OptimizerKind::Layered:
        report.result = layered_refinement(spec.target, alphabet, spec.segment_length, spec.rounds,
                                           spec.cost, spec.config, spec.initial_length);
        break;
    case OptimizerKind::Free:
        report.result =
            optimize_continuous_free(spec.target, *spec.structure, spec.cost, spec.config);
        break;
    case OptimizerKind::Bisection:
        report.result = optimize_bisection(spec.target, *spec.structure, spec.config, spec.cost);
        break;
    case OptimizerKind::Gradient:
        report.result = optimize_gradient(spec.target, *spec.structure, spec.cost, spec.config);
        break;
    }
    const bool local = spec.cost.type == CostType::LHST;
    report.rows.reserve(report.result.trace.size());
    for (const auto &rec : report.result.trace) {
        CsvRow row;
        row.iteration = rec.iteration;
        row.cost = rec.cost.value;
        row.std_error = rec.cost.std_error;
        row.gradient_norm = rec.gradient_norm;
        if (local) {
            row.hst_via_lhst_cost = cost_hst(spec.target, rec.sequence, ExactBackend{}).value;
        }
        report.rows.push_back(row);
    }
    report.exit_code = report.result.converged ? 0 : 2;
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(text);
    }
    std::string out = "\"";
    for (const char c : text) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string report_csv(const RunReport &report) {
    std::ostringstream os;
    os << "iteration,cost,std_error,gradient_norm,hst_via_lhst_cost\r\n";
    for (const auto &row : report.rows) {
        os << row.iteration << ',' << fmt(row.cost) << ',' << fmt(row.std_error) << ','
           << (row.gradient_norm ? fmt(*row.gradient_norm) : "") << ','
           << (row.hst_via_lhst_cost ? fmt(*row.hst_via_lhst_cost) : "") << "\r\n";
    }
    return os.str();
}

std::string angle_annotation(double theta) {
    const double x = normalize_angle(theta) / std::numbers::pi;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2fpi", x);
    std::string out = buf;
    for (int q = 1; q <= 16; ++q) {
        const double p = std::round(x * q);
        if (std::abs(x - p / q) <= 0.01) {
            const auto pi = static_cast<long long>(p);
            if (pi == 0) {
                out += " (0)";
            } else if (q == 1) {
                out += " (" + std::to_string(pi) + " pi)";
            } else {
                out += " (" + std::to_string(pi) + "/" + std::to_string(q) + " pi)";
            }
            break;
        }
    }
    return out;
}

json report_json(const RunReport &report) {
    const auto &r = report.result;
    json angles = json::array();
    for (const double a : r.best_sequence.parameters()) {
        angles.push_back({{"radians", a}, {"annotation", angle_annotation(a)}});
    }
    json doc;
    doc["spec"] = report.spec.source;
    doc["best_sequence"] = sequence_to_json(r.best_sequence);
    try {
        doc["best_sequence_qasm"] = export_qasm(r.best_sequence);
    } catch (const UnsupportedGateError &) {
        doc["best_sequence_qasm"] = nullptr;
    }
    doc["best_cost"] = {{"value", r.best_cost.value},
                        {"std_error", r.best_cost.std_error},
                        {"shots", r.best_cost.shots}};
    doc["epsilon_approx"] = std::isfinite(r.epsilon_approx) ? json(r.epsilon_approx) : json();
    doc["angles"] = angles;
    doc["converged"] = r.converged;
    doc["stop_reason"] = r.stop_reason;
    doc["iterations"] = r.trace.size();
    doc["length"] = r.best_sequence.size();
    doc["depth"] = depth(r.best_sequence);
    doc["two_qubit_count"] = r.best_sequence.two_qubit_count();
    doc["exit_code"] = report.exit_code;
    doc["wall_seconds"] = report.wall_seconds;
    return doc;
}

std::filesystem::path write_report(const RunReport &report, const std::filesystem::path &dir) {
    // Render both documents before touching the file system.
    const std::string csv = report_csv(report);
    const std::string js = report_json(report).dump(2) + "\n";
    std::filesystem::create_directories(dir);
    const auto csv_path = dir / (report.spec.name + ".csv");
    const auto json_path = dir / (report.spec.name + ".json");
    std::ofstream(csv_path, std::ios::binary) << csv;
    std::ofstream(json_path, std::ios::binary) << js;
    return csv_path;
}

std::vector<DepthRow> scan_depth(const ExperimentSpec &spec, int max_depth) {
    if (max_depth < 1) {
        throw ArgumentError("max_depth must be at least 1");
    }
    spec.validate();
    const Alphabet alphabet = spec.resolved_alphabet();
    std::vector<DepthRow> rows;
    for (int d = 1; d <= max_depth; ++d) {
        OptimizerConfig cfg = spec.config;
        cfg.max_depth = d;
        cfg.seed = derive_seed(spec.config.seed, {static_cast<std::uint64_t>(d)});
        const auto r = anneal_structure(spec.target, alphabet, std::min(spec.initial_length, d),
                                        spec.cost, cfg);
        DepthRow row;
        row.depth = d;
        row.best_cost = r.best_cost;
        row.length = r.best_sequence.size();
        row.two_qubit_count = r.best_sequence.two_qubit_count();
        row.best_sequence = r.best_sequence;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string depth_csv(const std::vector<DepthRow> &rows) {
    std::ostringstream os;
    os << "depth,best_cost,std_error,length,two_qubit_count\r\n";
    for (const auto &r : rows) {
        os << r.depth << ',' << fmt(r.best_cost.value) << ',' << fmt(r.best_cost.std_error) << ','
           << r.length << ',' << r.two_qubit_count << "\r\n";
    }
    return os.str();
}

} // namespace qaqc
