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
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qaqc/errors.hpp"
#include "qaqc/experiments.hpp"
#include "qaqc/presets.hpp"
#include "test_util.hpp"

namespace {

using namespace qaqc;
using qaqc::ref::C;
using qaqc::ref::kPi;
using qaqc::ref::Mat;

const char *kBisectionDoc = R"({
  "name": "t_bisect",
  "target": "T",
  "structure": {"num_qubits": 1, "gates": [{"kind": "Rz", "qubits": [0], "theta": 0.0}]},
  "cost": "hst",
  "optimizer": "bisection",
  "optimizer_config": {"tolerance": 1e-9, "max_iterations": 20, "bisection_levels": 6, "seed": 1}
})";

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::vector<std::string> split_crlf(const std::string &text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find("\r\n", pos);
        if (end == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, end - pos));
        pos = end + 2;
    }
    return lines;
}

TEST(Presets, TwoQubitTargetsMatchTextbookMatrices) {
    const double h = 1.0 / std::sqrt(2.0);
    Mat swap = Mat::Zero(4, 4);
    swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1.0;
    Mat cz = Mat::Identity(4, 4);
    cz(3, 3) = -1.0;
    // Control is qubit 0 (index bit 0); H acts on qubit 1.
    Mat ch = Mat::Zero(4, 4);
    ch(0, 0) = ch(2, 2) = 1.0;
    ch(1, 1) = ch(1, 3) = ch(3, 1) = h;
    ch(3, 3) = -h;
    Mat cnot = Mat::Zero(4, 4);
    cnot(0, 0) = cnot(2, 2) = cnot(3, 1) = cnot(1, 3) = 1.0;
    Mat qft = Mat::Zero(4, 4);
    for (int j = 0; j < 4; ++j) {
        for (int k = 0; k < 4; ++k) {
            qft(j, k) = std::pow(C(0, 1), j * k) / 2.0;
        }
    }
    const std::pair<const char *, Mat> cases[] = {
        {"SWAP", swap}, {"CZ", cz}, {"CH", ch}, {"CNOT", cnot}, {"QFT2", qft}};
    for (const auto &[name, m] : cases) {
        const Mat u = ref::sequence_oracle(preset_target(name));
        EXPECT_LT(ref::phase_distance(u, m), 1e-12) << name;
    }
}

TEST(Presets, OneQubitTargets) {
    const double h = 1.0 / std::sqrt(2.0);
    Mat hm(2, 2);
    hm << h, h, h, -h;
    EXPECT_LT(ref::phase_distance(ref::sequence_oracle(preset_target("H")), hm), 1e-15);
    Mat t(2, 2);
    t << 1, 0, 0, std::polar(1.0, kPi / 4);
    EXPECT_LT(ref::phase_distance(ref::sequence_oracle(preset_target("T")), t), 1e-15);
    EXPECT_EQ(preset_target("I").size(), 0U);
}

TEST(Presets, Example1IsSeededRzLayer) {
    const auto a = preset_target("Example1", 5, 3);
    const auto b = preset_target("Example1", 5, 3);
    const auto c = preset_target("Example1", 5, 4);
    EXPECT_EQ(a.size(), 5U);
    EXPECT_EQ(a.count(GateKind::Rz), 5U);
    EXPECT_EQ(a.parameters(), b.parameters());
    EXPECT_NE(a.parameters(), c.parameters());
    EXPECT_TRUE(preset_has_ansatz("Example1"));
    EXPECT_EQ(preset_ansatz("Example1", 5, 3).num_parameters(), 5U);
    EXPECT_THROW(preset_target("Example2", 1, 0), ArgumentError);
    EXPECT_THROW(preset_target("Nope"), ArgumentError);
}

TEST(ParseSpec, SyntaxErrorCarriesPosition) {
    const std::string text = "{\n  \"target\": \"T\",\n  \"cost\": ]\n}";
    try {
        (void)parse_experiment_spec(text);
        FAIL() << "expected ParseError";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.line(), 3U);
        EXPECT_EQ(e.column(), 11U);
    }
}

TEST(ParseSpec, SemanticErrorsNameTheField) {
    const std::pair<const char *, const char *> cases[] = {
        {R"({"target": "T", "colour": 1})", "colour"},
        {R"({"target": "T", "cost": "bogus"})", "cost"},
        {R"({"target": "T", "optimizer": "magic"})", "optimizer"},
        {R"({"target": "T", "alphabet": "ionq"})", "alphabet"},
        {R"({"target": "T", "initial_length": 0})", "initial_length"},
        {R"({"target": "T", "optimizer_config": {"shots": -4}})", "shots"},
        {R"({"target": "T", "optimizer_config": {"tolerance": "x"}})", "tolerance"},
        {R"({"target": "T", "optimizer": "free"})", "structure"},
        {R"({"target": "CZ", "edges": [[0, 5]]})", "edges"},
        {R"({"target": "T", "cost": "weighted:1.5"})", "cost"},
        {R"({"cost": "hst"})", "target"},
    };
    for (const auto &[doc, field] : cases) {
        try {
            (void)parse_experiment_spec(doc);
            ADD_FAILURE() << "accepted: " << doc;
        } catch (const ArgumentError &e) {
            EXPECT_NE(std::string(e.what()).find(field), std::string::npos)
                << doc << " -> " << e.what();
        }
    }
}

TEST(ParseSpec, DefaultsAndNoise) {
    const auto spec = parse_experiment_spec(R"({"target": "X", "noise": "default", "optimizer_config": {"shots": 100}})");
    EXPECT_EQ(spec.name, "run");
    EXPECT_EQ(spec.optimizer, OptimizerKind::Anneal);
    EXPECT_EQ(spec.cost.type, CostType::HST);
    EXPECT_EQ(spec.alphabet, "ibm");
    ASSERT_TRUE(spec.config.noise.has_value());
    EXPECT_GT(spec.config.noise->p1, 0.0);
    const auto spec2 = parse_experiment_spec(
        R"({"target": {"preset": "Example1", "n": 3, "seed": 2}, "structure": "preset",
            "optimizer": "gradient", "cost": "lhst"})");
    EXPECT_EQ(spec2.target.num_qubits(), 3);
    ASSERT_TRUE(spec2.structure.has_value());
    EXPECT_EQ(spec2.structure->num_parameters(), 3U);
}

TEST(Report, CsvLayoutAndRowCount) {
    const auto report = run_experiment(parse_experiment_spec(kBisectionDoc));
    EXPECT_EQ(report.exit_code, 0);
    const std::string csv = report_csv(report);
    const auto lines = split_crlf(csv);
    ASSERT_FALSE(lines.empty());
    EXPECT_EQ(lines[0], "iteration,cost,std_error,gradient_norm,hst_via_lhst_cost");
    EXPECT_EQ(lines.size(), report.result.trace.size() + 1);
    EXPECT_EQ(report.rows.size(), report.result.trace.size());
    // Every line ends in CRLF; no bare LF.
    EXPECT_EQ(csv.substr(csv.size() - 2), "\r\n");
    for (std::size_t i = 0; i < csv.size(); ++i) {
        if (csv[i] == '\n') {
            ASSERT_GT(i, 0U);
            EXPECT_EQ(csv[i - 1], '\r');
        }
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        EXPECT_EQ(std::count(lines[i].begin(), lines[i].end(), ','), 4);
        EXPECT_EQ(lines[i].substr(lines[i].rfind(',')), ",");
    }
}

TEST(Report, RerunIsByteIdentical) {
    const auto spec = parse_experiment_spec(
        R"({"target": "T", "initial_length": 2,
            "optimizer_config": {"tolerance": 1e-3, "shots": 500, "max_iterations": 20,
                                 "max_proposals": 30, "seed": 9}})");
    const auto a = report_csv(run_experiment(spec));
    const auto b = report_csv(run_experiment(spec));
    EXPECT_EQ(a, b);
}

TEST(Report, LhstRunsCarryExactHstColumn) {
    const auto spec = parse_experiment_spec(
        R"({"target": {"preset": "Example1", "n": 2, "seed": 5}, "structure": "preset",
            "optimizer": "gradient", "cost": "lhst",
            "optimizer_config": {"tolerance": 1e-8, "max_iterations": 30, "seed": 2}})");
    const auto report = run_experiment(spec);
    ASSERT_FALSE(report.rows.empty());
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        ASSERT_TRUE(report.rows[i].hst_via_lhst_cost.has_value());
        const Mat u = ref::sequence_oracle(spec.target);
        const Mat v = ref::sequence_oracle(report.result.trace[i].sequence);
        EXPECT_NEAR(*report.rows[i].hst_via_lhst_cost, ref::hst_oracle(u, v), 1e-10);
    }
    const auto lines = split_crlf(report_csv(report));
    EXPECT_NE(lines.back().back(), ',');
}

TEST(Report, ExitCodeTwoWhenToleranceMissed) {
    // Rz alone can never reproduce X.
    const auto report = run_experiment(parse_experiment_spec(
        R"({"target": "X",
            "structure": {"num_qubits": 1, "gates": [{"kind": "Rz", "qubits": [0], "theta": 0.0}]},
            "optimizer": "bisection",
            "optimizer_config": {"tolerance": 1e-6, "max_iterations": 5, "bisection_levels": 2}})"));
    EXPECT_EQ(report.exit_code, 2);
    EXPECT_FALSE(report.result.converged);
    EXPECT_NEAR(report.result.best_cost.value, 1.0, 1e-12);
}

TEST(Report, JsonAndFilesWritten) {
    const auto report = run_experiment(parse_experiment_spec(kBisectionDoc));
    const auto doc = report_json(report);
    EXPECT_EQ(doc.at("exit_code"), 0);
    EXPECT_TRUE(doc.at("converged").get<bool>());
    ASSERT_EQ(doc.at("angles").size(), 1U);
    EXPECT_EQ(doc.at("angles")[0].at("annotation"), "0.25pi (1/4 pi)");
    EXPECT_EQ(doc.at("spec").at("name"), "t_bisect");
    EXPECT_TRUE(doc.at("best_sequence_qasm").is_string());

    const auto dir = std::filesystem::temp_directory_path() / "qaqc_report_test";
    std::filesystem::remove_all(dir);
    const auto csv_path = write_report(report, dir);
    EXPECT_EQ(csv_path, dir / "t_bisect.csv");
    EXPECT_EQ(slurp(csv_path), report_csv(report));
    const auto js = nlohmann::json::parse(slurp(dir / "t_bisect.json"));
    EXPECT_EQ(js.at("stop_reason"), report.result.stop_reason);
    std::filesystem::remove_all(dir);
}

TEST(AngleAnnotation, Fractions) {
    EXPECT_EQ(angle_annotation(kPi / 4), "0.25pi (1/4 pi)");
    EXPECT_EQ(angle_annotation(kPi), "1.00pi (1 pi)");
    EXPECT_EQ(angle_annotation(0.0), "0.00pi (0)");
    EXPECT_EQ(angle_annotation(-kPi / 2), "1.50pi (3/2 pi)");
    EXPECT_EQ(angle_annotation(2 * kPi / 3), "0.67pi (2/3 pi)");
    EXPECT_EQ(angle_annotation(0.123 * kPi).substr(0, 6), "0.12pi");
}

TEST(CsvField, Rfc4180Quoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_field("two\nlines"), "\"two\nlines\"");
}

TEST(ScanDepth, IdentityAndHadamard) {
    auto spec = parse_experiment_spec(
        R"({"target": "I", "initial_length": 1,
            "optimizer_config": {"tolerance": 1e-6, "max_iterations": 50, "max_proposals": 60, "seed": 3}})");
    const auto id_rows = scan_depth(spec, 1);
    ASSERT_EQ(id_rows.size(), 1U);
    EXPECT_LT(id_rows[0].best_cost.value, 1e-6);

    spec = parse_experiment_spec(
        R"({"target": "H", "initial_length": 1,
            "optimizer_config": {"tolerance": 1e-6, "max_iterations": 100, "max_proposals": 300, "seed": 3}})");
    const auto rows = scan_depth(spec, 3);
    ASSERT_EQ(rows.size(), 3U);
    EXPECT_GT(rows[0].best_cost.value, 1e-3);
    EXPECT_GT(rows[1].best_cost.value, 1e-3);
    EXPECT_LT(rows[2].best_cost.value, 1e-6);
    for (const auto &r : rows) {
        EXPECT_LE(depth(r.best_sequence), r.depth);
    }
    const auto lines = split_crlf(depth_csv(rows));
    EXPECT_EQ(lines[0], "depth,best_cost,std_error,length,two_qubit_count");
    EXPECT_EQ(lines.size(), 4U);
    EXPECT_THROW((void)scan_depth(spec, 0), ArgumentError);
}

} // namespace
