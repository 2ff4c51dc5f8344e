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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qaqc/errors.hpp"
#include "qaqc/experiments.hpp"
#include "qaqc/parallel.hpp"
#include "qaqc/serialize.hpp"
#include "qaqc/verify.hpp"

namespace {

constexpr int kInvalidConfig = 1;

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qaqc::ArgumentError("cannot read '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

/// Loads and validates the config; prints the diagnostic and returns nullopt on failure.
std::optional<qaqc::ExperimentSpec> load_spec(const std::string &path,
                                              const std::optional<std::uint64_t> &seed) {
    try {
        auto spec = qaqc::parse_experiment_spec(read_file(path));
        if (seed) {
            spec.config.seed = *seed;
        }
        if (spec.source.contains("name") == false) {
            spec.name = std::filesystem::path(path).stem().string();
        }
        spec.validate();
        return spec;
    } catch (const qaqc::ParseError &e) {
        std::cerr << path << ":" << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    } catch (const std::exception &e) {
        std::cerr << path << ": " << e.what() << "\n";
    }
    return std::nullopt;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Variational compilation of quantum circuits on a statevector simulator"};
    app.require_subcommand(1);

    std::optional<std::uint64_t> seed;
    int jobs = 0;
    std::string output_dir = ".";
    app.add_option("--seed", seed, "Override the config seed")->group("Global");
    app.add_option("--jobs", jobs, "Worker threads (falls back to QAQC_THREADS)")
        ->check(CLI::NonNegativeNumber)
        ->group("Global");
    app.add_option("--output-dir", output_dir, "Directory for CSV and JSON outputs")
        ->group("Global");

    std::string config_path;
    auto *run = app.add_subcommand("run", "Run one experiment from a JSON config");
    run->add_option("config", config_path, "Experiment config")->required();
    run->fallthrough();

    int max_depth = 0;
    auto *scan = app.add_subcommand("scan-depth", "Best cost for every depth budget up to K");
    scan->add_option("config", config_path, "Experiment config")->required();
    scan->add_option("--max-depth", max_depth, "Largest depth budget")
        ->required()
        ->check(CLI::PositiveNumber);
    scan->fallthrough();

    auto *verify = app.add_subcommand("verify", "Run the oracle and property suites");
    verify->fallthrough();

    CLI11_PARSE(app, argc, argv);
    qaqc::set_num_threads(jobs);

    try {
        if (*run) {
            const auto spec = load_spec(config_path, seed);
            if (!spec) {
                return kInvalidConfig;
            }
            const auto report = qaqc::run_experiment(*spec);
            const auto csv = qaqc::write_report(report, output_dir);
            std::cout << "best cost " << qaqc::format_double(report.result.best_cost.value)
                      << " (" << report.result.stop_reason << ", "
                      << report.result.trace.size() << " records) -> " << csv.string() << "\n";
            return report.exit_code;
        }
        if (*scan) {
            const auto spec = load_spec(config_path, seed);
            if (!spec) {
                return kInvalidConfig;
            }
            const auto rows = qaqc::scan_depth(*spec, max_depth);
            const std::string csv = qaqc::depth_csv(rows);
            std::filesystem::create_directories(output_dir);
            const auto path = std::filesystem::path(output_dir) / (spec->name + "_depth.csv");
            std::ofstream(path, std::ios::binary) << csv;
            std::cout << csv;
            return 0;
        }
        const auto checks = qaqc::verify_suite(seed.value_or(2026));
        std::cout << qaqc::format_verify_table(checks);
        for (const auto &c : checks) {
            if (!c.passed) {
                return 1;
            }
        }
        return 0;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalidConfig;
    }
}
