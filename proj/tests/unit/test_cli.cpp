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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = QAQC_CLI_PATH;
const fs::path kConfigs = QAQC_CONFIG_DIR;

class Cli : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("qaqc_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    int run(const std::string &args, const fs::path &out) const {
        const std::string cmd = "\"" + kCli + "\" --output-dir \"" + out.string() + "\" " + args +
                                " > \"" + (dir_ / "stdout.txt").string() + "\" 2> \"" +
                                (dir_ / "stderr.txt").string() + "\"";
        const int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    }

    fs::path write(const std::string &name, const std::string &text) const {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << text;
        return p;
    }

    static std::string slurp(const fs::path &p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }

    fs::path dir_;
};

const char *kQuick = R"({
  "name": "quick",
  "target": "T",
  "initial_length": 2,
  "optimizer_config": {"tolerance": 1e-3, "shots": 400, "max_iterations": 20, "max_proposals": 40, "seed": 5}
})";

TEST_F(Cli, InvalidConfigExitsOneWithoutOutputs) {
    const auto out = dir_ / "out";
    const auto bad = write("bad.json", R"({"target": "T", "shots": 10})");
    EXPECT_EQ(run("run \"" + bad.string() + "\"", out), 1);
    EXPECT_FALSE(fs::exists(out));
    EXPECT_NE(slurp(dir_ / "stderr.txt").find("shots"), std::string::npos);

    const auto broken = write("broken.json", "{\n  \"target\": \n");
    EXPECT_EQ(run("run \"" + broken.string() + "\"", out), 1);
    EXPECT_NE(slurp(dir_ / "stderr.txt").find(":3:"), std::string::npos);
    EXPECT_FALSE(fs::exists(out));

    EXPECT_EQ(run("run \"" + (dir_ / "missing.json").string() + "\"", out), 1);
    EXPECT_FALSE(fs::exists(out));
}

TEST_F(Cli, ValidRunWritesCsvAndJson) {
    const auto cfg = kConfigs / "t_bisection.json";
    EXPECT_EQ(run("run \"" + cfg.string() + "\"", dir_), 0);
    EXPECT_TRUE(fs::exists(dir_ / "t_bisection.csv"));
    EXPECT_TRUE(fs::exists(dir_ / "t_bisection.json"));
}

TEST_F(Cli, UnreachedToleranceExitsTwo) {
    const auto cfg = write("x_rz.json", R"({
      "name": "x_rz", "target": "X",
      "structure": {"num_qubits": 1, "gates": [{"kind": "Rz", "qubits": [0], "theta": 0.0}]},
      "optimizer": "bisection",
      "optimizer_config": {"tolerance": 1e-6, "max_iterations": 5, "bisection_levels": 2}
    })");
    EXPECT_EQ(run("run \"" + cfg.string() + "\"", dir_), 2);
    EXPECT_TRUE(fs::exists(dir_ / "x_rz.csv"));
}

TEST_F(Cli, RerunsAndThreadCountsAreByteIdentical) {
    const auto cfg = write("quick.json", kQuick);
    ASSERT_EQ(run("--jobs 1 run \"" + cfg.string() + "\"", dir_ / "a"), 0);
    ASSERT_EQ(run("--jobs 1 run \"" + cfg.string() + "\"", dir_ / "b"), 0);
    ASSERT_EQ(run("--jobs 2 run \"" + cfg.string() + "\"", dir_ / "c"), 0);
    const auto a = slurp(dir_ / "a" / "quick.csv");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir_ / "b" / "quick.csv"));
    EXPECT_EQ(a, slurp(dir_ / "c" / "quick.csv"));
}

TEST_F(Cli, SeedOverrideChangesTheRun) {
    const auto cfg = write("quick.json", kQuick);
    ASSERT_EQ(run("run \"" + cfg.string() + "\"", dir_ / "a"), 0);
    ASSERT_EQ(run("--seed 5 run \"" + cfg.string() + "\"", dir_ / "b"), 0);
    run("--seed 6 run \"" + cfg.string() + "\"", dir_ / "c");
    EXPECT_EQ(slurp(dir_ / "a" / "quick.csv"), slurp(dir_ / "b" / "quick.csv"));
    EXPECT_NE(slurp(dir_ / "a" / "quick.csv"), slurp(dir_ / "c" / "quick.csv"));
}

TEST_F(Cli, ScanDepthWritesTable) {
    const auto cfg = write("ident.json", R"({
      "name": "ident", "target": "I", "initial_length": 1,
      "optimizer_config": {"tolerance": 1e-6, "max_iterations": 20, "max_proposals": 20, "seed": 1}
    })");
    EXPECT_EQ(run("scan-depth \"" + cfg.string() + "\" --max-depth 2", dir_), 0);
    const auto csv = slurp(dir_ / "ident_depth.csv");
    EXPECT_EQ(csv.rfind("depth,best_cost,std_error,length,two_qubit_count\r\n", 0), 0U);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
}

TEST_F(Cli, VerifyPasses) {
    EXPECT_EQ(run("verify", dir_), 0);
    EXPECT_NE(slurp(dir_ / "stdout.txt").find("PASS"), std::string::npos);
}

TEST_F(Cli, MissingSubcommandIsAnError) {
    EXPECT_NE(run("", dir_), 0);
}

} // namespace
