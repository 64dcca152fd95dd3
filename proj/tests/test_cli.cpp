// Copyright 2026 The wqed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the wqed executable and the files it writes.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;

struct Result {
  int status;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wqed_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  static std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  Result run(const std::string& args) {
    const fs::path out = dir_ / "stdout.txt", err = dir_ / "stderr.txt";
    const std::string cmd = std::string(WQED_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  static std::vector<std::string> header_of(const std::string& csv) {
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line) && line.rfind("#", 0) == 0) {
    }
    std::vector<std::string> cols;
    std::stringstream ss(line);
    for (std::string c; std::getline(ss, c, ',');) cols.push_back(c);
    return cols;
  }

  fs::path dir_;
};

constexpr const char* kTransparency = R"({
  "params": {"delta_a": 0.5, "delta_b": 0.5, "J": 1, "theta": "2pi/3", "phi": "pi"},
  "drive": {"p": 1}, "direction": "both", "outputs": ["T", "R", "purity"]
})";

TEST_F(Cli, PointPrintsCsv) {
  const Result r = run("point --config " + write("c.json", kTransparency).string());
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("# wqed-table 1\n", 0), 0u);
  EXPECT_EQ(header_of(r.out).front(), "T_F");
  EXPECT_NE(r.out.find("\n0.99999999999"), std::string::npos);
}

TEST_F(Cli, PointFailureExitsNonzero) {
  const Result r = run("point --config " + write("c.json", kTransparency).string() + " --set p=0");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("p=0 normalization undefined"), std::string::npos);
}

TEST_F(Cli, BadInputExitsWithUsageCode) {
  EXPECT_EQ(run("point --config " + write("c.json", R"({"bogus": 1})").string()).status, 2);
  EXPECT_EQ(run("point --config " + write("c.json", kTransparency).string() + " --set theta=oops").status, 2);
  EXPECT_EQ(run("sweep --config " + write("c.json", kTransparency).string() + " --out x.csv").status, 2);
  EXPECT_NE(run("point --config /does/not/exist.json").status, 0);
  EXPECT_NE(run("figure fig9 --out " + dir_.string()).status, 0);
  EXPECT_NE(run("--workers 0 verify").status, 0);
  EXPECT_NE(run("").status, 0);
}

TEST_F(Cli, SweepWritesCsvAndJson) {
  const fs::path cfg = write("s.json", R"({
    "params": {"delta_a": 0.5, "delta_b": 0.5, "J": 1, "theta": "18pi/25", "phi": "9pi/25"},
    "direction": "both", "outputs": ["T_c", "T"],
    "sweep": {"variable": "p", "from": 0.001, "to": 10, "points": 9, "scale": "log"}
  })");
  const fs::path csv = dir_ / "out.csv", json = dir_ / "out.json";
  const Result r = run("--workers 2 sweep --config " + cfg.string() + " --out " + csv.string() + " --json " +
                       json.string());
  ASSERT_EQ(r.status, 0) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(header_of(text), (std::vector<std::string>{"p", "T_c_F", "T_c_B", "T_F", "T_B", "kernel_dim_F",
                                                       "residual_F", "kernel_dim_B", "residual_B", "error"}));
  const nlohmann::json doc = nlohmann::json::parse(slurp(json));
  EXPECT_EQ(doc.at("rows").size(), 9u);

  // Same bytes with a different worker count.
  const fs::path csv1 = dir_ / "out1.csv";
  ASSERT_EQ(run("--workers 1 sweep --config " + cfg.string() + " --out " + csv1.string()).status, 0);
  EXPECT_EQ(slurp(csv1), text);
}

TEST_F(Cli, WorkersFromEnvironment) {
  const fs::path cfg = write("s.json", R"({"sweep": {"variable": "J", "from": 0, "to": 1, "points": 4}})");
  const Result r = run("sweep --config " + cfg.string() + " --out " + (dir_ / "o.csv").string());
  ::setenv("WQED_WORKERS", "3", 1);
  const Result e = run("sweep --config " + cfg.string() + " --out " + (dir_ / "e.csv").string());
  ::unsetenv("WQED_WORKERS");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(e.status, 0);
  EXPECT_EQ(slurp(dir_ / "o.csv"), slurp(dir_ / "e.csv"));
}

TEST_F(Cli, FigureWritesSeriesAndManifest) {
  const Result r = run("figure fig7 --out " + (dir_ / "fig").string());
  ASSERT_EQ(r.status, 0) << r.err;
  const nlohmann::json manifest = nlohmann::json::parse(slurp(dir_ / "fig" / "fig7_manifest.json"));
  EXPECT_EQ(manifest.at("figure"), "fig7");
  ASSERT_EQ(manifest.at("series").size(), 2u);
  for (const auto& s : manifest.at("series")) {
    const std::string csv = slurp(dir_ / "fig" / s.at("file").get<std::string>());
    const std::vector<std::string> cols = header_of(csv);
    EXPECT_EQ(cols, s.at("columns").get<std::vector<std::string>>());
    // Columns the plotting scripts read.
    for (const char* needed : {"p", "g2_T_F", "g2_T_B", "g2_R_F", "g2_R_B", "error"}) {
      EXPECT_NE(std::find(cols.begin(), cols.end(), needed), cols.end()) << needed;
    }
    EXPECT_EQ(s.at("rows"), 200);
    EXPECT_EQ(s.at("failed_rows"), 0);
  }
}

TEST_F(Cli, VerifyReportsAllPass) {
  const Result r = run("verify");
  EXPECT_EQ(r.status, 0) << r.out;
  std::istringstream in(r.out);
  int lines = 0;
  for (std::string line; std::getline(in, line); ++lines) EXPECT_EQ(line.rfind("PASS ", 0), 0u) << line;
  EXPECT_GE(lines, 10);
}

}  // namespace
