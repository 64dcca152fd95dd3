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

// wqed command-line driver.
//
//   wqed point  --config FILE [--set key=value ...] [--out FILE.csv]
//   wqed sweep  --config FILE [--set key=value ...] --out FILE.csv [--json FILE.json]
//   wqed figure NAME --out DIR
//   wqed verify [--seed N]
//
// Exit status: 0 on success, 1 if any point or check failed, 2 on bad input.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wqed/presets.hpp"
#include "wqed/sweep.hpp"
#include "wqed/verify.hpp"

namespace {

constexpr int kExitFailedPoint = 1;
constexpr int kExitBadInput = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_table(const std::string& path, const wqed::Table& table, bool as_json) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  if (as_json) {
    wqed::write_json(out, table);
  } else {
    wqed::write_csv(out, table);
  }
}

void report_failures(const wqed::Table& table) {
  for (const wqed::RecordRow& row : table.rows) {
    if (row.ok()) continue;
    std::cerr << "wqed: point";
    for (std::size_t i = 0; i < row.coordinates.size(); ++i) {
      std::cerr << " " << table.coordinate_columns[i] << "=" << wqed::format_number(row.coordinates[i]);
    }
    std::cerr << " failed: " << row.error << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steady-state photon transport through two qubits with complex exchange"};
  app.require_subcommand(1);

  std::optional<unsigned> workers_flag;
  app.add_option("--workers", workers_flag, "Worker threads (default: WQED_WORKERS, then hardware threads)")
      ->check(CLI::PositiveNumber);

  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_path;
  std::string json_path;

  auto* point = app.add_subcommand("point", "Evaluate one parameter point");
  point->add_option("--config", config_path, "JSON config")->required()->check(CLI::ExistingFile);
  point->add_option("--set", overrides, "Override a config value, key=value");
  point->add_option("--out", out_path, "Write the CSV here instead of stdout");

  auto* sweep = app.add_subcommand("sweep", "Run a swept config into a CSV table");
  sweep->add_option("--config", config_path, "JSON config")->required()->check(CLI::ExistingFile);
  sweep->add_option("--set", overrides, "Override a config value, key=value");
  sweep->add_option("--out", out_path, "CSV output file")->required();
  sweep->add_option("--json", json_path, "Also write a JSON mirror of the table");

  std::string figure_name;
  auto* figure = app.add_subcommand("figure", "Run a built-in figure preset");
  figure->add_option("name", figure_name, "Preset name")->required()->check(CLI::IsMember(wqed::preset_names()));
  figure->add_option("--out", out_path, "Output directory")->required();

  std::uint64_t seed = 20260101;
  auto* verify = app.add_subcommand("verify", "Run the invariant suite and print a report");
  verify->add_option("--seed", seed, "Seed for the random parameter draws");

  CLI11_PARSE(app, argc, argv);

  try {
    const unsigned workers = wqed::resolve_workers(workers_flag);

    if (*point || *sweep) {
      const wqed::RunConfig config = wqed::parse_config(read_file(config_path), overrides);
      if (*point && config.sweep) throw std::invalid_argument("point: config has a sweep axis; use 'wqed sweep'");
      if (*sweep && !config.sweep) throw std::invalid_argument("sweep: config has no sweep axis");
      const wqed::Table table = wqed::run(config, workers);
      if (out_path.empty()) {
        wqed::write_csv(std::cout, table);
      } else {
        write_table(out_path, table, false);
      }
      if (!json_path.empty()) write_table(json_path, table, true);
      report_failures(table);
      return table.failed_rows() == 0 ? 0 : kExitFailedPoint;
    }

    if (*figure) {
      const wqed::FigureOutput output = wqed::write_figure(wqed::figure_preset(figure_name), out_path, workers);
      for (const auto& file : output.files) std::cout << file.string() << "\n";
      if (output.failed_rows > 0) {
        std::cerr << "wqed: " << output.failed_rows << " failed points, see the error column\n";
        return kExitFailedPoint;
      }
      return 0;
    }

    if (*verify) {
      const std::vector<wqed::CheckResult> results = wqed::run_invariant_suite(seed);
      wqed::print_report(std::cout, results);
      for (const auto& r : results) {
        if (!r.passed) return kExitFailedPoint;
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "wqed: " << e.what() << "\n";
    return kExitBadInput;
  }
  return 0;
}
