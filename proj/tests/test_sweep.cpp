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

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "wqed/presets.hpp"
#include "wqed/sweep.hpp"

namespace wqed {
namespace {

RunConfig transparency_config() {
  RunConfig c;
  c.params.phi = kPi;
  c.params.j_mag = 1.0;
  c.params.theta = 2.0 * kPi / 3.0;
  c.params.set_symmetric_detuning(0.5);
  c.power = 1.0;
  c.direction = Direction::Both;
  c.outputs = {Observable::T, Observable::R, Observable::Purity};
  return c;
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cell += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cell);
      cell.clear();
    } else {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

TEST(RunPoint, TransparencyConfig) {
  const RunConfig c = transparency_config();
  const RecordRow row = run_point(c);
  ASSERT_TRUE(row.ok()) << row.error;
  ASSERT_EQ(row.observables.size(), 6u);  // (T, R, purity) x (F, B)
  for (int d = 0; d < 2; ++d) {
    EXPECT_NEAR(*row.observables[0 * 2 + d], 1.0, 1e-8);
    EXPECT_NEAR(*row.observables[1 * 2 + d], 0.0, 1e-8);
    EXPECT_NEAR(*row.observables[2 * 2 + d], 1.0, 1e-8);
    EXPECT_EQ(*row.kernel_dims[d], 1);
    EXPECT_LE(*row.residuals[d], 1e-8);
  }
}

TEST(RunPoint, ZeroPowerFillsErrorColumn) {
  RunConfig c = transparency_config();
  c.power = 0.0;
  c.outputs = {Observable::T, Observable::Purity};
  const RecordRow row = run_point(c);
  EXPECT_FALSE(row.ok());
  EXPECT_NE(row.error.find("T_F: p=0 normalization undefined"), std::string::npos);
  EXPECT_NE(row.error.find("T_B: p=0 normalization undefined"), std::string::npos);
  EXPECT_FALSE(row.observables[0].has_value());
  EXPECT_TRUE(row.observables[2].has_value());  // purity still defined
}

TEST(RunPoint, RejectsSweep) {
  RunConfig c = transparency_config();
  c.sweep = SweepAxis{SweepVariable::Power, 0.1, 1.0, 3};
  EXPECT_THROW(run_point(c), std::invalid_argument);
}

TEST(RunPoint, MirrorThetaCrossCheck) {
  // T^F(theta) = T^B(2pi - theta) for symmetric detuning.
  RunConfig a;
  a.params.set_symmetric_detuning(0.5);
  a.params.phi = 9.0 * kPi / 25.0;
  a.params.j_mag = 1.0;
  a.params.theta = 18.0 * kPi / 25.0;
  a.power = 0.7;
  a.outputs = {Observable::T, Observable::T_c};
  a.direction = Direction::Forward;
  RunConfig b = a;
  b.params.theta = kTwoPi - a.params.theta;
  b.direction = Direction::Backward;
  const RecordRow ra = run_point(a), rb = run_point(b);
  EXPECT_NEAR(*ra.observables[0], *rb.observables[0], 1e-10);
  EXPECT_NEAR(*ra.observables[1], *rb.observables[1], 1e-10);
}

TEST(RunSweep, RowMajorGridOrder) {
  RunConfig c = transparency_config();
  c.direction = Direction::Forward;
  c.outputs = {Observable::Purity};
  c.sweep = SweepAxis{SweepVariable::Phi, 0.0, 1.0, 3};
  c.grid = SweepAxis{SweepVariable::Theta, 0.0, 1.0, 2};
  const Table t = run_sweep(c, 2);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(t.coordinate_columns, (std::vector<std::string>{"phi", "theta"}));
  EXPECT_EQ(t.rows[0].coordinates, (std::vector<double>{0.0, 0.0}));
  EXPECT_EQ(t.rows[1].coordinates, (std::vector<double>{0.0, 1.0}));
  EXPECT_EQ(t.rows[2].coordinates, (std::vector<double>{0.5, 0.0}));
  EXPECT_EQ(t.rows[5].coordinates, (std::vector<double>{1.0, 1.0}));
}

TEST(RunSweep, ColumnLayout) {
  RunConfig c = transparency_config();
  c.sweep = SweepAxis{SweepVariable::Power, 0.1, 1.0, 2};
  const Table t = run(c);
  EXPECT_EQ(t.columns(), (std::vector<std::string>{"p", "T_F", "T_B", "R_F", "R_B", "purity_F", "purity_B",
                                                   "kernel_dim_F", "residual_F", "kernel_dim_B", "residual_B",
                                                   "error"}));
}

TEST(RunSweep, PerPointFailuresAreIsolated) {
  RunConfig c = transparency_config();
  c.direction = Direction::Forward;
  c.outputs = {Observable::T};
  c.sweep = SweepAxis{SweepVariable::J, -1.0, 1.0, 3};  // J = -1 is invalid
  const Table t = run_sweep(c);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_FALSE(t.rows[0].ok());
  EXPECT_TRUE(t.rows[1].ok());
  EXPECT_TRUE(t.rows[2].ok());
  EXPECT_EQ(t.failed_rows(), 1u);
}

TEST(RunSweep, SerialAndParallelCsvAreByteIdentical) {
  RunConfig c = transparency_config();
  c.params.phi = 9.0 * kPi / 25.0;
  c.outputs = {Observable::T_c, Observable::Concurrence, Observable::G2_R};
  c.sweep = SweepAxis{SweepVariable::Power, 0.02, 10.0, 17, SweepScale::Log};
  c.grid = SweepAxis{SweepVariable::J, 0.0, 2.0, 5};
  std::ostringstream serial, parallel, again;
  write_csv(serial, run(c, 1));
  write_csv(parallel, run(c, 3));
  write_csv(again, run(c, 1));
  EXPECT_EQ(serial.str(), parallel.str());
  EXPECT_EQ(serial.str(), again.str());
}

TEST(Csv, FormatContract) {
  RunConfig c = transparency_config();
  c.sweep = SweepAxis{SweepVariable::J, -1.0, 1.0, 3};
  c.outputs = {Observable::T, Observable::G2_R};
  const Table table = run(c);
  std::ostringstream out;
  write_csv(out, table);

  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "# wqed-table 1");
  std::string config_text;
  while (in.peek() == '#') {
    std::getline(in, line);
    ASSERT_EQ(line.rfind("# ", 0), 0u);
    config_text += line.substr(2) + "\n";
  }
  EXPECT_EQ(to_json(parse_config(config_text)), to_json(c));

  std::getline(in, line);
  const std::vector<std::string> header = split(line);
  EXPECT_EQ(header, table.columns());
  int rows = 0;
  while (std::getline(in, line)) {
    const std::vector<std::string> cells = split(line);
    ASSERT_EQ(cells.size(), header.size()) << line;
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      if (cells[i].empty()) continue;
      EXPECT_NO_THROW((void)std::stod(cells[i])) << cells[i];
      EXPECT_EQ(cells[i].find("nan"), std::string::npos);
    }
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(Csv, ErrorCellQuotedWhenNeeded) {
  RunConfig c = transparency_config();
  c.power = 0.0;
  const Table table = run(c);
  std::ostringstream out;
  write_csv(out, table);
  const std::string text = out.str();
  const std::string last = text.substr(text.rfind('\n', text.size() - 2) + 1);
  const std::vector<std::string> cells = split(last.substr(0, last.size() - 1));
  EXPECT_EQ(cells.size(), table.columns().size());
  EXPECT_EQ(cells.back(), table.rows[0].error);
}

TEST(Csv, NumbersRoundTrip) {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 0.0}) EXPECT_EQ(std::stod(format_number(x)), x);
}

TEST(Json, MirrorsTable) {
  RunConfig c = transparency_config();
  c.sweep = SweepAxis{SweepVariable::Power, 0.0, 1.0, 2};
  const Table table = run(c);
  std::ostringstream out;
  write_json(out, table);
  const nlohmann::json doc = nlohmann::json::parse(out.str());
  EXPECT_EQ(doc.at("format"), "wqed-table 1");
  EXPECT_EQ(doc.at("columns").get<std::vector<std::string>>(), table.columns());
  ASSERT_EQ(doc.at("rows").size(), 2u);
  EXPECT_TRUE(doc.at("rows")[0][1].is_null());  // T_F at p = 0
  EXPECT_NEAR(doc.at("rows")[1][1].get<double>(), 1.0, 1e-8);
}

TEST(Workers, Resolution) {
  EXPECT_EQ(resolve_workers(3u), 3u);
  ::setenv("WQED_WORKERS", "5", 1);
  EXPECT_EQ(resolve_workers(std::nullopt), 5u);
  ::setenv("WQED_WORKERS", "zero", 1);
  EXPECT_GE(resolve_workers(std::nullopt), 1u);
  ::unsetenv("WQED_WORKERS");
}

TEST(Presets, AllBuildValidConfigs) {
  for (const std::string& name : preset_names()) {
    const FigurePreset f = figure_preset(name);
    EXPECT_EQ(f.name, name);
    EXPECT_FALSE(f.series.empty());
    for (const FigureSeries& s : f.series) {
      EXPECT_NO_THROW(s.config.validate()) << name << "/" << s.name;
      EXPECT_TRUE(s.config.sweep.has_value());
    }
  }
  EXPECT_THROW(figure_preset("fig9"), std::invalid_argument);
}

TEST(Presets, Fig2SweepSetup) {
  const FigurePreset f = figure_preset("fig2");
  ASSERT_EQ(f.series.size(), 2u);
  const RunConfig& c = f.series[1].config;
  EXPECT_EQ(c.sweep->points, 200);
  EXPECT_EQ(c.sweep->from, 1e-3);
  EXPECT_EQ(c.sweep->to, 10.0);
  EXPECT_EQ(c.sweep->scale, SweepScale::Log);
  EXPECT_NEAR(c.params.theta, 18.0 * kPi / 25.0, 1e-15);
  EXPECT_NEAR(c.params.phi, 9.0 * kPi / 25.0, 1e-15);
  EXPECT_EQ(c.direction, Direction::Both);
  EXPECT_EQ(c.outputs, (std::vector<Observable>{Observable::T_c, Observable::T_inc, Observable::T}));
}

TEST(Presets, G2SweepsStartAtPlottingFloor) {
  for (const char* name : {"fig6", "fig7"}) {
    for (const FigureSeries& s : figure_preset(name).series) EXPECT_EQ(s.config.sweep->from, 0.02);
  }
}

}  // namespace
}  // namespace wqed
