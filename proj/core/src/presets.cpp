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

#include "wqed/presets.hpp"

#include <fstream>

#include <json.hpp>

namespace wqed {

namespace {

SweepAxis log_power(double from, double to, int points) {
  return SweepAxis{SweepVariable::Power, from, to, points, SweepScale::Log, true};
}

SweepAxis full_turn(SweepVariable variable, int points) {
  return SweepAxis{variable, 0.0, kTwoPi, points, SweepScale::Linear, false};
}

RunConfig base_config(double delta_a, double delta_b, double j, double theta, double phi) {
  RunConfig c;
  c.params.delta_a = delta_a;
  c.params.delta_b = delta_b;
  c.params.j_mag = j;
  c.params.theta = wrap_angle(theta);
  c.params.phi = phi;
  return c;
}

FigurePreset fig2() {
  FigurePreset f{"fig2", "Coherent, incoherent and total transmission vs power, with and without DMI", {}};
  for (const auto& [name, j, theta] : {std::tuple{"J0", 0.0, 0.0}, std::tuple{"J1", 1.0, 18.0 * kPi / 25.0}}) {
    RunConfig c = base_config(0.5, 0.5, j, theta, 9.0 * kPi / 25.0);
    c.direction = Direction::Both;
    c.sweep = log_power(1e-3, 10.0, 200);
    c.outputs = {Observable::T_c, Observable::T_inc, Observable::T};
    f.series.push_back({name, c});
  }
  return f;
}

FigurePreset fig3() {
  FigurePreset f{"fig3", "Reciprocity benchmark: real exchange vs finite DMI phase", {}};
  for (const auto& [name, theta] : {std::pair{"theta_pi", kPi}, std::pair{"theta_3pi_4", 3.0 * kPi / 4.0}}) {
    RunConfig c = base_config(0.5, 0.5, 1.0, theta, kPi / 4.0);
    c.direction = Direction::Both;
    c.sweep = log_power(1e-3, 10.0, 200);
    c.outputs = {Observable::T_c, Observable::T_inc, Observable::T};
    f.series.push_back({name, c});
  }
  return f;
}

FigurePreset fig4() {
  FigurePreset f{"fig4", "Steady-state purity over the (phi, theta) plane, p = Gamma = J", {}};
  for (const auto& [name, delta_b] : {std::pair{"antisym", -0.5}, std::pair{"sym", 0.5}}) {
    RunConfig c = base_config(0.5, delta_b, 1.0, 0.0, 0.0);
    c.power = 1.0;
    c.sweep = full_turn(SweepVariable::Phi, 100);
    c.grid = full_turn(SweepVariable::Theta, 100);
    c.outputs = {Observable::Purity};
    f.series.push_back({name, c});
  }
  return f;
}

FigurePreset fig5() {
  FigurePreset f{"fig5", "Forward and backward concurrence over the (p, J) plane", {}};
  struct Row {
    const char* name;
    double delta_b, theta, phi;
  };
  for (const Row& r : {Row{"sym", 0.5, 9.0 * kPi / 25.0, 9.0 * kPi / 50.0}, Row{"antisym", -0.5, 9.0 * kPi / 10.0, kPi / 10.0}}) {
    RunConfig c = base_config(0.5, r.delta_b, 0.0, r.theta, r.phi);
    c.direction = Direction::Both;
    c.sweep = SweepAxis{SweepVariable::Power, 0.05, 3.0, 60, SweepScale::Linear, true};
    c.grid = SweepAxis{SweepVariable::J, 0.0, 2.0, 61, SweepScale::Linear, true};
    c.outputs = {Observable::Concurrence};
    f.series.push_back({r.name, c});
  }
  return f;
}

FigurePreset fig6() {
  FigurePreset f{"fig6", "g2(0) in transmission and reflection vs power for J = 0, 0.5, 1 (forward drive)", {}};
  for (const auto& [name, j] : {std::pair{"J0", 0.0}, std::pair{"J0.5", 0.5}, std::pair{"J1", 1.0}}) {
    RunConfig c = base_config(0.5, -0.5, j, 5.0 * kPi / 4.0, 3.0 * kPi / 4.0);
    c.direction = Direction::Forward;
    c.sweep = log_power(0.02, 10.0, 200);
    c.outputs = {Observable::G2_T, Observable::G2_R};
    f.series.push_back({name, c});
  }
  return f;
}

FigurePreset fig7() {
  FigurePreset f{"fig7", "Forward vs backward g2(0) with and without DMI, symmetric detuning", {}};
  for (const auto& [name, j] : {std::pair{"J0", 0.0}, std::pair{"J1", 1.0}}) {
    RunConfig c = base_config(0.5, 0.5, j, j > 0.0 ? 5.0 * kPi / 4.0 : 0.0, 3.0 * kPi / 4.0);
    c.direction = Direction::Both;
    c.sweep = log_power(0.02, 10.0, 200);
    c.outputs = {Observable::G2_T, Observable::G2_R};
    f.series.push_back({name, c});
  }
  return f;
}

FigurePreset detuning_scan() {
  FigurePreset f{"detuning", "Transmission vs symmetric detuning at phi = pi, p = Gamma = J", {}};
  struct Row {
    const char* name;
    double j, theta;
  };
  for (const Row& r : {Row{"J0", 0.0, 0.0}, Row{"theta_3pi_2", 1.0, 3.0 * kPi / 2.0}, Row{"theta_2pi_3", 1.0, 2.0 * kPi / 3.0}}) {
    RunConfig c = base_config(0.0, 0.0, r.j, r.theta, kPi);
    c.power = 1.0;
    c.sweep = SweepAxis{SweepVariable::Delta, -3.0, 3.0, 241, SweepScale::Linear, true};
    c.outputs = {Observable::T, Observable::R, Observable::Purity};
    f.series.push_back({r.name, c});
  }
  return f;
}

}  // namespace

std::vector<std::string> preset_names() { return {"fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "detuning"}; }

FigurePreset figure_preset(std::string_view name) {
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4") return fig4();
  if (name == "fig5") return fig5();
  if (name == "fig6") return fig6();
  if (name == "fig7") return fig7();
  if (name == "detuning") return detuning_scan();
  throw std::invalid_argument("unknown figure preset '" + std::string(name) + "'");
}

FigureOutput write_figure(const FigurePreset& preset, const std::filesystem::path& out_dir, unsigned workers) {
  using nlohmann::json;
  std::filesystem::create_directories(out_dir);

  FigureOutput output;
  json manifest;
  manifest["figure"] = preset.name;
  manifest["description"] = preset.description;
  manifest["series"] = json::array();

  for (const FigureSeries& series : preset.series) {
    const Table table = run(series.config, workers);
    const std::filesystem::path file = out_dir / (preset.name + "_" + series.name + ".csv");
    std::ofstream out(file);
    if (!out) throw std::runtime_error("cannot write " + file.string());
    write_csv(out, table);
    output.files.push_back(file);
    output.failed_rows += table.failed_rows();

    manifest["series"].push_back(json{{"name", series.name},
                                      {"file", file.filename().string()},
                                      {"rows", table.rows.size()},
                                      {"failed_rows", table.failed_rows()},
                                      {"columns", table.columns()},
                                      {"config", json::parse(to_json(series.config))}});
  }

  const std::filesystem::path manifest_file = out_dir / (preset.name + "_manifest.json");
  std::ofstream out(manifest_file);
  if (!out) throw std::runtime_error("cannot write " + manifest_file.string());
  out << manifest.dump(2) << "\n";
  output.files.push_back(manifest_file);
  return output;
}

}  // namespace wqed
