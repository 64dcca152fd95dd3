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

#include "wqed/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>

#include "wqed/observables.hpp"
#include "wqed/steady.hpp"

namespace wqed {

namespace {

void append_error(std::string& error, const std::string& message) {
  if (!error.empty()) error += "; ";
  error += message;
}

double evaluate(Observable o, const DensityMatrix& rho, const SystemParams& params, const Drive& drive) {
  switch (o) {
    case Observable::Purity: return purity(rho);
    case Observable::Concurrence: return concurrence(rho);
    case Observable::G2_T: return g2_zero(rho, params, drive, Channel::Transmit);
    case Observable::G2_R: return g2_zero(rho, params, drive, Channel::Reflect);
    default: break;
  }
  const PortIntensities i = port_intensities(rho, params, drive);
  switch (o) {
    case Observable::T: return i.T;
    case Observable::T_c: return i.T_c;
    case Observable::T_inc: return i.T_inc;
    case Observable::R: return i.R;
    case Observable::R_c: return i.R_c;
    case Observable::R_inc: return i.R_inc;
    default: break;
  }
  throw std::logic_error("unhandled observable");
}

// Evaluates a fully resolved point (no sweep axes left).
RecordRow evaluate_point(const RunConfig& config, std::vector<double> coordinates) {
  const std::vector<Port> ports = config.ports();
  RecordRow row;
  row.coordinates = std::move(coordinates);
  row.observables.assign(config.outputs.size() * ports.size(), std::nullopt);
  row.kernel_dims.assign(ports.size(), std::nullopt);
  row.residuals.assign(ports.size(), std::nullopt);

  SystemParams params;
  try {
    config.validate();
    params = config.params.validated();
  } catch (const std::exception& e) {
    row.error = e.what();
    return row;
  }

  for (std::size_t d = 0; d < ports.size(); ++d) {
    const Drive drive = Drive::from_power(ports[d], config.power);
    const std::string suffix = "_" + std::string(port_suffix(ports[d]));
    std::optional<DensityMatrix> rho;
    try {
      const SteadyResult steady = steady_state(build_liouvillian(params, drive));
      row.kernel_dims[d] = steady.kernel_dim;
      row.residuals[d] = steady.residual;
      rho = steady.rho;
    } catch (const std::exception& e) {
      append_error(row.error, "steady" + suffix + ": " + e.what());
      continue;
    }
    for (std::size_t o = 0; o < config.outputs.size(); ++o) {
      const Observable observable = config.outputs[o];
      try {
        row.observables[o * ports.size() + d] = evaluate(observable, *rho, params, drive);
      } catch (const std::exception& e) {
        append_error(row.error, std::string(to_string(observable)) + suffix + ": " + e.what());
      }
    }
  }
  return row;
}

Table make_table(const RunConfig& config) {
  Table table;
  table.config = config;
  if (config.sweep) table.coordinate_columns.emplace_back(to_string(config.sweep->variable));
  if (config.grid) table.coordinate_columns.emplace_back(to_string(config.grid->variable));
  const std::vector<Port> ports = config.ports();
  for (const Observable o : config.outputs) {
    for (const Port port : ports) {
      table.observable_columns.push_back(std::string(to_string(o)) + "_" + std::string(port_suffix(port)));
    }
  }
  for (const Port port : ports) {
    table.diagnostic_columns.push_back("kernel_dim_" + std::string(port_suffix(port)));
    table.diagnostic_columns.push_back("residual_" + std::string(port_suffix(port)));
  }
  table.diagnostic_columns.emplace_back("error");
  return table;
}

}  // namespace

std::string_view port_suffix(Port port) { return port == Port::Forward ? "F" : "B"; }

std::vector<std::string> Table::columns() const {
  std::vector<std::string> all = coordinate_columns;
  all.insert(all.end(), observable_columns.begin(), observable_columns.end());
  all.insert(all.end(), diagnostic_columns.begin(), diagnostic_columns.end());
  return all;
}

std::size_t Table::failed_rows() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const RecordRow& r) { return !r.ok(); }));
}

RecordRow run_point(const RunConfig& config) {
  if (config.sweep || config.grid) throw std::invalid_argument("run_point: config has a sweep axis");
  return evaluate_point(config, {});
}

Table run_sweep(const RunConfig& config, unsigned workers) {
  if (!config.sweep) throw std::invalid_argument("run_sweep: config has no sweep axis");
  config.validate();

  const std::vector<double> outer = config.sweep->values();
  const std::vector<double> inner = config.grid ? config.grid->values() : std::vector<double>{};
  const std::size_t inner_count = config.grid ? inner.size() : 1;
  const std::size_t total = outer.size() * inner_count;

  Table table = make_table(config);
  table.rows.resize(total);

  RunConfig base = config;
  base.sweep.reset();
  base.grid.reset();

  const auto compute = [&](std::size_t index) {
    const std::size_t i = index / inner_count;
    const std::size_t j = index % inner_count;
    RunConfig point = base.with(config.sweep->variable, outer[i]);
    std::vector<double> coordinates{outer[i]};
    if (config.grid) {
      point = point.with(config.grid->variable, inner[j]);
      coordinates.push_back(inner[j]);
    }
    table.rows[index] = evaluate_point(point, std::move(coordinates));
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(total)));
  if (threads == 1) {
    for (std::size_t index = 0; index < total; ++index) compute(index);
    return table;
  }

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t index = next++; index < total; index = next++) compute(index);
    });
  }
  for (auto& thread : pool) thread.join();
  return table;
}

Table run(const RunConfig& config, unsigned workers) {
  if (config.sweep) return run_sweep(config, workers);
  Table table = make_table(config);
  table.rows.push_back(run_point(config));
  return table;
}

unsigned resolve_workers(std::optional<unsigned> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("WQED_WORKERS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace wqed
