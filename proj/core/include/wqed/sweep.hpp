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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wqed/config.hpp"

namespace wqed {

/// One evaluated parameter point. Cells that could not be computed are
/// empty and the reason is appended to `error`.
struct RecordRow {
  std::vector<double> coordinates;                 ///< swept variable values
  std::vector<std::optional<double>> observables;  ///< outputs x directions
  std::vector<std::optional<int>> kernel_dims;     ///< per direction
  std::vector<std::optional<double>> residuals;    ///< per direction
  std::string error;

  bool ok() const { return error.empty(); }
};

/// Rows of a run with a fixed column layout: swept variables, observables
/// in request order (each suffixed _F / _B per direction), diagnostics.
struct Table {
  RunConfig config;
  std::vector<std::string> coordinate_columns;
  std::vector<std::string> observable_columns;
  std::vector<std::string> diagnostic_columns;
  std::vector<RecordRow> rows;

  std::vector<std::string> columns() const;
  std::size_t failed_rows() const;
};

/// Column suffix of a port: "F" or "B".
std::string_view port_suffix(Port port);

/// Evaluates a config without a sweep axis.
RecordRow run_point(const RunConfig& config);

/// Evaluates every sweep point (grid points row-major, sweep index slowest)
/// on up to `workers` threads. Results do not depend on the worker count.
Table run_sweep(const RunConfig& config, unsigned workers = 1);

/// Runs a config with or without a sweep axis into a Table.
Table run(const RunConfig& config, unsigned workers = 1);

/// Worker count from --workers, else WQED_WORKERS, else hardware threads.
unsigned resolve_workers(std::optional<unsigned> flag);

/// CSV with a '#'-prefixed header holding the resolved config.
void write_csv(std::ostream& out, const Table& table);
/// JSON mirror: {"config": ..., "columns": [...], "rows": [[...], ...]}.
void write_json(std::ostream& out, const Table& table);

/// Shortest round-trip decimal form of a double.
std::string format_number(double value);

}  // namespace wqed
