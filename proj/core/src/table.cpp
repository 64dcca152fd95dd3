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

#include <array>
#include <charconv>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "wqed/sweep.hpp"

namespace wqed {

namespace {

constexpr std::string_view kFormatTag = "wqed-table 1";

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  out += '"';
  return out;
}

template <typename T>
std::string cell(const std::optional<T>& value) {
  if (!value) return {};
  if constexpr (std::is_same_v<T, int>) {
    return std::to_string(*value);
  } else {
    return format_number(*value);
  }
}

}  // namespace

std::string format_number(double value) {
  std::array<char, 64> buffer{};
  const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer.data(), ptr);
}

void write_csv(std::ostream& out, const Table& table) {
  out << "# " << kFormatTag << "\n";
  std::istringstream config(to_json(table.config));
  for (std::string line; std::getline(config, line);) out << "# " << line << "\n";

  const std::vector<std::string> columns = table.columns();
  for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
  out << "\n";

  for (const RecordRow& row : table.rows) {
    std::vector<std::string> cells;
    for (const double x : row.coordinates) cells.push_back(format_number(x));
    for (const auto& value : row.observables) cells.push_back(cell(value));
    for (std::size_t d = 0; d < row.kernel_dims.size(); ++d) {
      cells.push_back(cell(row.kernel_dims[d]));
      cells.push_back(cell(row.residuals[d]));
    }
    cells.push_back(csv_escape(row.error));
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  }
}

void write_json(std::ostream& out, const Table& table) {
  using nlohmann::json;
  json doc;
  doc["format"] = kFormatTag;
  doc["config"] = json::parse(to_json(table.config));
  doc["columns"] = table.columns();
  json rows = json::array();
  for (const RecordRow& row : table.rows) {
    json r = json::array();
    for (const double x : row.coordinates) r.push_back(x);
    for (const auto& value : row.observables) r.push_back(value ? json(*value) : json(nullptr));
    for (std::size_t d = 0; d < row.kernel_dims.size(); ++d) {
      r.push_back(row.kernel_dims[d] ? json(*row.kernel_dims[d]) : json(nullptr));
      r.push_back(row.residuals[d] ? json(*row.residuals[d]) : json(nullptr));
    }
    r.push_back(row.error);
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  out << doc.dump(2) << "\n";
}

}  // namespace wqed
