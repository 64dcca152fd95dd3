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

#include "wqed/config.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <set>

#include <json.hpp>

namespace wqed {

using nlohmann::json;

namespace {

template <typename Enum, std::size_t N>
Enum lookup(std::string_view name, const std::array<std::pair<std::string_view, Enum>, N>& table,
            const char* what) {
  for (const auto& [key, value] : table) {
    if (key == name) return value;
  }
  throw std::invalid_argument(std::string("unknown ") + what + " '" + std::string(name) + "'");
}

constexpr std::array<std::pair<std::string_view, SweepVariable>, 6> kSweepVariables = {{
    {"p", SweepVariable::Power},
    {"J", SweepVariable::J},
    {"theta", SweepVariable::Theta},
    {"phi", SweepVariable::Phi},
    {"delta", SweepVariable::Delta},
    {"delta_antisym", SweepVariable::DeltaAntisym},
}};

constexpr std::array<std::pair<std::string_view, SweepScale>, 2> kScales = {{
    {"linear", SweepScale::Linear},
    {"log", SweepScale::Log},
}};

constexpr std::array<std::pair<std::string_view, Direction>, 3> kDirections = {{
    {"forward", Direction::Forward},
    {"backward", Direction::Backward},
    {"both", Direction::Both},
}};

constexpr std::array<std::pair<std::string_view, Observable>, 10> kObservables = {{
    {"T", Observable::T},
    {"T_c", Observable::T_c},
    {"T_inc", Observable::T_inc},
    {"R", Observable::R},
    {"R_c", Observable::R_c},
    {"R_inc", Observable::R_inc},
    {"purity", Observable::Purity},
    {"concurrence", Observable::Concurrence},
    {"g2_T", Observable::G2_T},
    {"g2_R", Observable::G2_R},
}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum value, const std::array<std::pair<std::string_view, Enum>, N>& table) {
  for (const auto& [key, v] : table) {
    if (v == value) return key;
  }
  return "?";
}

double parse_plain(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw std::invalid_argument("not a finite number: '" + std::string(text) + "'");
  }
  return value;
}

double number(const json& node, const std::string& key) {
  if (node.is_number()) return node.get<double>();
  if (node.is_string()) return parse_quantity(node.get<std::string>());
  throw std::invalid_argument("config: '" + key + "' must be a number or a pi expression");
}

void reject_unknown(const json& object, const std::set<std::string>& allowed, const std::string& where) {
  if (!object.is_object()) throw std::invalid_argument("config: '" + where + "' must be an object");
  for (const auto& [key, _] : object.items()) {
    if (!allowed.count(key)) throw std::invalid_argument("config: unknown key '" + where + key + "'");
  }
}

SweepAxis parse_axis(const json& node, const std::string& where) {
  reject_unknown(node, {"variable", "from", "to", "points", "scale", "endpoint"}, where + ".");
  SweepAxis axis;
  if (!node.contains("variable") || !node.contains("from") || !node.contains("to") || !node.contains("points")) {
    throw std::invalid_argument("config: '" + where + "' needs variable, from, to and points");
  }
  axis.variable = parse_sweep_variable(node.at("variable").get<std::string>());
  axis.from = number(node.at("from"), where + ".from");
  axis.to = number(node.at("to"), where + ".to");
  const double points = number(node.at("points"), where + ".points");
  if (points != std::floor(points) || points > 1e7) throw std::invalid_argument("config: points must be an integer");
  axis.points = static_cast<int>(points);
  if (node.contains("scale")) axis.scale = parse_sweep_scale(node.at("scale").get<std::string>());
  if (node.contains("endpoint")) axis.endpoint = node.at("endpoint").get<bool>();
  axis.validate();
  return axis;
}

json axis_to_json(const SweepAxis& axis) {
  return json{{"variable", to_string(axis.variable)}, {"from", axis.from},   {"to", axis.to},
              {"points", axis.points},               {"scale", to_string(axis.scale)},
              {"endpoint", axis.endpoint}};
}

// Short override keys and their canonical dotted paths.
const std::map<std::string, std::string>& override_aliases() {
  static const std::map<std::string, std::string> aliases = {
      {"gamma_wg", "params.gamma_wg"}, {"gamma_a", "params.gamma_a"}, {"gamma_b", "params.gamma_b"},
      {"delta_a", "params.delta_a"},   {"delta_b", "params.delta_b"}, {"J", "params.J"},
      {"theta", "params.theta"},       {"phi", "params.phi"},         {"k", "params.k"},
      {"p", "drive.p"},                {"alpha", "drive.alpha"},
  };
  return aliases;
}

json override_value(std::string_view key, std::string_view text) {
  if (key == "outputs") {
    json list = json::array();
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view item = text.substr(start, end - start);
      if (!item.empty()) list.push_back(std::string(item));
      start = end + 1;
    }
    return list;
  }
  if (text == "true") return true;
  if (text == "false") return false;
  try {
    return parse_plain(text);
  } catch (const std::invalid_argument&) {
    return std::string(text);
  }
}

void apply_override(json& doc, const std::string& raw_key, std::string_view value) {
  const auto& aliases = override_aliases();
  const auto alias = aliases.find(raw_key);
  const std::string key = alias == aliases.end() ? raw_key : alias->second;

  json* node = &doc;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = key.find('.', start);
    const std::string part = key.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    if (part.empty()) throw std::invalid_argument("override: malformed key '" + raw_key + "'");
    if (dot == std::string::npos) {
      (*node)[part] = override_value(part, value);
      break;
    }
    json& child = (*node)[part];
    if (child.is_null()) child = json::object();
    node = &child;
    start = dot + 1;
  }
}

RunConfig from_json(const json& doc) {
  reject_unknown(doc, {"params", "drive", "direction", "sweep", "grid", "outputs"}, "");
  RunConfig config;

  if (doc.contains("params")) {
    const json& p = doc.at("params");
    reject_unknown(p, {"gamma_wg", "gamma_a", "gamma_b", "delta_a", "delta_b", "J", "theta", "phi", "k"},
                   "params.");
    SystemParams& s = config.params;
    if (p.contains("gamma_wg")) s.set_gamma_wg(number(p.at("gamma_wg"), "params.gamma_wg"));
    if (p.contains("k")) s.k = number(p.at("k"), "params.k");
    if (p.contains("gamma_a")) s.gamma_a = number(p.at("gamma_a"), "params.gamma_a");
    if (p.contains("gamma_b")) s.gamma_b = number(p.at("gamma_b"), "params.gamma_b");
    if (p.contains("delta_a")) s.delta_a = number(p.at("delta_a"), "params.delta_a");
    if (p.contains("delta_b")) s.delta_b = number(p.at("delta_b"), "params.delta_b");
    if (p.contains("J")) s.j_mag = number(p.at("J"), "params.J");
    if (p.contains("theta")) s.theta = number(p.at("theta"), "params.theta");
    if (p.contains("phi")) s.phi = number(p.at("phi"), "params.phi");
  }
  if (doc.contains("drive")) {
    const json& d = doc.at("drive");
    reject_unknown(d, {"p", "alpha"}, "drive.");
    if (d.contains("p") && d.contains("alpha")) throw std::invalid_argument("config: give either drive.p or drive.alpha");
    if (d.contains("p")) config.power = number(d.at("p"), "drive.p");
    if (d.contains("alpha")) {
      const double alpha = number(d.at("alpha"), "drive.alpha");
      if (alpha < 0.0) throw std::invalid_argument("config: drive.alpha must be nonnegative");
      config.power = alpha * alpha;
    }
  }
  if (doc.contains("direction")) config.direction = parse_direction(doc.at("direction").get<std::string>());
  if (doc.contains("sweep") && !doc.at("sweep").is_null()) config.sweep = parse_axis(doc.at("sweep"), "sweep");
  if (doc.contains("grid") && !doc.at("grid").is_null()) config.grid = parse_axis(doc.at("grid"), "grid");
  if (doc.contains("outputs")) {
    config.outputs.clear();
    for (const auto& item : doc.at("outputs")) config.outputs.push_back(parse_observable(item.get<std::string>()));
  }
  config.params = config.params.validated();
  config.validate();
  return config;
}

}  // namespace

std::string_view to_string(SweepVariable v) { return name_of(v, kSweepVariables); }
std::string_view to_string(SweepScale s) { return name_of(s, kScales); }
std::string_view to_string(Direction d) { return name_of(d, kDirections); }
std::string_view to_string(Observable o) { return name_of(o, kObservables); }

SweepVariable parse_sweep_variable(std::string_view name) { return lookup(name, kSweepVariables, "sweep variable"); }
SweepScale parse_sweep_scale(std::string_view name) { return lookup(name, kScales, "sweep scale"); }
Direction parse_direction(std::string_view name) { return lookup(name, kDirections, "direction"); }
Observable parse_observable(std::string_view name) { return lookup(name, kObservables, "observable"); }

bool is_intensity(Observable o) {
  switch (o) {
    case Observable::T:
    case Observable::T_c:
    case Observable::T_inc:
    case Observable::R:
    case Observable::R_c:
    case Observable::R_inc: return true;
    default: return false;
  }
}

void SweepAxis::validate() const {
  if (!std::isfinite(from) || !std::isfinite(to)) throw std::invalid_argument("sweep: range must be finite");
  if (points < 2) throw std::invalid_argument("sweep: points must be >= 2");
  if (scale == SweepScale::Log && !(from > 0.0 && to > 0.0)) {
    throw std::invalid_argument("sweep: log scale requires a positive range");
  }
}

std::vector<double> SweepAxis::values() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(points));
  const double intervals = endpoint ? points - 1 : points;
  for (int i = 0; i < points; ++i) {
    const double t = i / intervals;
    if (scale == SweepScale::Linear) {
      out[static_cast<std::size_t>(i)] = from + (to - from) * t;
    } else {
      out[static_cast<std::size_t>(i)] = std::exp(std::log(from) + (std::log(to) - std::log(from)) * t);
    }
  }
  if (endpoint) out.back() = to;
  return out;
}

void RunConfig::validate() const {
  (void)params.validated();
  if (!std::isfinite(power) || power < 0.0) throw std::invalid_argument("config: drive power must be >= 0");
  if (grid && !sweep) throw std::invalid_argument("config: a grid axis requires a sweep axis");
  if (sweep) sweep->validate();
  if (grid) {
    grid->validate();
    if (grid->variable == sweep->variable) throw std::invalid_argument("config: grid and sweep vary the same variable");
  }
  if (outputs.empty()) throw std::invalid_argument("config: at least one output is required");
}

std::vector<Port> RunConfig::ports() const {
  switch (direction) {
    case Direction::Forward: return {Port::Forward};
    case Direction::Backward: return {Port::Backward};
    case Direction::Both: break;
  }
  return {Port::Forward, Port::Backward};
}

RunConfig RunConfig::with(SweepVariable variable, double value) const {
  RunConfig out = *this;
  switch (variable) {
    case SweepVariable::Power: out.power = value; break;
    case SweepVariable::J: out.params.j_mag = value; break;
    case SweepVariable::Theta: out.params.theta = wrap_angle(value); break;
    case SweepVariable::Phi: out.params.phi = value; break;
    case SweepVariable::Delta: out.params.set_symmetric_detuning(value); break;
    case SweepVariable::DeltaAntisym: out.params.set_antisymmetric_detuning(value); break;
  }
  return out;
}

double parse_quantity(std::string_view raw) {
  std::string text;
  for (const char c : raw) {
    if (c != ' ' && c != '\t') text.push_back(c);
  }
  if (text.empty()) throw std::invalid_argument("empty number");
  const std::size_t pi = text.find("pi");
  if (pi == std::string::npos) return parse_plain(text);

  std::string_view prefix = std::string_view(text).substr(0, pi);
  std::string_view suffix = std::string_view(text).substr(pi + 2);
  if (!prefix.empty() && prefix.back() == '*') prefix.remove_suffix(1);

  double factor = 1.0;
  if (prefix == "-") {
    factor = -1.0;
  } else if (prefix == "+") {
    factor = 1.0;
  } else if (!prefix.empty()) {
    factor = parse_plain(prefix);
  }
  double value = factor * kPi;
  if (!suffix.empty()) {
    if (suffix.front() != '/') throw std::invalid_argument("malformed pi expression: '" + std::string(raw) + "'");
    const double divisor = parse_plain(suffix.substr(1));
    if (divisor == 0.0) throw std::invalid_argument("division by zero in '" + std::string(raw) + "'");
    value /= divisor;
  }
  return value;
}

std::pair<std::string, std::string> split_override(std::string_view assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw std::invalid_argument("override must look like key=value: '" + std::string(assignment) + "'");
  }
  return {std::string(assignment.substr(0, eq)), std::string(assignment.substr(eq + 1))};
}

RunConfig parse_config(std::string_view json_text) { return parse_config(json_text, {}); }

RunConfig parse_config(std::string_view json_text, const std::vector<std::string>& overrides) {
  json doc;
  try {
    doc = json_text.find_first_not_of(" \t\r\n") == std::string_view::npos ? json::object() : json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
  }
  for (const auto& assignment : overrides) {
    const auto [key, value] = split_override(assignment);
    apply_override(doc, key, value);
  }
  try {
    return from_json(doc);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }
}

std::string to_json(const RunConfig& config) {
  const SystemParams& p = config.params;
  json doc;
  doc["params"] = json{{"gamma_wg", p.gamma_wg}, {"gamma_a", p.gamma_a}, {"gamma_b", p.gamma_b},
                       {"delta_a", p.delta_a},   {"delta_b", p.delta_b}, {"J", p.j_mag},
                       {"theta", p.theta},       {"phi", p.phi},         {"k", p.k}};
  doc["drive"] = json{{"p", config.power}};
  doc["direction"] = to_string(config.direction);
  doc["sweep"] = config.sweep ? axis_to_json(*config.sweep) : json(nullptr);
  doc["grid"] = config.grid ? axis_to_json(*config.grid) : json(nullptr);
  json outputs = json::array();
  for (const Observable o : config.outputs) outputs.push_back(to_string(o));
  doc["outputs"] = outputs;
  return doc.dump(2);
}

}  // namespace wqed
