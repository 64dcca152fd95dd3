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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wqed/sweep.hpp"

namespace wqed {

/// One curve (or contour map) of a figure, written to its own CSV.
struct FigureSeries {
  std::string name;
  RunConfig config;
};

struct FigurePreset {
  std::string name;
  std::string description;
  std::vector<FigureSeries> series;
};

/// fig2 ... fig7 plus the detuning scan.
std::vector<std::string> preset_names();

/// Throws std::invalid_argument for an unknown name.
FigurePreset figure_preset(std::string_view name);

struct FigureOutput {
  std::vector<std::filesystem::path> files;  ///< CSVs then the manifest
  std::size_t failed_rows = 0;
};

/// Runs every series and writes `<name>_<series>.csv` plus
/// `<name>_manifest.json` (resolved configs, file names, row counts) into
/// out_dir, creating it if needed.
FigureOutput write_figure(const FigurePreset& preset, const std::filesystem::path& out_dir, unsigned workers);

}  // namespace wqed
