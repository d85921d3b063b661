// fama-lab: performance analysis toolkit for fluid antenna multiple access
// Copyright (C) 2026 The fama-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <filesystem>
#include <string>

// gnuplot script emitter for the sweep CSVs. The script refers to columns by
// header name and draws one series per distinct combination of the parameter
// columns that vary in the file.

namespace fama {

enum class FigureKind { kOutageVsN, kCapacityVsGamma, kGainVsWidth, kPortsVsGain, kWidthVsPorts };

const char *figure_kind_name(FigureKind kind) noexcept;

/// Throws UsageError for an unknown name.
FigureKind parse_figure_kind(const std::string &name);

/// Script text for csv_path. Throws FileNotFoundError if the CSV cannot be
/// read and UsageError if its header is not the sweep schema.
std::string plot_script(const std::filesystem::path &csv_path, FigureKind kind);

/// Writes plot_script(csv_path, kind) to script_path.
void emit_plot_script(const std::filesystem::path &csv_path, FigureKind kind, const std::filesystem::path &script_path);

} // namespace fama
