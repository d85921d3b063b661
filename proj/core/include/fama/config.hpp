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

#include "fama/sweep.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

// Plain `key = value` configuration files. Blank lines and text after '#'
// are ignored. Keys are the long option names of the command line tool.

namespace fama {

using ConfigMap = std::map<std::string, std::string>;

/// Throws UsageError naming the source and line on malformed lines or
/// repeated keys.
ConfigMap parse_config(std::istream &is, const std::string &source_name);

/// Throws FileNotFoundError if the file cannot be opened.
ConfigMap read_config(const std::filesystem::path &path);

/// Applies every entry to spec. Throws UsageError on an unknown key or an
/// unparsable value.
void apply_config(const ConfigMap &config, SweepSpec &spec);

} // namespace fama
