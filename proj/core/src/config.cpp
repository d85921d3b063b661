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

#include "fama/config.hpp"

#include "fama/errors.hpp"

#include <fstream>
#include <functional>
#include <istream>

namespace fama {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string &key, const std::string &value) {
    try {
        std::size_t used = 0;
        T v{};
        if constexpr (std::is_same_v<T, double>)
            v = std::stod(value, &used);
        else if constexpr (std::is_same_v<T, int>)
            v = std::stoi(value, &used);
        else if constexpr (std::is_same_v<T, unsigned>)
            v = static_cast<unsigned>(std::stoul(value, &used));
        else if constexpr (std::is_same_v<T, std::int64_t>)
            v = std::stoll(value, &used);
        else
            v = std::stoull(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception &) {
        throw UsageError("config: bad value '" + value + "' for " + key);
    }
}

bool parse_bool(const std::string &key, const std::string &value) {
    if (value == "true" || value == "1" || value == "yes" || value == "on") return true;
    if (value == "false" || value == "0" || value == "no" || value == "off") return false;
    throw UsageError("config: bad boolean '" + value + "' for " + key);
}

} // namespace

ConfigMap parse_config(std::istream &is, const std::string &source_name) {
    ConfigMap config;
    std::string line;
    int line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        const std::string where = source_name + ":" + std::to_string(line_no);
        if (eq == std::string::npos) throw UsageError(where + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw UsageError(where + ": empty key");
        if (!config.emplace(key, value).second) throw UsageError(where + ": repeated key " + key);
    }
    return config;
}

ConfigMap read_config(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) throw FileNotFoundError(path.string());
    return parse_config(in, path.string());
}

void apply_config(const ConfigMap &config, SweepSpec &spec) {
    using Setter = std::function<void(const std::string &, const std::string &)>;
    const std::map<std::string, Setter> setters{
        {"axis", [&](auto &, auto &v) { spec.axis = parse_axis(v); }},
        {"values", [&](auto &, auto &v) { spec.axis_values = parse_values(v); }},
        {"gamma-db", [&](auto &k, auto &v) { spec.gamma_db = parse_number<double>(k, v); }},
        {"ports", [&](auto &k, auto &v) { spec.n_ports = parse_number<int>(k, v); }},
        {"width", [&](auto &k, auto &v) { spec.width = parse_number<double>(k, v); }},
        {"interferers", [&](auto &k, auto &v) { spec.n_interferers = parse_number<int>(k, v); }},
        {"gain", [&](auto &k, auto &v) { spec.mult_gain = parse_number<double>(k, v); }},
        {"sigma", [&](auto &k, auto &v) { spec.sigma = parse_number<double>(k, v); }},
        {"sigma-i", [&](auto &k, auto &v) { spec.sigma_i = parse_number<double>(k, v); }},
        {"methods", [&](auto &, auto &v) { spec.methods = parse_methods(v); }},
        {"trials", [&](auto &k, auto &v) { spec.trials = parse_number<std::int64_t>(k, v); }},
        {"seed", [&](auto &k, auto &v) { spec.seed = parse_number<std::uint64_t>(k, v); }},
        {"threads", [&](auto &k, auto &v) { spec.threads = parse_number<unsigned>(k, v); }},
        {"refine-mc", [&](auto &k, auto &v) { spec.refine_mc = parse_bool(k, v); }},
        {"interference",
         [&](auto &k, auto &v) {
             if (v == "aggregate")
                 spec.interference = InterferenceModel::kAggregate;
             else if (v == "per-interferer")
                 spec.interference = InterferenceModel::kPerInterferer;
             else
                 throw UsageError("config: bad value '" + v + "' for " + k);
         }},
        {"outer-nodes", [&](auto &k, auto &v) { spec.quadrature.outer_nodes = parse_number<int>(k, v); }},
        {"inner-nodes", [&](auto &k, auto &v) { spec.quadrature.inner_nodes = parse_number<int>(k, v); }},
        {"tail-cutoff", [&](auto &k, auto &v) { spec.quadrature.tail_cutoff = parse_number<double>(k, v); }},
        {"tolerance", [&](auto &k, auto &v) { spec.quadrature.tolerance = parse_number<double>(k, v); }},
        {"exact-cap", [&](auto &k, auto &v) { spec.quadrature.exact_cap = parse_number<int>(k, v); }},
    };
    for (const auto &[key, value] : config) {
        const auto it = setters.find(key);
        if (it == setters.end()) throw UsageError("config: unknown key " + key);
        try {
            it->second(key, value);
        } catch (const UsageError &) {
            throw;
        } catch (const std::invalid_argument &e) {
            throw UsageError("config: " + key + ": " + e.what());
        }
    }
}

} // namespace fama
