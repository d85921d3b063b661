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

#include "fama/plot_script.hpp"

#include "fama/errors.hpp"
#include "fama/sweep.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace fama {

const char *figure_kind_name(FigureKind kind) noexcept {
    switch (kind) {
    case FigureKind::kOutageVsN: return "outage-vs-N";
    case FigureKind::kCapacityVsGamma: return "capacity-vs-gamma";
    case FigureKind::kGainVsWidth: return "gain-vs-width";
    case FigureKind::kPortsVsGain: return "ports-vs-gain";
    case FigureKind::kWidthVsPorts: return "width-vs-ports";
    }
    return "?";
}

FigureKind parse_figure_kind(const std::string &name) {
    for (FigureKind k : {FigureKind::kOutageVsN, FigureKind::kCapacityVsGamma, FigureKind::kGainVsWidth,
                         FigureKind::kPortsVsGain, FigureKind::kWidthVsPorts})
        if (name == figure_kind_name(k)) return k;
    throw UsageError("unknown figure kind '" + name +
                     "' (expected outage-vs-N, capacity-vs-gamma, gain-vs-width, ports-vs-gain or width-vs-ports)");
}

namespace {

struct Layout {
    const char *x_column;
    const char *x_label;
    const char *y_label;
    bool log_y;
    std::vector<std::string> always_in_key; // columns that name a series even when constant
};

Layout layout_for(FigureKind kind) {
    switch (kind) {
    case FigureKind::kOutageVsN: return {"N", "number of ports N", "outage probability", true, {"method"}};
    case FigureKind::kCapacityVsGamma:
        return {"gamma_db", "SIR target (dB)", "capacity lower bound (bits/s/Hz)", false, {"NI", "method"}};
    case FigureKind::kGainVsWidth:
        return {"W", "antenna width W (wavelengths)", "multiplexing gain", false, {"method"}};
    case FigureKind::kPortsVsGain: return {"mult_gain", "multiplexing gain m", "required ports N", false, {"method"}};
    case FigureKind::kWidthVsPorts:
        return {"N", "number of ports N", "required width W (wavelengths)", false, {"method"}};
    }
    return {"N", "", "", false, {}};
}

std::vector<std::string> split_csv(const std::string &line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, ',')) fields.push_back(field);
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

std::string quoted(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string plot_script(const std::filesystem::path &csv_path, FigureKind kind) {
    std::ifstream in(csv_path);
    if (!in) throw FileNotFoundError(csv_path.string());
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader)
        throw UsageError(csv_path.string() + " does not start with the sweep CSV header");
    const std::vector<std::string> header = split_csv(line);

    const Layout layout = layout_for(kind);
    const std::array<std::string, 7> key_columns{"gamma_db", "N", "W", "NI", "sigma", "sigma_i", "method"};
    auto index_of = [&](const std::string &name) {
        return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
    };

    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(split_csv(line));

    // Columns that identify a series: those that vary across rows (other than
    // the x column) plus the ones the figure always labels.
    std::vector<std::string> series_columns;
    for (const auto &col : key_columns) {
        if (col == layout.x_column) continue;
        const std::size_t idx = index_of(col);
        std::set<std::string> distinct;
        for (const auto &r : rows)
            if (idx < r.size()) distinct.insert(r[idx]);
        const bool always =
            std::find(layout.always_in_key.begin(), layout.always_in_key.end(), col) != layout.always_in_key.end();
        if (distinct.size() > 1 || always) series_columns.push_back(col);
    }

    std::vector<std::vector<std::string>> series;
    for (const auto &r : rows) {
        std::vector<std::string> key;
        for (const auto &col : series_columns) {
            const std::size_t idx = index_of(col);
            key.push_back(idx < r.size() ? r[idx] : std::string());
        }
        if (std::find(series.begin(), series.end(), key) == series.end()) series.push_back(key);
    }

    std::ostringstream os;
    os << "# gnuplot script: " << figure_kind_name(kind) << " from " << csv_path.string() << "\n";
    os << "set datafile separator \",\"\n";
    os << "set datafile columnheaders\n";
    os << "set datafile missing \"\"\n";
    os << "set xlabel " << quoted(layout.x_label) << "\n";
    os << "set ylabel " << quoted(layout.y_label) << "\n";
    if (layout.log_y)
        os << "set logscale y\n";
    else
        os << "unset logscale\n";
    os << "set grid\n";
    os << "set key outside right\n";
    os << "csv = " << quoted(csv_path.string()) << "\n";
    if (series.empty()) {
        os << "# no data rows\n";
        return os.str();
    }
    os << "plot ";
    for (std::size_t s = 0; s < series.size(); ++s) {
        std::string condition;
        std::string title;
        for (std::size_t c = 0; c < series_columns.size(); ++c) {
            const std::string &col = series_columns[c];
            const std::string &val = series[s][c];
            if (!condition.empty()) condition += " && ";
            if (!title.empty()) title += " ";
            title += col + "=" + val;
            if (col == "method")
                condition += "strcol(\"method\") eq " + quoted(val);
            else if (val.empty())
                condition += "strcol(" + quoted(col) + ") eq \"\"";
            else
                condition += "column(" + quoted(col) + ") == " + val;
        }
        if (s > 0) os << ", \\\n     ";
        os << "csv using (column(" << quoted(layout.x_column) << ")):((" << condition
           << ") ? column(\"value\") : NaN) with linespoints title " << quoted(title);
    }
    os << "\n";
    return os.str();
}

void emit_plot_script(const std::filesystem::path &csv_path, FigureKind kind,
                      const std::filesystem::path &script_path) {
    const std::string text = plot_script(csv_path, kind);
    std::ofstream out(script_path);
    if (!out) throw std::runtime_error("cannot write " + script_path.string());
    out << text;
}

} // namespace fama
