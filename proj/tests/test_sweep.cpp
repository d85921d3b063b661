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
#include "fama/plot_script.hpp"
#include "fama/sweep.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace fama;

namespace {

std::string csv_of(const SweepSpec &spec) {
    std::ostringstream os;
    write_csv(os, run_sweep(spec));
    return os.str();
}

std::filesystem::path temp_file(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("fama_lab_test_" + name);
}

// value column by (method, axis value) from rows of one sweep
std::map<std::string, std::vector<double>> values_by_method(const SweepResult &r) {
    std::map<std::string, std::vector<double>> out;
    for (const auto &row : r.rows) out[row.method].push_back(row.value.value_or(NAN));
    return out;
}

} // namespace

TEST_CASE("CSV header is fixed") {
    CHECK(std::string(kCsvHeader) ==
          "gamma_db,N,W,NI,sigma,sigma_i,method,value,ci_halfwidth,capacity_lb,mult_gain,note");
    SweepSpec spec;
    spec.axis_values = {2};
    std::istringstream in(csv_of(spec));
    std::string first;
    std::getline(in, first);
    CHECK(first == kCsvHeader);
}

TEST_CASE("axis value parsing") {
    CHECK(parse_values("1,2.5,4") == std::vector<double>{1, 2.5, 4});
    const auto range = parse_values("0:1:0.1");
    REQUIRE(range.size() == 11);
    CHECK(range.back() == doctest::Approx(1.0));
    CHECK(parse_values("5:5:1") == std::vector<double>{5});
    CHECK_THROWS_AS(parse_values("1:2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_values("1:2:0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_values("3:1:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_values("1,x"), std::invalid_argument);
    CHECK(parse_methods("mc,bound-I,mc").size() == 2);
    CHECK_THROWS_AS(parse_methods("exact,bogus"), std::invalid_argument);
    CHECK(parse_axis("N") == SweepAxis::kPorts);
    CHECK_THROWS_AS(parse_axis("depth"), std::invalid_argument);
}

TEST_CASE("sweep validation") {
    SweepSpec spec;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument); // empty axis
    spec.axis_values = {4, 2};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.axis_values = {2, 4};
    spec.methods = {SweepMethod::kMonteCarlo};
    spec.trials = 999;
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
    spec.trials = 1000;
    CHECK_NOTHROW(spec.validate());
    spec.axis_values = {2.5};
    CHECK_THROWS_AS(spec.validate(), std::invalid_argument); // N must be an integer

    SweepSpec exact;
    exact.axis_values = {10, 40};
    exact.methods = {SweepMethod::kExact};
    try {
        exact.validate();
        FAIL("expected the cap to be enforced");
    } catch (const std::invalid_argument &e) {
        CHECK(std::string(e.what()).find("32") != std::string::npos);
    }

    SweepSpec width_ports;
    width_ports.kind = SweepKind::kWidthVsPorts;
    width_ports.axis_values = {8};
    width_ports.methods = {SweepMethod::kMonteCarlo};
    CHECK_THROWS_AS(width_ports.validate(), std::invalid_argument);
}

TEST_CASE("single-port Monte Carlo row") {
    SweepSpec spec;
    spec.axis = SweepAxis::kPorts;
    spec.axis_values = {1};
    spec.gamma_db = 10.0;
    spec.n_interferers = 1;
    spec.sigma_i = 1.0; // q = 10
    spec.methods = {SweepMethod::kMonteCarlo};
    spec.trials = 1'000'000;
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 1);
    const SweepRow &row = r.rows[0];
    CHECK(row.method == "mc");
    REQUIRE(row.ci_halfwidth);
    CHECK(std::abs(*row.value - 10.0 / 11.0) <= *row.ci_halfwidth);
    CHECK(*row.mult_gain == doctest::Approx(2.0 * (1.0 - *row.value)));
}

TEST_CASE("outage-vs-N: the bound lies above the exact curve") {
    for (double w : {0.5, 2.0})
        for (int ni : {2, 5}) {
            SweepSpec spec;
            spec.axis_values = {2, 4, 8, 12};
            spec.width = w;
            spec.n_interferers = ni;
            spec.gamma_db = 10.0;
            spec.methods = {SweepMethod::kExact, SweepMethod::kBoundI};
            auto v = values_by_method(run_sweep(spec));
            for (std::size_t i = 0; i < 4; ++i) CHECK(v["exact"][i] <= v["bound-I"][i] + 1e-9);
            for (std::size_t i = 1; i < 4; ++i) CHECK(v["bound-I"][i] < v["bound-I"][i - 1]);
        }
}

TEST_CASE("capacity-vs-gamma has an interior maximum") {
    SweepSpec spec;
    spec.kind = SweepKind::kCapacity;
    spec.axis = SweepAxis::kGammaDb;
    spec.axis_values = parse_values("-20:20:2");
    spec.n_ports = 50;
    spec.n_interferers = 100;
    spec.width = 2.0;
    spec.methods = {SweepMethod::kBoundI};
    const auto c = values_by_method(run_sweep(spec))["bound-I"];
    const auto peak = std::max_element(c.begin(), c.end()) - c.begin();
    CHECK(peak > 0);
    CHECK(peak < static_cast<long>(c.size()) - 1);
    for (long i = 1; i <= peak; ++i) CHECK(c[i] >= c[i - 1]);
    for (long i = peak + 1; i < static_cast<long>(c.size()); ++i) CHECK(c[i] <= c[i - 1]);
}

TEST_CASE("capacity saturates in N") {
    SweepSpec spec;
    spec.kind = SweepKind::kCapacity;
    spec.axis_values = {10, 50, 200, 1000, 4000};
    spec.n_interferers = 5;
    spec.methods = {SweepMethod::kBoundI};
    const auto c = values_by_method(run_sweep(spec))["bound-I"];
    const double ceiling = 6.0 * std::log2(11.0);
    for (std::size_t i = 1; i < c.size(); ++i) {
        CHECK(c[i] > c[i - 1]);
        CHECK(c[i] <= ceiling);
    }
    // Gains per step shrink once the curve approaches the ceiling.
    CHECK(c[4] - c[3] < c[2] - c[1]);
}

TEST_CASE("gain-vs-width: diminishing return past half a wavelength") {
    SweepSpec spec;
    spec.kind = SweepKind::kGainVsWidth;
    spec.axis = SweepAxis::kWidth;
    spec.axis_values = parse_values("0.05:3:0.05");
    spec.n_ports = 200;
    spec.n_interferers = 100;
    spec.gamma_db = 10.0;
    spec.methods = {SweepMethod::kFormula};
    const auto m = values_by_method(run_sweep(spec))["formula"];
    const double at_005 = m.front();
    const double at_05 = m[9];
    double lo = 1e300, hi = 0.0;
    for (std::size_t i = 9; i < m.size(); ++i) {
        lo = std::min(lo, m[i]);
        hi = std::max(hi, m[i]);
    }
    CHECK(at_05 > 5.0 * at_005);
    CHECK((hi - lo) / hi < 0.25);
    // Ripples: not monotone beyond 0.5.
    bool dips = false;
    for (std::size_t i = 10; i < m.size(); ++i) dips = dips || m[i] < m[i - 1];
    CHECK(dips);
}

TEST_CASE("sweeps are deterministic across runs and thread counts") {
    SweepSpec spec;
    spec.axis_values = {2, 3, 5, 9};
    spec.width = 1.2;
    spec.methods = {SweepMethod::kMonteCarlo, SweepMethod::kBoundI, SweepMethod::kBoundII};
    spec.trials = 100000;
    spec.seed = 5;
    spec.threads = 1;
    const std::string a = csv_of(spec);
    spec.threads = 3;
    const std::string b = csv_of(spec);
    spec.threads = 8;
    const std::string c = csv_of(spec);
    CHECK(a == b);
    CHECK(a == c);
    spec.seed = 6;
    CHECK(csv_of(spec) != a);
}

TEST_CASE("rows follow axis order and echo every parameter") {
    SweepSpec spec;
    spec.kind = SweepKind::kOutage;
    spec.axis = SweepAxis::kInterferers;
    spec.axis_values = {1, 2, 7};
    spec.methods = {SweepMethod::kBoundI, SweepMethod::kBoundII};
    spec.threads = 3;
    const SweepResult r = run_sweep(spec);
    REQUIRE(r.rows.size() == 6);
    const int expected[] = {1, 1, 2, 2, 7, 7};
    for (std::size_t i = 0; i < 6; ++i) {
        CHECK(r.rows[i].n_interferers == expected[i]);
        CHECK(r.rows[i].n_ports == spec.n_ports);
        CHECK(*r.rows[i].width == spec.width);
        CHECK(r.rows[i].sigma_i == doctest::Approx(std::sqrt(expected[i])));
    }
    std::ostringstream os;
    write_csv(os, r);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) CHECK(std::count(line.begin(), line.end(), ',') == 11);
}

TEST_CASE("infeasible design cells") {
    SweepSpec spec;
    spec.kind = SweepKind::kWidthVsPorts;
    spec.axis = SweepAxis::kPorts;
    spec.axis_values = {8, 16};
    spec.n_interferers = 100;
    spec.methods = {SweepMethod::kFormula};
    const SweepResult r = run_sweep(spec);
    CHECK(r.infeasible_only());
    CHECK(exit_status(r) == 2);
    for (const auto &row : r.rows) {
        CHECK_FALSE(row.value);
        CHECK(row.infeasible);
        CHECK_FALSE(row.note.empty());
    }
    spec.axis_values = {8, 1024};
    const SweepResult mixed = run_sweep(spec);
    CHECK_FALSE(mixed.infeasible_only());
    CHECK(exit_status(mixed) == 0);
}

TEST_CASE("ports-vs-gain and design rows") {
    SweepSpec spec;
    spec.kind = SweepKind::kPortsVsGain;
    spec.axis = SweepAxis::kMultGain;
    spec.axis_values = {1, 2, 3};
    spec.methods = {SweepMethod::kFormula, SweepMethod::kBoundI};
    auto v = values_by_method(run_sweep(spec));
    for (const auto &[method, ports] : v)
        for (std::size_t i = 1; i < ports.size(); ++i) CHECK(ports[i] >= ports[i - 1]);

    SweepSpec design;
    design.mult_gain = 2.0;
    design.gamma_db = 10.0;
    design.n_interferers = 100;
    design.width = 0.5;
    design.n_ports = 200;
    const SweepResult d = run_design(design);
    std::set<std::string> methods;
    for (const auto &row : d.rows) methods.insert(row.method);
    for (const char *m :
         {"ports-general", "ports-equal-corr", "ports-bound-I", "width", "mu-critical", "mu-critical-approx"})
        CHECK(methods.count(m) == 1);
}

TEST_CASE("config files") {
    std::istringstream text("# defaults\nports = 12\n width=0.75 # inline comment\n\nmethods = mc,bound-I\n");
    const ConfigMap cfg = parse_config(text, "inline");
    CHECK(cfg.at("ports") == "12");
    CHECK(cfg.at("width") == "0.75");
    SweepSpec spec;
    apply_config(cfg, spec);
    CHECK(spec.n_ports == 12);
    CHECK(spec.width == 0.75);
    CHECK(spec.methods.size() == 2);

    std::istringstream repeated("seed = 1\nseed = 2\n");
    CHECK_THROWS_AS(parse_config(repeated, "x"), UsageError);
    std::istringstream malformed("seed 1\n");
    try {
        (void)parse_config(malformed, "cfg.txt");
        FAIL("expected a usage error");
    } catch (const UsageError &e) {
        CHECK(std::string(e.what()).find("cfg.txt:1") != std::string::npos);
    }
    CHECK_THROWS_AS(apply_config({{"colour", "blue"}}, spec), UsageError);
    CHECK_THROWS_AS(apply_config({{"ports", "many"}}, spec), UsageError);
    CHECK_THROWS_AS(read_config(temp_file("does_not_exist.cfg")), FileNotFoundError);

    const auto path = temp_file("config.cfg");
    {
        std::ofstream out(path);
        out << "gamma-db = 3\ninterferers = 4\n";
    }
    SweepSpec from_file;
    apply_config(read_config(path), from_file);
    CHECK(from_file.gamma_db == 3.0);
    CHECK(from_file.n_interferers == 4);
    std::filesystem::remove(path);
}

TEST_CASE("plot scripts") {
    SweepSpec spec;
    spec.axis_values = {2, 4, 8};
    spec.methods = {SweepMethod::kBoundI, SweepMethod::kBoundII};
    const auto outage_csv = temp_file("outage.csv");
    {
        std::ofstream out(outage_csv);
        write_csv(out, run_sweep(spec));
    }
    const std::string script = plot_script(outage_csv, FigureKind::kOutageVsN);
    CHECK(script.find("set logscale y") != std::string::npos);
    CHECK(script.find("column(\"N\")") != std::string::npos);
    CHECK(script.find("strcol(\"method\") eq \"bound-II\"") != std::string::npos);

    SweepSpec cap;
    cap.kind = SweepKind::kCapacity;
    cap.axis = SweepAxis::kGammaDb;
    cap.axis_values = {0, 10};
    cap.methods = {SweepMethod::kBoundI};
    const auto cap_csv = temp_file("capacity.csv");
    {
        std::ofstream out(cap_csv);
        SweepResult all;
        for (int ni : {5, 20, 100}) {
            cap.n_interferers = ni;
            const SweepResult part = run_sweep(cap);
            all.rows.insert(all.rows.end(), part.rows.begin(), part.rows.end());
        }
        write_csv(out, all);
    }
    const std::string cap_script = plot_script(cap_csv, FigureKind::kCapacityVsGamma);
    CHECK(cap_script.find("logscale y") == std::string::npos);
    for (const char *ni : {"NI=5", "NI=20", "NI=100"}) CHECK(cap_script.find(ni) != std::string::npos);
    std::size_t series = 0;
    for (std::size_t pos = 0; (pos = cap_script.find("with linespoints", pos)) != std::string::npos; ++pos) ++series;
    CHECK(series == 3);

    const auto missing = temp_file("missing.csv");
    try {
        (void)plot_script(missing, FigureKind::kOutageVsN);
        FAIL("expected file-not-found");
    } catch (const FileNotFoundError &e) {
        CHECK(std::string(e.what()).find(missing.string()) != std::string::npos);
    }
    CHECK_THROWS_AS(parse_figure_kind("pie-chart"), UsageError);
    CHECK(parse_figure_kind("capacity-vs-gamma") == FigureKind::kCapacityVsGamma);

    const auto script_path = temp_file("outage.gp");
    emit_plot_script(outage_csv, FigureKind::kOutageVsN, script_path);
    CHECK(std::filesystem::file_size(script_path) == script.size());
    for (const auto &p : {outage_csv, cap_csv, script_path}) std::filesystem::remove(p);
}
