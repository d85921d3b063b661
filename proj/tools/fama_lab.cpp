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

// fama-lab: parameter sweeps and design tables for fluid antenna multiple
// access networks, written as CSV.

#include "fama/config.hpp"
#include "fama/errors.hpp"
#include "fama/plot_script.hpp"
#include "fama/selftest.hpp"
#include "fama/sweep.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

namespace {

using fama::SweepKind;
using fama::SweepSpec;

// Values given on the command line; unset ones leave the config file or the
// subcommand defaults in place.
struct Flags {
    std::optional<std::string> axis;
    std::optional<std::string> values;
    std::optional<double> gamma_db;
    std::optional<int> ports;
    std::optional<double> width;
    std::optional<int> interferers;
    std::optional<double> gain;
    std::optional<double> sigma;
    std::optional<double> sigma_i;
    std::optional<std::string> methods;
    std::optional<std::int64_t> trials;
    std::optional<std::uint64_t> seed;
    std::optional<unsigned> threads;
    std::optional<std::string> interference;
    std::optional<double> tolerance;
    std::optional<int> exact_cap;
    std::optional<std::string> config;
    std::optional<std::string> out;
    std::optional<std::string> plot;
    bool refine_mc = false;
};

struct Defaults {
    SweepKind kind;
    fama::SweepAxis axis;
    const char *values;
    const char *methods;
    int ports;
    double width;
    int interferers;
    double gamma_db;
    double gain;
};

unsigned default_threads() {
    if (const char *env = std::getenv("FAMA_LAB_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<unsigned>(v);
        } catch (const std::exception &) {}
        throw fama::UsageError(std::string("FAMA_LAB_THREADS must be a positive integer, got '") + env + "'");
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void add_common_options(CLI::App *cmd, Flags &f, bool sweep) {
    if (sweep) {
        cmd->add_option("--axis", f.axis, "Swept parameter: gamma_db, n_ports, n_interferers, width, mult_gain");
        cmd->add_option("--values", f.values, "Axis values: a,b,c or start:stop:step");
        cmd->add_option("--methods", f.methods, "Comma list of exact, bound-I, bound-II, mc, formula");
        cmd->add_option("--plot", f.plot, "Also write a gnuplot script <out>.gp of this figure kind");
    }
    cmd->add_option("--gamma-db", f.gamma_db, "SIR target in dB");
    cmd->add_option("--ports", f.ports, "Number of ports N");
    cmd->add_option("--width", f.width, "Antenna width W in wavelengths");
    cmd->add_option("--interferers", f.interferers, "Number of interferers N_I");
    cmd->add_option("--gain", f.gain, "Target multiplexing gain m");
    cmd->add_option("--sigma", f.sigma, "Desired channel RMS (default 1)");
    cmd->add_option("--sigma-i", f.sigma_i, "Aggregate interference RMS (default sigma*sqrt(N_I))");
    cmd->add_option("--trials", f.trials, "Monte Carlo trials per point");
    cmd->add_option("--seed", f.seed, "Monte Carlo seed");
    cmd->add_option("--threads", f.threads, "Worker threads (default FAMA_LAB_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--interference", f.interference, "Monte Carlo interference model: aggregate, per-interferer");
    cmd->add_option("--tolerance", f.tolerance, "Quadrature absolute tolerance");
    cmd->add_option("--exact-cap", f.exact_cap, "Largest N for the exact evaluator");
    cmd->add_option("--config", f.config, "key = value file; flags override it");
    cmd->add_option("--out", f.out, "Output CSV path (default stdout)");
    cmd->add_flag("--refine-mc", f.refine_mc, "Refine required port counts by Monte Carlo");
}

SweepSpec build_spec(const Defaults &d, const Flags &f) {
    SweepSpec spec;
    spec.kind = d.kind;
    spec.axis = d.axis;
    spec.axis_values = fama::parse_values(d.values);
    spec.methods = fama::parse_methods(d.methods);
    spec.n_ports = d.ports;
    spec.width = d.width;
    spec.n_interferers = d.interferers;
    spec.gamma_db = d.gamma_db;
    spec.mult_gain = d.gain;
    spec.threads = default_threads();

    if (f.config) fama::apply_config(fama::read_config(*f.config), spec);

    fama::ConfigMap overrides;
    auto put = [&](const char *key, const auto &value) {
        if (!value) return;
        std::ostringstream os;
        os.precision(17);
        os << *value;
        overrides[key] = os.str();
    };
    put("axis", f.axis);
    put("values", f.values);
    put("gamma-db", f.gamma_db);
    put("ports", f.ports);
    put("width", f.width);
    put("interferers", f.interferers);
    put("gain", f.gain);
    put("sigma", f.sigma);
    put("sigma-i", f.sigma_i);
    put("methods", f.methods);
    put("trials", f.trials);
    put("seed", f.seed);
    put("threads", f.threads);
    put("interference", f.interference);
    put("tolerance", f.tolerance);
    put("exact-cap", f.exact_cap);
    if (f.refine_mc) overrides["refine-mc"] = "true";
    fama::apply_config(overrides, spec);
    return spec;
}

void write_output(const Flags &f, const fama::SweepResult &result) {
    std::ostringstream os;
    fama::write_csv(os, result);
    if (!f.out) {
        std::cout << os.str();
        return;
    }
    std::ofstream file(*f.out, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + *f.out);
    file << os.str();
    if (!file) throw std::runtime_error("error writing " + *f.out);
}

int run_selftest(unsigned threads) {
    const fama::SelftestReport report = fama::run_selftest(threads);
    for (const auto &c : report.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
    return report.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"fama-lab: outage, capacity and design sweeps for fluid antenna multiple access"};
    app.require_subcommand(1);

    const Defaults outage{
        SweepKind::kOutage, fama::SweepAxis::kPorts, "10,20,50,100", "bound-I", 20, 2.0, 5, 10.0, 2.0};
    const Defaults capacity{
        SweepKind::kCapacity, fama::SweepAxis::kGammaDb, "-10:30:2", "bound-I", 50, 2.0, 100, 10.0, 2.0};
    const Defaults gain_width{
        SweepKind::kGainVsWidth, fama::SweepAxis::kWidth, "0.1:5:0.1", "bound-I,formula", 100, 2.0, 5, 10.0, 2.0};
    const Defaults ports_gain{
        SweepKind::kPortsVsGain, fama::SweepAxis::kMultGain, "0.5:4:0.5", "formula,bound-I", 20, 2.0, 5, 10.0, 2.0};
    const Defaults width_ports{
        SweepKind::kWidthVsPorts, fama::SweepAxis::kPorts, "64,128,256,512,1024", "formula", 20, 2.0, 100, 10.0, 2.0};
    const Defaults design{SweepKind::kOutage, fama::SweepAxis::kPorts, "0", "formula", 100, 0.5, 100, 10.0, 2.0};

    struct Command {
        CLI::App *app;
        const Defaults *defaults;
        Flags flags;
    };
    std::vector<Command> commands;
    commands.reserve(7);
    auto add_sweep = [&](const char *name, const char *help, const Defaults &d) {
        commands.push_back({app.add_subcommand(name, help), &d, {}});
        add_common_options(commands.back().app, commands.back().flags, true);
    };
    add_sweep("outage", "Outage probability along one axis", outage);
    add_sweep("capacity", "Capacity lower bound along one axis", capacity);
    add_sweep("gain-vs-width", "Multiplexing gain against antenna width", gain_width);
    add_sweep("ports-vs-gain", "Required port count against target multiplexing gain", ports_gain);
    add_sweep("width-vs-ports", "Required antenna width against port count", width_ports);
    commands.push_back(
        {app.add_subcommand("design", "Design quantities for one (m, gamma, N_I, N, W) target"), &design, {}});
    add_common_options(commands.back().app, commands.back().flags, false);

    auto *selftest = app.add_subcommand("selftest", "Run the identity and property suite");
    std::optional<unsigned> selftest_threads;
    selftest->add_option("--threads", selftest_threads, "Thread count for the determinism check")
        ->check(CLI::PositiveNumber);

    auto *plot = app.add_subcommand("plot", "Write a gnuplot script for an existing sweep CSV");
    std::string plot_csv;
    std::string plot_kind;
    std::optional<std::string> plot_out;
    plot->add_option("csv", plot_csv, "Sweep CSV")->required();
    plot->add_option("--kind", plot_kind, "Figure kind")->required();
    plot->add_option("--out", plot_out, "Script path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return 1;
    }

    try {
        if (selftest->parsed()) return run_selftest(selftest_threads.value_or(default_threads()));

        if (plot->parsed()) {
            const auto kind = fama::parse_figure_kind(plot_kind);
            if (plot_out)
                fama::emit_plot_script(plot_csv, kind, *plot_out);
            else
                std::cout << fama::plot_script(plot_csv, kind);
            return 0;
        }

        for (auto &cmd : commands) {
            if (!cmd.app->parsed()) continue;
            const SweepSpec spec = build_spec(*cmd.defaults, cmd.flags);
            const bool is_design = cmd.defaults == &design;
            const fama::SweepResult result = is_design ? fama::run_design(spec) : fama::run_sweep(spec);
            write_output(cmd.flags, result);
            if (cmd.flags.plot) {
                if (!cmd.flags.out) throw fama::UsageError("--plot needs --out");
                const auto kind = fama::parse_figure_kind(*cmd.flags.plot);
                fama::emit_plot_script(*cmd.flags.out, kind, *cmd.flags.out + ".gp");
            }
            return fama::exit_status(result);
        }
    } catch (const std::exception &e) {
        std::cerr << "fama-lab: error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
