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

#include "fama/analytic.hpp"
#include "fama/montecarlo.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

// Parameter sweeps behind the command line tool: one CSV row per
// (axis value, method), with the full parameter tuple echoed on every row.

namespace fama {

enum class SweepAxis { kGammaDb, kPorts, kInterferers, kWidth, kMultGain };

/// What each row's value column holds.
enum class SweepKind {
    kOutage,      // outage probability
    kCapacity,    // capacity lower bound (bits/s/Hz)
    kGainVsWidth, // multiplexing gain
    kPortsVsGain, // required port count
    kWidthVsPorts // required width (wavelengths)
};

/// Row methods. The first four evaluate the outage probability; kFormula is
/// the closed-form design rule or gain approximation of the sweep kind.
enum class SweepMethod { kExact, kBoundI, kBoundII, kMonteCarlo, kFormula };

const char *axis_name(SweepAxis axis) noexcept;
const char *kind_name(SweepKind kind) noexcept;
const char *sweep_method_name(SweepMethod method) noexcept;
SweepAxis parse_axis(const std::string &text);
SweepKind parse_kind(const std::string &text);
SweepMethod parse_sweep_method(const std::string &text);
std::vector<SweepMethod> parse_methods(const std::string &comma_list);

/// "a,b,c" or "start:stop:step" (inclusive stop, tolerant to rounding).
std::vector<double> parse_values(const std::string &text);

struct SweepSpec {
    SweepKind kind = SweepKind::kOutage;
    SweepAxis axis = SweepAxis::kPorts;
    std::vector<double> axis_values;

    // Fixed parameters; the axis overrides one of them per point.
    double gamma_db = 10.0;
    int n_ports = 20;
    double width = 2.0;
    int n_interferers = 5;
    double mult_gain = 2.0;
    double sigma = 1.0;
    std::optional<double> sigma_i; // default sigma sqrt(N_I)

    std::vector<SweepMethod> methods{SweepMethod::kBoundI};
    std::int64_t trials = 100000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool refine_mc = false;
    InterferenceModel interference = InterferenceModel::kAggregate;
    QuadratureSettings quadrature;

    /// Throws std::invalid_argument on an empty or non-increasing axis, mc
    /// with fewer than 1000 trials, methods the kind does not support, or
    /// exact requested at a port count above the cap.
    void validate() const;
};

struct SweepRow {
    double gamma_db = 0.0;
    std::optional<int> n_ports;
    std::optional<double> width;
    int n_interferers = 0;
    double sigma = 1.0;
    double sigma_i = 1.0;
    std::string method;
    std::optional<double> value;
    std::optional<double> ci_halfwidth;
    std::optional<double> capacity_lb;
    std::optional<double> mult_gain;
    std::string note;
    bool infeasible = false;
};

struct SweepResult {
    std::vector<SweepRow> rows;

    bool infeasible_only() const noexcept;
};

SweepResult run_sweep(const SweepSpec &spec);

/// Rows of the single design point described by spec's fixed parameters:
/// required ports (general, equal-correlation and integral-bound forms),
/// required width, and critical correlation.
SweepResult run_design(const SweepSpec &spec);

extern const char *const kCsvHeader;
void write_csv(std::ostream &os, const SweepResult &result);

/// 0 success, 2 when every row is infeasible.
int exit_status(const SweepResult &result) noexcept;

} // namespace fama
