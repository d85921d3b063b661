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

#include <cstdint>
#include <limits>
#include <optional>
#include <string>

// Inverse design relations: how many ports, how wide an antenna, or how little
// correlation a user needs to reach a multiplexing-gain target m at SIR target
// gamma. Infeasible targets come back as results with a reason, not exceptions.

namespace fama {

struct DesignTarget {
    double mult_gain = 1.0;           // m
    double gamma = 1.0;               // linear SIR target
    int n_interferers = 1;            // N_I
    std::optional<double> q_override; // sigma_i^2 gamma / sigma^2; default N_I gamma

    double q() const noexcept { return q_override.value_or(n_interferers * gamma); }
    double n_users() const noexcept { return n_interferers + 1.0; }
    /// 1 - m / (N_I + 1): the outage level the target tolerates.
    double outage_budget() const noexcept { return 1.0 - mult_gain / n_users(); }

    /// Throws std::invalid_argument unless 0 < m <= N_I + 1, gamma > 0, N_I >= 1, q > 0.
    void validate() const;
};

template <class T>
struct DesignResult {
    std::optional<T> value;
    std::string note; // provenance when feasible, reason when not
    double closest_gain = std::numeric_limits<double>::quiet_NaN();

    bool feasible() const noexcept { return value.has_value(); }
};

/// Smallest N whose closed-form equal-correlation bound meets the outage
/// budget; doubling from N = 2 then bisection. Where the alternating sum loses
/// precision the integral bound with every |mu_k| = mu is used instead, and
/// the note says so.
DesignResult<int> min_ports_equal_corr(const DesignTarget &target, double mu, const QuadratureSettings &settings = {},
                                       int max_ports = 1 << 20);

struct CriticalMu {
    DesignResult<double> exact;  // ratio of the two alternating binomial sums
    DesignResult<double> approx; // sqrt(1 - m q / ((N_I + 1)(N - 1)))
};

CriticalMu critical_mu(const DesignTarget &target, int n_ports);

/// (1/pi) J0^{-1}(sqrt(1 - m q / ((N_I + 1)(floor(N/2) - 1)))) in wavelengths.
/// Requires floor(N/2) >= 2.
DesignResult<double> min_width(const DesignTarget &target, int n_ports);

/// Smallest even N with N >= 2 [m q / ((N_I + 1)(1 - J0^2(pi W))) + 1].
DesignResult<int> min_ports_general(const DesignTarget &target, double width);

/// Smallest N whose integral bound on the actual port geometry of width W
/// meets the outage budget.
DesignResult<int> min_ports_integral(const DesignTarget &target, double width, const QuadratureSettings &settings = {},
                                     int max_ports = 1 << 14);

/// Monte Carlo refinement: smallest N <= upper with estimated outage within
/// the budget (bisection on N, sigma = 1, sigma_i^2 = q / gamma).
DesignResult<int> min_ports_monte_carlo(const DesignTarget &target, double width, int upper, std::int64_t trials,
                                        std::uint64_t seed, unsigned threads = 1);

} // namespace fama
