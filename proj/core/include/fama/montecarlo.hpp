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

#include "fama/channel.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>

namespace fama {

enum class Method { kMonteCarlo, kExact, kBoundI, kBoundII };

/// "mc", "exact", "bound-I", "bound-II"
std::string_view method_name(Method method) noexcept;

/// Outage probability with its provenance. ci_halfwidth is the 99% normal
/// half-width for Monte Carlo and 0 for analytic methods.
struct OutageEstimate {
    double probability = 0.0;
    std::int64_t trials = 0;
    double ci_halfwidth = 0.0;
    Method method = Method::kMonteCarlo;
    double error_estimate = 0.0;          // quadrature estimate (analytic only)
    std::int64_t infinite_sir_events = 0; // ports with exactly zero interference
};

inline constexpr double kCiZ99 = 2.576;
inline constexpr std::int64_t kShardTrials = std::int64_t{1} << 16;

double ci_halfwidth_99(double probability, std::int64_t trials) noexcept;

struct PortChoice {
    int port = 1;     // 1-based, port 1 is the reference
    double sir = 0.0; // |g_k|^2 / |g_k^I|^2 at the chosen port
    bool infinite_sir = false;
};

/// Port with the largest |g_k|^2 / |g_k^I|^2; lowest index wins ties. A port
/// with zero interference has infinite SIR unless its desired gain is also
/// zero, in which case its SIR is 0.
PortChoice select_port(std::span<const std::complex<double>> desired,
                       std::span<const std::complex<double>> interference);

enum class InterferenceModel {
    kAggregate,     // one Gaussian aggregate with variance sigma_i^2
    kPerInterferer, // explicit sum over N_I unit-symbol interferers
};

struct McOptions {
    unsigned threads = 1;
    InterferenceModel interference = InterferenceModel::kAggregate;
};

/// Fraction of trials whose best-port SIR is <= gamma. Trials run in shards of
/// kShardTrials, shard s drawing from CounterRng(seed, s), so the result does
/// not depend on options.threads.
OutageEstimate estimate_outage(const FamaScenario &scenario, std::int64_t trials, std::uint64_t seed,
                               const McOptions &options = {});

struct NetworkMetrics {
    double capacity_lb = 0.0; // bits/s/Hz
    double multiplexing_gain = 0.0;
    OutageEstimate outage;
};

/// (N_I + 1)(1 - p) log2(1 + gamma) and (N_I + 1)(1 - p) with p estimated by
/// estimate_outage for one typical user.
NetworkMetrics estimate_network_metrics(const FamaScenario &scenario, std::int64_t trials, std::uint64_t seed,
                                        const McOptions &options = {});

} // namespace fama
