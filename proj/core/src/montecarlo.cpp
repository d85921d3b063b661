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

#include "fama/montecarlo.hpp"
#include "fama/analytic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace fama {

std::string_view method_name(Method method) noexcept {
    switch (method) {
    case Method::kMonteCarlo: return "mc";
    case Method::kExact: return "exact";
    case Method::kBoundI: return "bound-I";
    case Method::kBoundII: return "bound-II";
    }
    return "unknown";
}

double ci_halfwidth_99(double probability, std::int64_t trials) noexcept {
    if (trials <= 0) return 0.0;
    return kCiZ99 * std::sqrt(probability * (1.0 - probability) / static_cast<double>(trials));
}

PortChoice select_port(std::span<const std::complex<double>> desired,
                       std::span<const std::complex<double>> interference) {
    if (desired.empty() || desired.size() != interference.size())
        throw std::invalid_argument("select_port: desired and interference must have the same nonzero length");

    PortChoice best;
    best.sir = -1.0;
    for (std::size_t k = 0; k < desired.size(); ++k) {
        const double signal = std::norm(desired[k]);
        const double noise = std::norm(interference[k]);
        double sir;
        bool infinite = false;
        if (noise == 0.0) {
            infinite = signal > 0.0;
            sir = infinite ? std::numeric_limits<double>::infinity() : 0.0;
        } else {
            sir = signal / noise;
        }
        if (sir > best.sir) {
            best.port = static_cast<int>(k) + 1;
            best.sir = sir;
            best.infinite_sir = infinite;
        }
    }
    return best;
}

namespace {

struct ShardCount {
    std::int64_t outages = 0;
    std::int64_t infinite = 0;
};

ShardCount run_shard(const FamaScenario &scenario, std::int64_t trials, std::uint64_t seed, std::uint64_t shard,
                     InterferenceModel model) {
    CounterRng rng(seed, shard);
    ChannelDraw draw;
    const std::vector<std::complex<double>> symbols(static_cast<std::size_t>(std::max(scenario.n_interferers, 0)),
                                                    {1.0, 0.0});
    if (model == InterferenceModel::kPerInterferer) {
        draw.desired.resize(static_cast<std::size_t>(scenario.geometry.n_ports));
        draw.interference.resize(draw.desired.size());
    }

    ShardCount count;
    for (std::int64_t t = 0; t < trials; ++t) {
        if (model == InterferenceModel::kAggregate) {
            sample_draw(scenario, rng, draw);
        } else {
            sample_correlated(scenario.geometry.mu, scenario.sigma, rng, draw.desired);
            sample_per_interferer(scenario, symbols, rng, draw.interference);
        }
        const PortChoice choice = select_port(draw.desired, draw.interference);
        if (choice.infinite_sir) ++count.infinite;
        if (choice.sir <= scenario.gamma) ++count.outages;
    }
    return count;
}

} // namespace

OutageEstimate estimate_outage(const FamaScenario &scenario, std::int64_t trials, std::uint64_t seed,
                               const McOptions &options) {
    scenario.validate();
    if (trials < 1) throw std::invalid_argument("estimate_outage: trials must be >= 1");
    if (scenario.sigma_i == 0.0) throw std::invalid_argument("estimate_outage: sigma_i = 0 leaves the SIR undefined");
    if (options.interference == InterferenceModel::kPerInterferer && scenario.n_interferers < 1)
        throw std::invalid_argument("estimate_outage: per-interferer sampling needs N_I >= 1");

    const auto shards = static_cast<std::size_t>((trials + kShardTrials - 1) / kShardTrials);
    std::vector<ShardCount> counts(shards);
    auto shard_trials = [&](std::size_t s) {
        const std::int64_t begin = static_cast<std::int64_t>(s) * kShardTrials;
        return std::min(kShardTrials, trials - begin);
    };

    const unsigned workers = std::clamp<unsigned>(options.threads, 1u, static_cast<unsigned>(shards));
    if (workers == 1) {
        for (std::size_t s = 0; s < shards; ++s)
            counts[s] = run_shard(scenario, shard_trials(s), seed, s, options.interference);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t s = next++; s < shards; s = next++)
                    counts[s] = run_shard(scenario, shard_trials(s), seed, s, options.interference);
            });
    }

    std::int64_t outages = 0;
    std::int64_t infinite = 0;
    for (const auto &c : counts) {
        outages += c.outages;
        infinite += c.infinite;
    }
    OutageEstimate est;
    est.method = Method::kMonteCarlo;
    est.trials = trials;
    est.probability = static_cast<double>(outages) / static_cast<double>(trials);
    est.ci_halfwidth = ci_halfwidth_99(est.probability, trials);
    est.infinite_sir_events = infinite;
    return est;
}

NetworkMetrics estimate_network_metrics(const FamaScenario &scenario, std::int64_t trials, std::uint64_t seed,
                                        const McOptions &options) {
    NetworkMetrics m;
    m.outage = estimate_outage(scenario, trials, seed, options);
    m.capacity_lb = capacity_lower_bound(scenario, m.outage.probability);
    m.multiplexing_gain = multiplexing_gain(scenario.n_users(), m.outage.probability);
    return m;
}

} // namespace fama
