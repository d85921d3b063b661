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

#include "fama/analytic.hpp"
#include "fama/channel.hpp"
#include "fama/montecarlo.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace fama;

FamaScenario scenario(int n_ports) { return FamaScenario::identical_users(n_ports, 2.0, 5, db_to_linear(10.0)); }

// Trials per second of the Monte Carlo estimator on one thread.
void BM_MonteCarlo(benchmark::State &state) {
    const FamaScenario s = scenario(static_cast<int>(state.range(0)));
    constexpr std::int64_t trials = 1 << 16;
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(estimate_outage(s, trials, seed++).probability);
    state.SetItemsProcessed(state.iterations() * trials);
}
BENCHMARK(BM_MonteCarlo)->Arg(5)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_OutageExact(benchmark::State &state) {
    const FamaScenario s = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(outage_exact(s).probability);
}
BENCHMARK(BM_OutageExact)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_BoundIntegral(benchmark::State &state) {
    const FamaScenario s = scenario(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(outage_ub_integral(s).probability);
}
BENCHMARK(BM_BoundIntegral)->Arg(20)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_BoundClosedForm(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(outage_ub_closed(n, 0.5, 50.0).value);
}
BENCHMARK(BM_BoundClosedForm)->Arg(20)->Arg(200);

} // namespace
