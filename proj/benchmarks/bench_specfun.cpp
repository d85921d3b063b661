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

#include "fama/specfun.hpp"

#include <benchmark/benchmark.h>

#include <vector>

namespace {

using namespace fama::specfun;

// Arguments spread over every evaluation region of each function.
std::vector<double> sample_points(double hi, int n) {
    std::vector<double> x(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = hi * (i + 0.5) / n;
    return x;
}

void BM_BesselJ0(benchmark::State &state) {
    const auto x = sample_points(60.0, 1024);
    for (auto _ : state)
        for (double v : x) benchmark::DoNotOptimize(bessel_j0(v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_BesselJ0);

void BM_BesselI0Scaled(benchmark::State &state) {
    const auto x = sample_points(100.0, 1024);
    for (auto _ : state)
        for (double v : x) benchmark::DoNotOptimize(bessel_i0_scaled(v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_BesselI0Scaled);

void BM_MarcumQ1(benchmark::State &state) {
    const auto a = sample_points(20.0, 64);
    for (auto _ : state)
        for (double u : a)
            for (double v : a) benchmark::DoNotOptimize(marcum_q1(u, v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(a.size() * a.size()));
}
BENCHMARK(BM_MarcumQ1);

void BM_ExpintEn(benchmark::State &state) {
    const int k = static_cast<int>(state.range(0));
    const auto x = sample_points(20.0, 256);
    for (auto _ : state)
        for (double v : x) benchmark::DoNotOptimize(expint_en(k, v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(x.size()));
}
BENCHMARK(BM_ExpintEn)->Arg(1)->Arg(8)->Arg(64);

void BM_EnvelopeInverse(benchmark::State &state) {
    const auto mu = sample_points(0.9, 256);
    for (auto _ : state)
        for (double v : mu) benchmark::DoNotOptimize(j0_envelope_inverse(0.05 + v));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(mu.size()));
}
BENCHMARK(BM_EnvelopeInverse);

} // namespace
