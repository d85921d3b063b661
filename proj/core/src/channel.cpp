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

#include "fama/channel.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fama {

namespace {

std::uint64_t splitmix64(std::uint64_t z) noexcept {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

} // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : key_(splitmix64(seed ^ splitmix64(stream_id ^ 0xD1B54A32D192ED03ULL))) {}

std::uint64_t CounterRng::next() noexcept {
    ++counter_;
    return splitmix64(key_ + counter_ * 0x9E3779B97F4A7C15ULL);
}

double CounterRng::uniform() noexcept { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

std::complex<double> CounterRng::complex_gaussian() noexcept {
    const double radius = std::sqrt(-std::log(uniform()));
    const double angle = 2.0 * std::numbers::pi * uniform();
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

double PortGeometry::mu_at(int port) const {
    if (port < 1 || port > n_ports) throw std::out_of_range("PortGeometry::mu_at: port out of range");
    return port == 1 ? 1.0 : mu[static_cast<std::size_t>(port - 2)];
}

double PortGeometry::max_abs_mu() const {
    double m = 0.0;
    for (double v : mu) m = std::max(m, std::fabs(v));
    return m;
}

PortGeometry make_geometry(int n_ports, double width) {
    if (n_ports < 1) throw std::invalid_argument("make_geometry: n_ports must be >= 1");
    if (!(width >= 0.0) || !std::isfinite(width))
        throw std::invalid_argument("make_geometry: width must be finite and >= 0");
    PortGeometry g;
    g.n_ports = n_ports;
    g.width = width;
    g.mu.reserve(static_cast<std::size_t>(n_ports - 1));
    for (int k = 2; k <= n_ports; ++k) {
        const double arg = 2.0 * std::numbers::pi * (k - 1) * width / (n_ports - 1);
        g.mu.push_back(specfun::bessel_j0(arg));
    }
    return g;
}

PortGeometry custom_geometry(std::span<const double> mu) {
    for (double v : mu)
        if (!(std::fabs(v) <= 1.0)) throw std::invalid_argument("custom_geometry: every mu_k must lie in [-1, 1]");
    PortGeometry g;
    g.n_ports = static_cast<int>(mu.size()) + 1;
    g.width = std::numeric_limits<double>::quiet_NaN();
    g.mu.assign(mu.begin(), mu.end());
    return g;
}

void FamaScenario::validate() const {
    if (geometry.n_ports < 1 || geometry.mu.size() != static_cast<std::size_t>(geometry.n_ports - 1))
        throw std::invalid_argument("FamaScenario: geometry has inconsistent port count");
    for (double v : geometry.mu)
        if (!(std::fabs(v) <= 1.0)) throw std::invalid_argument("FamaScenario: mu_k outside [-1, 1]");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("FamaScenario: sigma must be finite and > 0");
    if (!(sigma_i >= 0.0) || !std::isfinite(sigma_i))
        throw std::invalid_argument("FamaScenario: sigma_i must be finite and >= 0");
    if (n_interferers < 0) throw std::invalid_argument("FamaScenario: n_interferers must be >= 0");
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("FamaScenario: gamma must be finite and > 0");
}

FamaScenario FamaScenario::identical_users(int n_ports, double width, int n_interferers, double gamma, double sigma) {
    FamaScenario s;
    s.geometry = make_geometry(n_ports, width);
    s.sigma = sigma;
    s.sigma_i = std::sqrt(static_cast<double>(n_interferers)) * sigma;
    s.n_interferers = n_interferers;
    s.gamma = gamma;
    s.validate();
    return s;
}

double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) noexcept { return 10.0 * std::log10(linear); }

void sample_correlated(std::span<const double> mu, double scale, CounterRng &rng, std::span<std::complex<double>> out) {
    if (out.size() != mu.size() + 1)
        throw std::invalid_argument("sample_correlated: output size must be mu.size() + 1");
    const std::complex<double> reference = rng.complex_gaussian();
    out[0] = scale * reference;
    for (std::size_t k = 0; k < mu.size(); ++k) {
        const double m = mu[k];
        const double m2 = m * m;
        const std::complex<double> own = rng.complex_gaussian();
        // |mu| = 1 must not feed a rounded negative into the square root
        const double spread = m2 >= 1.0 ? 0.0 : std::sqrt(1.0 - m2);
        out[k + 1] = scale * (spread * own + m * reference);
    }
}

void sample_draw(const FamaScenario &scenario, CounterRng &rng, ChannelDraw &draw) {
    const auto n = static_cast<std::size_t>(scenario.geometry.n_ports);
    draw.desired.resize(n);
    draw.interference.resize(n);
    sample_correlated(scenario.geometry.mu, scenario.sigma, rng, draw.desired);
    sample_correlated(scenario.geometry.mu, scenario.sigma_i, rng, draw.interference);
}

ChannelDraw sample_draw(const FamaScenario &scenario, CounterRng &rng) {
    ChannelDraw draw;
    sample_draw(scenario, rng, draw);
    return draw;
}

void sample_per_interferer(const FamaScenario &scenario, std::span<const std::complex<double>> symbols, CounterRng &rng,
                           std::span<std::complex<double>> out) {
    if (scenario.n_interferers < 1) throw std::invalid_argument("sample_per_interferer: needs at least one interferer");
    if (symbols.empty()) throw std::invalid_argument("sample_per_interferer: symbol vector is empty");
    if (symbols.size() != static_cast<std::size_t>(scenario.n_interferers))
        throw std::invalid_argument("sample_per_interferer: expected " + std::to_string(scenario.n_interferers) +
                                    " symbols, got " + std::to_string(symbols.size()));
    const auto n = static_cast<std::size_t>(scenario.geometry.n_ports);
    if (out.size() != n) throw std::invalid_argument("sample_per_interferer: output size must equal n_ports");

    const double per_user = scenario.sigma_i / std::sqrt(static_cast<double>(scenario.n_interferers));
    thread_local std::vector<std::complex<double>> single;
    single.resize(n);
    std::fill(out.begin(), out.end(), std::complex<double>{});
    for (const auto &s : symbols) {
        sample_correlated(scenario.geometry.mu, per_user, rng, single);
        for (std::size_t k = 0; k < n; ++k) out[k] += single[k] * s;
    }
}

std::vector<std::complex<double>>
sample_per_interferer(const FamaScenario &scenario, std::span<const std::complex<double>> symbols, CounterRng &rng) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(scenario.geometry.n_ports));
    sample_per_interferer(scenario, symbols, rng, out);
    return out;
}

} // namespace fama
