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

#include "fama/rng.hpp"

#include <complex>
#include <span>
#include <vector>

namespace fama {

/// N ports spread evenly over W wavelengths. mu[k - 2] is the correlation
/// between port k and the reference port 1, for k = 2..N.
struct PortGeometry {
    int n_ports = 1;
    double width = 0.0; // NaN when the correlations were supplied directly
    std::vector<double> mu;

    /// Correlation of port `port` (1-based) with port 1; 1 for the reference.
    double mu_at(int port) const;
    double max_abs_mu() const;
};

/// mu_k = J0(2 pi (k - 1) W / (N - 1)).
PortGeometry make_geometry(int n_ports, double width);

/// Geometry with caller-chosen correlations (for the equal-correlation
/// bounds and hand-built test cases). n_ports = mu.size() + 1.
PortGeometry custom_geometry(std::span<const double> mu);

/// Every parameter needed for one analysis point.
struct FamaScenario {
    PortGeometry geometry;
    double sigma = 1.0;   // desired-channel RMS
    double sigma_i = 1.0; // aggregate interference RMS
    int n_interferers = 1;
    double gamma = 1.0; // SIR target, linear

    /// sigma_i^2 gamma / sigma^2
    double q() const noexcept { return sigma_i * sigma_i * gamma / (sigma * sigma); }
    int n_users() const noexcept { return n_interferers + 1; }

    /// Throws std::invalid_argument on any out-of-range field.
    void validate() const;

    /// Statistically identical users: sigma_i^2 = N_I sigma^2.
    static FamaScenario identical_users(int n_ports, double width, int n_interferers, double gamma, double sigma = 1.0);
};

double db_to_linear(double db) noexcept;
double linear_to_db(double linear) noexcept;

/// One realisation of the desired and aggregate interference gains at all ports.
struct ChannelDraw {
    std::vector<std::complex<double>> desired;
    std::vector<std::complex<double>> interference;
};

/// Writes g_1 = s (x0 + j y0), g_k = s (sqrt(1 - mu_k^2)(x_k + j y_k) + mu_k (x0 + j y0)).
/// out.size() must equal mu.size() + 1.
void sample_correlated(std::span<const double> mu, double scale, CounterRng &rng, std::span<std::complex<double>> out);

ChannelDraw sample_draw(const FamaScenario &scenario, CounterRng &rng);

/// In-place variant used by the Monte Carlo loop; resizes draw as needed.
void sample_draw(const FamaScenario &scenario, CounterRng &rng, ChannelDraw &draw);

/// Aggregate interference built as an explicit sum of N_I independent
/// correlated channels, each scaled by sigma_i / sqrt(N_I) and multiplied by
/// its data symbol. symbols.size() must equal N_I.
std::vector<std::complex<double>> sample_per_interferer(const FamaScenario &scenario,
                                                        std::span<const std::complex<double>> symbols, CounterRng &rng);

void sample_per_interferer(const FamaScenario &scenario, std::span<const std::complex<double>> symbols, CounterRng &rng,
                           std::span<std::complex<double>> out);

} // namespace fama
