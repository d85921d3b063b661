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
#include "fama/montecarlo.hpp"

#include <span>

// Deterministic evaluation of the SIR outage probability (exact double
// integral and its two upper bounds) and of the network capacity and
// multiplexing-gain expressions built on it.

namespace fama {

struct QuadratureSettings {
    int outer_nodes = 8;       // Gauss-Legendre order per z panel (2x for the error estimate)
    int inner_nodes = 8;       // Gauss-Legendre order per t panel
    double tail_cutoff = 60.0; // z integration stops here; e^{-60} is below any tolerance used
    double tolerance = 1e-9;   // target absolute error
    int exact_cap = 32;        // largest N accepted by outage_exact

    void validate() const;
};

/// Per-port factor of the exact integrand: P(|g_k| <= sqrt(gamma)|g_k^I| | z, t)
/// with z = |g_1^I|^2 / sigma_i^2 and t = |g_1|^2 / sigma^2, for correlation
/// ratio r = mu^2 / (1 - mu^2). The I0 term is evaluated in the
/// non-positive-exponent form e^{-c (sqrt(qz) - sqrt(t))^2} e^{-x} I0(x).
double exact_port_factor(double q, double r, double z, double t);

/// Exact outage probability. Throws CapExceededError above settings.exact_cap
/// and SingularCorrelationError if some |mu_k| = 1.
OutageEstimate outage_exact(const FamaScenario &scenario, const QuadratureSettings &settings = {});
OutageEstimate outage_exact(std::span<const double> mu, double q, const QuadratureSettings &settings = {});

/// Integral upper bound (one z-integral of a product over ports).
OutageEstimate outage_ub_integral(const FamaScenario &scenario, const QuadratureSettings &settings = {});
OutageEstimate outage_ub_integral(std::span<const double> mu, double q, const QuadratureSettings &settings = {});

/// Integral bound with all N - 1 correlations equal to mu in magnitude; the
/// product collapses to a power so any N is cheap.
double outage_ub_integral_equal(int n_ports, double mu, double q, const QuadratureSettings &settings = {});

enum class ClosedFormVariant {
    kLargeQ,            // large-q form: q + 1 replaced by q throughout
    kExactIntermediate, // keeps q + 1; equals the dropped-(1 - e^{-qz}) integral exactly
};

struct ClosedFormBound {
    double value = 0.0;       // clamped to [0, 1]
    double raw = 0.0;         // alternating sum before clamping
    double lost_digits = 0.0; // log10(sum |terms| / |sum|)
    bool clamped = false;
    bool degenerate_mu = false; // mu == 0, independent-port value returned
};

/// Closed-form equal-correlation bound: an alternating binomial sum of
/// generalised exponential integrals. Throws PrecisionError when cancellation
/// destroys more than max_lost_digits decimal digits.
ClosedFormBound outage_ub_closed(int n_ports, double mu, double q,
                                 ClosedFormVariant variant = ClosedFormVariant::kLargeQ, double max_lost_digits = 6.0);

/// The same quantity as outage_ub_closed(variant) (without the mu == 0
/// special case), evaluated by quadrature of the integral the sum expands.
/// Stable for any N.
double outage_ub_closed_integral(int n_ports, double mu, double q,
                                 ClosedFormVariant variant = ClosedFormVariant::kLargeQ,
                                 const QuadratureSettings &settings = {});

/// (N_I + 1)(1 - epsilon) log2(1 + gamma)
double capacity_lower_bound(int n_interferers, double gamma, double epsilon);
double capacity_lower_bound(const FamaScenario &scenario, double epsilon);

/// n_users (1 - epsilon)
double multiplexing_gain(int n_users, double epsilon);

/// min{(N - 1)(1 - mu^2)(N_I + 1)/q, N_I + 1}
double mg_approx_equal_corr(int n_ports, double mu, double q, int n_interferers);

/// min{(N/2 - 1)(1 - J0^2(pi W))(N_I + 1)/q, N_I + 1}
double mg_approx_general(int n_ports, double width, double q, int n_interferers);

/// Capacity of N_I + 1 users at target gamma over two users at target N_I gamma:
/// ((N_I + 1)/2) / (1 + log_gamma N_I). Requires gamma > 1 and N_I >= 2.
double more_users_capacity_ratio(double gamma, int n_interferers);

} // namespace fama
