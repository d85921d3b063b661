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
#include "fama/errors.hpp"
#include "fama/quadrature.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fama {

namespace {

void require_positive_q(double q, const char *fn) {
    if (!(q > 0.0) || !std::isfinite(q))
        throw std::invalid_argument(std::string(fn) + ": q = sigma_i^2 gamma / sigma^2 must be finite and > 0");
}

// r_k = mu_k^2 / (1 - mu_k^2) for every port k >= 2.
std::vector<double> correlation_ratios(std::span<const double> mu, const char *fn) {
    std::vector<double> r;
    r.reserve(mu.size());
    for (double m : mu) {
        const double m2 = m * m;
        if (!(m2 < 1.0)) {
            std::ostringstream msg;
            msg << fn << ": |mu_k| = " << std::fabs(m) << " makes 1 - mu_k^2 vanish (singular correlation)";
            throw SingularCorrelationError(msg.str());
        }
        r.push_back(m2 / (1.0 - m2));
    }
    return r;
}

// Integrals over z in [0, inf) are taken in u = 1 - e^{-z}, which absorbs the
// e^{-z} weight: \int_0^inf e^{-z} f(z) dz = \int_0^1 f(-log(1 - u)) du.
double z_of_u(double u) { return -std::log1p(-u); }

double u_limit(const QuadratureSettings &settings) { return -std::expm1(-settings.tail_cutoff); }

} // namespace

void QuadratureSettings::validate() const {
    if (outer_nodes < 8 || inner_nodes < 8) throw std::invalid_argument("QuadratureSettings: node counts must be >= 8");
    if (!(tolerance > 0.0)) throw std::invalid_argument("QuadratureSettings: tolerance must be > 0");
    if (!(tail_cutoff > 0.0)) throw std::invalid_argument("QuadratureSettings: tail_cutoff must be > 0");
    if (exact_cap < 1) throw std::invalid_argument("QuadratureSettings: exact_cap must be >= 1");
}

double exact_port_factor(double q, double r, double z, double t) {
    const double share = q / (q + 1.0);
    if (r == 0.0) return share;
    const double c = r / (q + 1.0);
    const double qz = q * z;
    const double gap = std::sqrt(qz) - std::sqrt(t);
    const double cross = share * std::exp(-c * gap * gap) * specfun::bessel_i0_scaled(2.0 * c * std::sqrt(qz * t));
    const double tail = specfun::marcum_q1(std::sqrt(2.0 * c * t), std::sqrt(2.0 * c * qz));
    return std::clamp(1.0 - tail + cross, 0.0, 1.0);
}

OutageEstimate outage_exact(std::span<const double> mu, double q, const QuadratureSettings &settings) {
    settings.validate();
    require_positive_q(q, "outage_exact");
    const int n_ports = static_cast<int>(mu.size()) + 1;
    if (n_ports > settings.exact_cap) {
        std::ostringstream msg;
        msg << "outage_exact: N = " << n_ports << " exceeds the exact evaluator cap of " << settings.exact_cap
            << " ports; use bound-I or Monte Carlo";
        throw CapExceededError(msg.str(), settings.exact_cap);
    }
    const std::vector<double> r = correlation_ratios(mu, "outage_exact");

    const double outer_tol = 0.5 * settings.tolerance;
    const double inner_tol = 0.25 * settings.tolerance;
    double inner_error = 0.0;
    bool converged = true;

    // z = |g_1^I|^2 / sigma_i^2 and t = |g_1|^2 / sigma^2 are unit exponentials;
    // port 1 is in outage iff t <= q z. The t-integral is mapped to v in [0, 1]
    // by t = -log(1 - v (1 - e^{-qz})).
    auto outer = [&](double u) {
        const double z = z_of_u(u);
        const double span = -std::expm1(-q * z);
        if (span == 0.0) return 0.0;
        if (r.empty()) return span;
        auto inner = [&](double v) {
            // 1 - v (1 - e^{-qz}) = (1 - v) + v e^{-qz}; the second form keeps
            // t finite when e^{-qz} is below the double spacing at 1.
            const double x = v * span;
            const double t = x < 0.5 ? -std::log1p(-x) : -std::log((1.0 - v) + v * std::exp(-q * z));
            double product = 1.0;
            for (double rk : r) {
                product *= exact_port_factor(q, rk, z, t);
                if (product == 0.0) break;
            }
            return product;
        };
        const auto res = quadrature::integrate(inner, 0.0, 1.0, settings.inner_nodes, inner_tol);
        inner_error = std::max(inner_error, res.error_estimate);
        converged = converged && res.converged;
        return span * res.value;
    };

    const auto res = quadrature::integrate(outer, 0.0, u_limit(settings), settings.outer_nodes, outer_tol);
    OutageEstimate est;
    est.method = Method::kExact;
    est.probability = std::clamp(res.value, 0.0, 1.0);
    est.error_estimate = res.error_estimate + inner_error + std::exp(-settings.tail_cutoff);
    if (!(converged && res.converged)) est.error_estimate = std::max(est.error_estimate, settings.tolerance * 10.0);
    return est;
}

OutageEstimate outage_exact(const FamaScenario &scenario, const QuadratureSettings &settings) {
    scenario.validate();
    return outage_exact(scenario.geometry.mu, scenario.q(), settings);
}

OutageEstimate outage_ub_integral(std::span<const double> mu, double q, const QuadratureSettings &settings) {
    settings.validate();
    require_positive_q(q, "outage_ub_integral");
    const std::vector<double> r = correlation_ratios(mu, "outage_ub_integral");
    std::vector<double> a(r.size());
    std::transform(r.begin(), r.end(), a.begin(), [q](double rk) { return rk * q / (q + 1.0); });
    const double share = 1.0 / (q + 1.0);

    auto integrand = [&](double u) {
        const double z = z_of_u(u);
        double product = -std::expm1(-q * z);
        for (double ak : a) {
            product *= 1.0 - share * std::exp(-ak * z) / (1.0 + 4.0 * ak * z);
            if (product == 0.0) break;
        }
        return product;
    };
    const auto res = quadrature::integrate(integrand, 0.0, u_limit(settings), settings.outer_nodes, settings.tolerance);
    OutageEstimate est;
    est.method = Method::kBoundI;
    est.probability = std::clamp(res.value, 0.0, 1.0);
    est.error_estimate = res.error_estimate + std::exp(-settings.tail_cutoff);
    return est;
}

OutageEstimate outage_ub_integral(const FamaScenario &scenario, const QuadratureSettings &settings) {
    scenario.validate();
    return outage_ub_integral(scenario.geometry.mu, scenario.q(), settings);
}

double outage_ub_integral_equal(int n_ports, double mu, double q, const QuadratureSettings &settings) {
    settings.validate();
    require_positive_q(q, "outage_ub_integral_equal");
    if (n_ports < 1) throw std::invalid_argument("outage_ub_integral_equal: n_ports must be >= 1");
    const double single[] = {mu};
    const double r = correlation_ratios(single, "outage_ub_integral_equal").front();
    const double a = r * q / (q + 1.0);
    const double share = 1.0 / (q + 1.0);
    const double power = n_ports - 1.0;

    auto integrand = [&](double u) {
        const double z = z_of_u(u);
        const double factor = 1.0 - share * std::exp(-a * z) / (1.0 + 4.0 * a * z);
        return -std::expm1(-q * z) * std::pow(factor, power);
    };
    return std::clamp(
        quadrature::integrate(integrand, 0.0, u_limit(settings), settings.outer_nodes, settings.tolerance).value, 0.0,
        1.0);
}

namespace {

// Parameters of the equal-correlation integral
//   \int_0^inf e^{-z} [1 - e^{-A z} / (base (1 + 4 A z))]^{N-1} dz
// whose binomial expansion is the closed-form bound.
struct ClosedFormShape {
    double decay; // A
    double base;  // q or q + 1
};

ClosedFormShape closed_form_shape(double mu, double q, ClosedFormVariant variant) {
    const double r = mu * mu / (1.0 - mu * mu);
    if (variant == ClosedFormVariant::kLargeQ) return {r, q};
    return {r * q / (q + 1.0), q + 1.0};
}

void validate_closed_form_args(int n_ports, double mu, double q, const char *fn) {
    if (n_ports < 1) throw std::invalid_argument(std::string(fn) + ": n_ports must be >= 1");
    if (!(mu >= 0.0) || !(mu < 1.0)) throw std::invalid_argument(std::string(fn) + ": mu must lie in [0, 1)");
    require_positive_q(q, fn);
}

} // namespace

ClosedFormBound outage_ub_closed(int n_ports, double mu, double q, ClosedFormVariant variant, double max_lost_digits) {
    validate_closed_form_args(n_ports, mu, q, "outage_ub_closed");
    ClosedFormBound out;
    if (mu == 0.0) {
        out.degenerate_mu = true;
        out.raw = out.value = std::pow(q / (1.0 + q), n_ports);
        return out;
    }

    const ClosedFormShape shape = closed_form_shape(mu, q, variant);
    // beta = 1 / (4A); term k = C(N-1, k) (-1)^k base^{-k} beta e^{x_k} E_k(x_k),
    // x_k = k/4 + beta, each magnitude formed in log space.
    const double beta = 1.0 / (4.0 * shape.decay);
    const double log_beta = std::log(beta);
    const double log_base = std::log(shape.base);
    const double lg_n = std::lgamma(static_cast<double>(n_ports));

    long double sum = 0.0L;
    long double carry = 0.0L;
    long double magnitude = 0.0L;
    for (int k = 0; k < n_ports; ++k) {
        const double log_binom = lg_n - std::lgamma(k + 1.0) - std::lgamma(static_cast<double>(n_ports - k));
        const double scaled_e = specfun::expint_en_scaled(k, 0.25 * k + beta);
        const double log_term = log_binom - k * log_base + log_beta + std::log(scaled_e);
        const long double term = std::exp(static_cast<long double>(log_term));
        magnitude += term;
        // Kahan-compensated accumulation of the signed terms
        const long double y = (k % 2 == 0 ? term : -term) - carry;
        const long double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }

    out.raw = static_cast<double>(sum);
    out.lost_digits = sum == 0.0L ? std::numeric_limits<double>::infinity()
                                  : static_cast<double>(std::log10(magnitude / std::fabs(sum)));
    if (out.lost_digits > max_lost_digits) {
        std::ostringstream msg;
        msg << "outage_ub_closed: alternating sum at N = " << n_ports << " lost " << out.lost_digits
            << " decimal digits to cancellation (limit " << max_lost_digits << "); evaluate the integral bound instead";
        throw PrecisionError(msg.str(), out.lost_digits);
    }
    out.value = std::clamp(out.raw, 0.0, 1.0);
    out.clamped = out.value != out.raw;
    return out;
}

double outage_ub_closed_integral(int n_ports, double mu, double q, ClosedFormVariant variant,
                                 const QuadratureSettings &settings) {
    validate_closed_form_args(n_ports, mu, q, "outage_ub_closed_integral");
    settings.validate();
    const ClosedFormShape shape = closed_form_shape(mu, q, variant);
    const double power = n_ports - 1.0;
    auto integrand = [&](double u) {
        const double z = z_of_u(u);
        const double factor = 1.0 - std::exp(-shape.decay * z) / (shape.base * (1.0 + 4.0 * shape.decay * z));
        return std::pow(factor, power);
    };
    return quadrature::integrate(integrand, 0.0, u_limit(settings), settings.outer_nodes, settings.tolerance).value;
}

double capacity_lower_bound(int n_interferers, double gamma, double epsilon) {
    if (n_interferers < 0) throw std::invalid_argument("capacity_lower_bound: n_interferers must be >= 0");
    if (!(gamma > 0.0)) throw std::invalid_argument("capacity_lower_bound: gamma must be > 0");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("capacity_lower_bound: epsilon must lie in [0, 1]");
    return (n_interferers + 1.0) * (1.0 - epsilon) * std::log2(1.0 + gamma);
}

double capacity_lower_bound(const FamaScenario &scenario, double epsilon) {
    return capacity_lower_bound(scenario.n_interferers, scenario.gamma, epsilon);
}

double multiplexing_gain(int n_users, double epsilon) {
    if (n_users < 1) throw std::invalid_argument("multiplexing_gain: n_users must be >= 1");
    if (!(epsilon >= 0.0 && epsilon <= 1.0))
        throw std::invalid_argument("multiplexing_gain: epsilon must lie in [0, 1]");
    return n_users * (1.0 - epsilon);
}

double mg_approx_equal_corr(int n_ports, double mu, double q, int n_interferers) {
    if (n_ports < 2) throw std::invalid_argument("mg_approx_equal_corr: n_ports must be >= 2");
    require_positive_q(q, "mg_approx_equal_corr");
    const double users = n_interferers + 1.0;
    return std::min((n_ports - 1.0) * (1.0 - mu * mu) * users / q, users);
}

double mg_approx_general(int n_ports, double width, double q, int n_interferers) {
    if (n_ports < 3) throw std::invalid_argument("mg_approx_general: n_ports must be >= 3");
    require_positive_q(q, "mg_approx_general");
    const double users = n_interferers + 1.0;
    const double j = specfun::bessel_j0(std::numbers::pi * width);
    return std::min((0.5 * n_ports - 1.0) * (1.0 - j * j) * users / q, users);
}

double more_users_capacity_ratio(double gamma, int n_interferers) {
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw std::domain_error("more_users_capacity_ratio: gamma must exceed 1 (logarithm base)");
    if (n_interferers < 2) throw std::invalid_argument("more_users_capacity_ratio: n_interferers must be >= 2");
    const double log_ratio = std::log(static_cast<double>(n_interferers)) / std::log(gamma);
    return 0.5 * (n_interferers + 1.0) / (1.0 + log_ratio);
}

} // namespace fama
