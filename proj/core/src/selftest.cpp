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

#include "fama/selftest.hpp"

#include "fama/analytic.hpp"
#include "fama/channel.hpp"
#include "fama/quadrature.hpp"
#include "fama/specfun.hpp"
#include "fama/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace fama {

bool SelftestReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const SelftestCheck &c) { return c.passed; });
}

namespace identities {

double rician_marcum_closed(double a, double b, double c) {
    const double s2 = a * a + 1.0;
    const double s = std::sqrt(s2);
    const double first = std::exp(0.5 * c * c) * specfun::marcum_q1(b / s, a * c / s);
    const double x = a * b * c / s2;
    // e^{(c^2 - b^2)/(2 s^2)} I0(x) with I0 carried in scaled form.
    const double second = (a * a / s2) * std::exp((c * c - b * b) / (2.0 * s2) + x) * specfun::bessel_i0_scaled(x);
    return first - second;
}

double rician_marcum_quadrature(double a, double b, double c, double tolerance) {
    // x e^{-x^2/2} I0(cx) = x e^{-(x - c)^2/2} e^{c^2/2} e^{-cx} I0(cx); the
    // Gaussian factor is negligible beyond c + 14.
    auto f = [&](double x) {
        return x * std::exp(-0.5 * (x - c) * (x - c) + 0.5 * c * c) * specfun::bessel_i0_scaled(c * x) *
               specfun::marcum_q1(b, a * x);
    };
    return quadrature::integrate(f, 0.0, c + 14.0, 10, tolerance).value;
}

double power_ratio_integral(int k, double a, double b, double tolerance) {
    auto f = [&](double x) { return std::pow(std::exp(-a * x) / (1.0 + b * x), k); };
    // The integrand is below e^{-45} past this point.
    const double upper = 45.0 / (a * k);
    return quadrature::integrate(f, 0.0, upper, 10, tolerance).value;
}

double power_ratio_closed(int k, double a, double b) { return specfun::expint_en_scaled(k, k * a / b) / b; }

double marcum_lower_bound_margin(double upper, double step) {
    double worst = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(std::lround(upper / step));
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            const double alpha = i * step;
            const double beta = j * step;
            const double d = alpha - beta;
            const double bound = std::exp(-0.5 * d * d) * specfun::bessel_i0_scaled(alpha * beta);
            worst = std::min(worst, specfun::marcum_q1(alpha, beta) - bound);
        }
    }
    return worst;
}

double i0_lower_bound_margin(double upper, double step) {
    double worst = std::numeric_limits<double>::infinity();
    const int n = static_cast<int>(std::lround(upper / step));
    for (int i = 0; i <= n; ++i) {
        const double x = i * step;
        worst = std::min(worst, specfun::bessel_i0_scaled(x) * (1.0 + 2.0 * x) - 1.0);
    }
    return worst;
}

} // namespace identities

namespace {

std::string describe(double worst, double tol) {
    std::ostringstream os;
    os.precision(3);
    os << "worst " << worst << " (limit " << tol << ")";
    return os.str();
}

SelftestCheck max_error_check(std::string name, double worst, double tol) {
    SelftestCheck c{std::move(name), worst <= tol, worst, tol, describe(worst, tol)};
    return c;
}

SelftestCheck margin_check(std::string name, double margin, double slack) {
    SelftestCheck c{std::move(name), margin >= -slack, margin, -slack, ""};
    std::ostringstream os;
    os.precision(3);
    os << "smallest margin " << margin;
    c.detail = os.str();
    return c;
}

} // namespace

SelftestReport run_selftest(unsigned threads) {
    SelftestReport report;

    {
        const double grid[] = {0.2, 1.6, 3.0};
        double worst = 0.0;
        for (double a : grid)
            for (double b : grid)
                for (double c : grid)
                    worst = std::max(worst, std::abs(identities::rician_marcum_closed(a, b, c) -
                                                     identities::rician_marcum_quadrature(a, b, c)));
        report.checks.push_back(max_error_check("rician-marcum identity (27 points)", worst, 1e-7));
    }

    report.checks.push_back(
        margin_check("marcum Q1 lower bound", identities::marcum_lower_bound_margin(5.0, 0.05), 1e-15));
    report.checks.push_back(margin_check("I0(x) >= e^x/(1+2x)", identities::i0_lower_bound_margin(50.0, 0.01), 1e-14));

    {
        double worst = 0.0;
        for (int k = 1; k <= 8; ++k)
            for (double a : {0.5, 1.0, 2.0})
                for (double b : {0.5, 1.0, 2.0}) {
                    const double closed = identities::power_ratio_closed(k, a, b);
                    const double quad = identities::power_ratio_integral(k, a, b);
                    worst = std::max(worst, std::abs(closed - quad));
                }
        report.checks.push_back(max_error_check("exponential-integral identity k<=8", worst, 1e-8));
    }

    {
        double worst = 0.0;
        for (double q : {0.1, 1.0, 10.0}) {
            const double target = q / (1.0 + q);
            const std::span<const double> none;
            worst = std::max(worst, std::abs(outage_exact(none, q).probability - target));
            worst = std::max(worst, std::abs(outage_ub_integral(none, q).probability - target));
        }
        report.checks.push_back(max_error_check("single port outage q/(1+q)", worst, 1e-8));
    }

    {
        double worst = 0.0;
        for (int n : {2, 3, 5})
            for (double q : {1.0, 10.0}) {
                const std::vector<double> mu(static_cast<std::size_t>(n - 1), 0.0);
                worst = std::max(worst, std::abs(outage_exact(mu, q).probability - std::pow(q / (1.0 + q), n)));
            }
        report.checks.push_back(max_error_check("independent ports (q/(1+q))^N", worst, 1e-8));
    }

    {
        double worst = -1.0;
        for (int n : {2, 3, 5})
            for (double w : {0.3, 2.7})
                for (double q : {1.0, 200.0}) {
                    const PortGeometry g = make_geometry(n, w);
                    const double exact = outage_exact(g.mu, q).probability;
                    const double bound = outage_ub_integral(g.mu, q).probability;
                    worst = std::max(worst, exact - bound);
                }
        SelftestCheck c = margin_check("exact <= integral bound", -worst, 1e-9);
        c.detail = "largest exact - bound " + describe(worst, 1e-9);
        report.checks.push_back(c);
    }

    {
        double worst = 0.0;
        for (double mu : {0.9, 0.5, 0.3, 0.1, 0.05}) {
            const double rho = specfun::j0_envelope_inverse(mu);
            worst = std::max(worst, std::abs(std::abs(specfun::bessel_j0(rho)) - mu));
        }
        report.checks.push_back(max_error_check("envelope inverse |J0(rho*)| = mu*", worst, 1e-10));
    }

    {
        SweepSpec spec;
        spec.kind = SweepKind::kOutage;
        spec.axis = SweepAxis::kPorts;
        spec.axis_values = {2, 3, 5, 8};
        spec.width = 1.0;
        spec.n_interferers = 3;
        spec.gamma_db = 3.0;
        spec.methods = {SweepMethod::kMonteCarlo, SweepMethod::kBoundI};
        spec.trials = 200000;
        spec.seed = 20260;
        auto csv = [&](unsigned t) {
            spec.threads = t;
            std::ostringstream os;
            write_csv(os, run_sweep(spec));
            return os.str();
        };
        const std::string one = csv(1);
        const std::string many = csv(std::max(2u, threads));
        const std::string again = csv(1);
        SelftestCheck c{"sweep determinism across thread counts", one == many && one == again, 0.0, 0.0,
                        one == many && one == again ? "identical bytes" : "CSV differs"};
        report.checks.push_back(c);
    }

    return report;
}

} // namespace fama
