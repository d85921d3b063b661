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

// Special functions against independent oracles: Boost.Math implementations,
// direct series in long double, and adaptive quadrature of the defining
// integrals.

#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <doctest.h>

#include <boost/math/distributions/non_central_chi_squared.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

using namespace fama::specfun;

namespace {

// J0 power series in long double; accurate to ~1e-15 for |x| <= 6.
long double j0_series(long double x) {
    long double term = 1.0L;
    long double sum = 1.0L;
    const long double h = -0.25L * x * x;
    for (int m = 1; m < 80; ++m) {
        term *= h / (static_cast<long double>(m) * m);
        sum += term;
    }
    return sum;
}

double i0_series(double x) {
    double term = 1.0;
    double sum = 1.0;
    for (int m = 1; m < 200; ++m) {
        term *= (0.5 * x) * (0.5 * x) / (static_cast<double>(m) * m);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

double marcum_oracle(double a, double b) {
    if (b == 0.0) return 1.0;
    boost::math::non_central_chi_squared dist(2.0, a * a);
    return boost::math::cdf(boost::math::complement(dist, b * b));
}

} // namespace

TEST_CASE("J0 at the origin and its first zero") {
    CHECK(bessel_j0(0.0) == 1.0);
    // Bisect an independent series for the first zero.
    long double lo = 2.0L, hi = 3.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (j0_series(mid) > 0 ? lo : hi) = mid;
    }
    const double zero = static_cast<double>(lo);
    CHECK(zero == doctest::Approx(2.404826).epsilon(1e-6));
    CHECK(std::abs(bessel_j0(zero)) < 1e-15);
    CHECK(std::abs(bessel_j0(2.404826)) < 1e-6);
}

TEST_CASE("J0 squared at half pi is about 0.22") {
    const double j = bessel_j0(0.5 * std::numbers::pi);
    CHECK(j * j == doctest::Approx(0.22).epsilon(0.01 / 0.22));
}

TEST_CASE("J0 and J1 match Boost to 1e-12 relative on [0, 500]") {
    double worst_j0 = 0.0, worst_j1 = 0.0;
    for (double x = 0.0; x <= 500.0; x += 0.00937) {
        const double e0 = boost::math::cyl_bessel_j(0, x);
        const double e1 = boost::math::cyl_bessel_j(1, x);
        // Near zeros compare against the local scale of the oscillation.
        const double scale = std::max({std::abs(e0), std::abs(e1), 1e-300});
        worst_j0 = std::max(worst_j0, std::abs(bessel_j0(x) - e0) / scale);
        worst_j1 = std::max(worst_j1, std::abs(bessel_j1(x) - e1) / scale);
    }
    CHECK(worst_j0 < 1e-12);
    CHECK(worst_j1 < 1e-12);
}

TEST_CASE("J0 matches the series inside the series region and is bounded") {
    for (double x = 0.0; x <= 6.0; x += 0.01)
        CHECK(bessel_j0(x) == doctest::Approx(static_cast<double>(j0_series(x))).epsilon(1e-12));
    for (double x = 0.0; x <= 500.0; x += 0.05) CHECK(std::abs(bessel_j0(x)) <= 1.0);
    CHECK(bessel_j0(-3.7) == bessel_j0(3.7));
    // The branches meet smoothly around the split points.
    for (double x : {8.0, 20.0})
        for (double d = -0.01; d <= 0.01; d += 0.001)
            CHECK(bessel_j0(x + d) == doctest::Approx(boost::math::cyl_bessel_j(0, x + d)).epsilon(1e-12));
}

TEST_CASE("J0 rejects non-finite input") {
    CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(bessel_j0(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
}

TEST_CASE("scaled I0") {
    CHECK(bessel_i0_scaled(0.0) == 1.0);
    CHECK(bessel_i0_scaled(1.0) == doctest::Approx(std::exp(-1.0) * 1.266066).epsilon(1e-6));
    CHECK(bessel_i0_scaled(1.0) == doctest::Approx(std::exp(-1.0) * i0_series(1.0)).epsilon(1e-14));
    for (double x = 0.0; x <= 700.0; x += 0.0731) {
        const double expected = boost::math::cyl_bessel_i(0, x) * std::exp(-x);
        CHECK(bessel_i0_scaled(x) == doctest::Approx(expected).epsilon(1e-10));
    }
    // Far beyond the double range of I0 the scaled value still follows 1/sqrt(2 pi x).
    const double big = 1e6;
    CHECK(bessel_i0_scaled(big) == doctest::Approx(1.0 / std::sqrt(2.0 * std::numbers::pi * big)).epsilon(1e-6));
    CHECK_THROWS_AS(bessel_i0_scaled(-1.0), std::domain_error);
}

TEST_CASE("I0(x) >= e^x / (1 + 2x) on a dense grid") {
    for (double x = 0.0; x <= 100.0; x += 0.005) CHECK(bessel_i0_scaled(x) * (1.0 + 2.0 * x) >= 1.0 - 1e-15);
}

TEST_CASE("scaled I_k sequence matches Boost") {
    std::vector<double> seq(40);
    for (double x : {0.1, 1.0, 7.5, 30.0, 250.0}) {
        bessel_i_scaled_sequence(x, seq);
        for (int k = 0; k < 40; ++k) {
            const double expected = boost::math::cyl_bessel_i(k, x) * std::exp(-x);
            if (expected < 1e-280) continue;
            CHECK(seq[k] == doctest::Approx(expected).epsilon(1e-12));
        }
    }
}

TEST_CASE("Marcum Q1 special values") {
    for (double a : {0.0, 0.3, 2.0, 17.0}) CHECK(marcum_q1(a, 0.0) == 1.0);
    for (double b : {0.1, 1.0, 3.0, 9.0})
        CHECK(marcum_q1(0.0, b) == doctest::Approx(std::exp(-0.5 * b * b)).epsilon(1e-13));
    // Defining integral: int_b^inf x exp(-(x^2 + a^2)/2) I0(a x) dx.
    const double a = 1.0, b = 1.0;
    // The Gaussian factor is below e^{-400} past x = b + 30.
    const double quad = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double x) {
            return x * std::exp(-0.5 * (x - a) * (x - a)) * boost::math::cyl_bessel_i(0, a * x) * std::exp(-a * x);
        },
        b, b + 30.0, 10, 1e-13);
    CHECK(std::abs(marcum_q1(a, b) - quad) < 1e-8);
}

TEST_CASE("Marcum Q1 matches the noncentral chi-square tail to 1e-10") {
    double worst = 0.0;
    for (double a = 0.0; a <= 40.0; a += 0.53)
        for (double b = 0.0; b <= 40.0; b += 0.47)
            worst = std::max(worst, std::abs(marcum_q1(a, b) - marcum_oracle(a, b)));
    CHECK(worst < 1e-10);
    CHECK(marcum_q1(300.0, 300.0) == doctest::Approx(0.5).epsilon(1e-2));
    CHECK_THROWS_AS(marcum_q1(-1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(marcum_q1(1.0, -1.0), std::domain_error);
}

TEST_CASE("Marcum Q1 monotonicity on a 50 x 50 grid") {
    for (int i = 0; i < 50; ++i)
        for (int j = 0; j < 49; ++j) {
            const double a = 0.12 * i, b = 0.12 * j;
            CHECK(marcum_q1(a, b + 0.12) <= marcum_q1(a, b) + 1e-15);
            CHECK(marcum_q1(b + 0.12, a) >= marcum_q1(b, a) - 1e-15);
        }
}

TEST_CASE("Marcum Q1 lower bound exp(-(a^2+b^2)/2) I0(ab)") {
    for (double a = 0.0; a <= 5.0; a += 0.05)
        for (double b = 0.0; b <= 5.0; b += 0.05) {
            const double bound = std::exp(-0.5 * (a - b) * (a - b)) * bessel_i0_scaled(a * b);
            CHECK(marcum_q1(a, b) >= bound - 1e-15);
        }
}

TEST_CASE("exponential integrals") {
    CHECK(expint_en(0, 2.0) == doctest::Approx(std::exp(-2.0) / 2.0).epsilon(1e-15));
    CHECK(expint_en(1, 1.0) == doctest::Approx(0.219384).epsilon(1e-6 / 0.219384));
    boost::math::quadrature::exp_sinh<double> integrator;
    const double quad = integrator.integrate([](double t) { return std::exp(-(1.0 + t)) / (1.0 + t); });
    CHECK(expint_en(1, 1.0) == doctest::Approx(quad).epsilon(1e-12));

    for (int k : {0, 1, 2, 3, 7, 16, 64, 128, 512})
        for (double x = 0.01; x <= 300.0; x *= 1.37) {
            const double expected = boost::math::expint(k, x);
            if (expected < 1e-290) continue;
            CHECK(expint_en(k, x) == doctest::Approx(expected).epsilon(1e-10));
            CHECK(expint_en_scaled(k, x) == doctest::Approx(expected * std::exp(x)).epsilon(1e-10));
        }
    // Scaled form stays finite where E_k underflows.
    CHECK(expint_en_scaled(3, 1000.0) == doctest::Approx(1.0 / 1003.0).epsilon(1e-5));
    CHECK_THROWS_AS(expint_en(1, 0.0), std::domain_error);
    CHECK_THROWS_AS(expint_en(1, -2.0), std::domain_error);
}

TEST_CASE("exponential integral recurrence k E_{k+1} + x E_k = e^{-x}") {
    for (int k = 0; k < 64; ++k)
        for (double x = 0.05; x <= 50.0; x *= 1.5) {
            const double residual = k * expint_en(k + 1, x) + x * expint_en(k, x) - std::exp(-x);
            CHECK(std::abs(residual) <= 1e-9 * std::max(1.0, std::exp(-x)));
        }
}

TEST_CASE("power-ratio integral identity for k <= 8") {
    boost::math::quadrature::tanh_sinh<double> integrator;
    for (int k = 1; k <= 8; ++k)
        for (double a : {0.5, 1.0, 2.0})
            for (double b : {0.5, 1.0, 2.0}) {
                const double upper = 60.0 / (a * k);
                const double quad = integrator.integrate(
                    [&](double x) { return std::pow(std::exp(-a * x) / (1.0 + b * x), k); }, 0.0, upper);
                CHECK(std::abs(expint_en_scaled(k, k * a / b) / b - quad) < 1e-8);
            }
}

TEST_CASE("envelope table structure") {
    const auto &table = EnvelopeTable::instance();
    const auto ext = table.extrema();
    REQUIRE(ext.size() > 100);
    CHECK(ext[0].abscissa == 0.0);
    CHECK(ext[0].peak == 1.0);
    for (std::size_t i = 1; i < ext.size(); ++i) {
        CHECK(ext[i].abscissa > ext[i - 1].abscissa);
        CHECK(ext[i].peak < ext[i - 1].peak);
        // Extrema of J0 are zeros of J1.
        CHECK(std::abs(boost::math::cyl_bessel_j(1, ext[i].abscissa)) < 1e-9);
    }
    const auto zeros = table.zeros();
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        CHECK(zeros[i] == doctest::Approx(boost::math::cyl_bessel_j_zero(0.0, static_cast<int>(i) + 1)).epsilon(1e-13));
        // Sign changes bracket each zero.
        CHECK(bessel_j0(zeros[i] - 1e-6) * bessel_j0(zeros[i] + 1e-6) < 0.0);
    }
    CHECK(table.cap() >= 500.0);
}

TEST_CASE("envelope inverse against a dense grid scan") {
    CHECK(j0_envelope_inverse(1.0) == 0.0);
    for (double mu : {0.9, 0.45, 0.4, 0.3, 0.2, 0.12, 0.05}) {
        // Oracle: last grid point (step 1e-4) where |J0| exceeds mu.
        const double limit = 2.0 / (std::numbers::pi * mu * mu) + 10.0; // |J0| < mu beyond this
        double last = 0.0;
        for (double x = 0.0; x <= limit; x += 1e-4)
            if (std::abs(boost::math::cyl_bessel_j(0, x)) > mu) last = x;
        const double rho = j0_envelope_inverse(mu);
        CHECK(rho >= last);
        CHECK(rho <= last + 1e-4);
        CHECK(std::abs(bessel_j0(rho)) == doctest::Approx(mu).epsilon(1e-6));
    }
    // 0.45 lies below 1 and above the first trough |J0(3.8317)| = 0.4028, so the
    // answer is on the main lobe.
    const double rho = j0_envelope_inverse(0.45);
    CHECK(rho > 1.0);
    CHECK(rho < 2.405);
    // 0.4 is below that trough, pushing the answer past the first zero.
    CHECK(j0_envelope_inverse(0.4) > 3.8317);
}

TEST_CASE("envelope inverse is antitone and reports the cap") {
    double previous = 0.0;
    for (double mu = 1.0; mu >= 0.04; mu -= 0.01) {
        const double rho = j0_envelope_inverse(mu);
        CHECK(rho >= previous);
        previous = rho;
    }
    try {
        (void)j0_envelope_inverse(0.001);
        FAIL("expected a resolution error");
    } catch (const fama::ResolutionError &e) {
        CHECK(e.cap() >= 500.0);
        CHECK(std::string(e.what()).find("500") != std::string::npos);
    }
    CHECK_THROWS_AS(j0_envelope_inverse(0.0), std::domain_error);
    CHECK_THROWS_AS(j0_envelope_inverse(1.5), std::domain_error);
}
