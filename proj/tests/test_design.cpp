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
#include "fama/design.hpp"
#include "fama/specfun.hpp"

#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace fama;

namespace {

DesignTarget identical(double m, double gamma, int n_interferers) {
    DesignTarget t;
    t.mult_gain = m;
    t.gamma = gamma;
    t.n_interferers = n_interferers;
    return t;
}

// Width whose J0(pi W) is the first zero of J0.
const double kFirstZeroWidth = boost::math::cyl_bessel_j_zero(0.0, 1) / std::numbers::pi;

} // namespace

TEST_CASE("target validation") {
    CHECK_NOTHROW(identical(2.0, 10.0, 5).validate());
    CHECK_THROWS_AS(identical(7.0, 10.0, 5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(identical(0.0, 10.0, 5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(identical(1.0, -1.0, 5).validate(), std::invalid_argument);
    CHECK_THROWS_AS(identical(1.0, 10.0, 0).validate(), std::invalid_argument);
    DesignTarget t = identical(2.0, 10.0, 5);
    CHECK(t.q() == 50.0);
    t.q_override = 12.0;
    CHECK(t.q() == 12.0);
}

TEST_CASE("general port requirement") {
    const DesignTarget t = identical(2.0, 10.0, 1000);
    t.validate();
    // q/(N_I + 1) -> gamma for large N_I; formula gives 2 m gamma + 2.
    const auto r = min_ports_general(t, kFirstZeroWidth);
    REQUIRE(r.feasible());
    CHECK(*r.value == 42);

    // J0^2(pi/2) ~ 0.22 with q/(N_I + 1) = gamma exactly.
    DesignTarget exact_ratio = t;
    exact_ratio.q_override = 10.0 * 1001.0;
    const double j = boost::math::cyl_bessel_j(0, 0.5 * std::numbers::pi);
    const auto half = min_ports_general(exact_ratio, 0.5);
    REQUIRE(half.feasible());
    CHECK(*half.value == static_cast<int>(2.0 * std::ceil(20.0 / (1.0 - j * j) + 1.0)));
    CHECK(*half.value == 54);

    CHECK_FALSE(min_ports_general(t, 0.0).feasible());
    CHECK(min_ports_general(t, 0.0).note.find("width") != std::string::npos);
}

TEST_CASE("general port requirement scales inversely with decorrelation") {
    DesignTarget t = identical(2.0, 10.0, 1000);
    t.q_override = 10.0 * 1001.0;
    // Widths where 1 - J0^2 halves.
    const double w1 = kFirstZeroWidth;      // 1 - J0^2 = 1
    const double j_target = std::sqrt(0.5); // 1 - J0^2 = 0.5
    double lo = 0.0, hi = kFirstZeroWidth;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (specfun::bessel_j0(std::numbers::pi * mid) > j_target ? lo : hi) = mid;
    }
    const int n1 = *min_ports_general(t, w1).value;
    const int n2 = *min_ports_general(t, hi).value;
    CHECK(static_cast<double>(n2 - 2) / (n1 - 2) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("general port requirement is monotone over a grid") {
    for (double m : {0.5, 1.0, 2.0, 4.0})
        for (double gamma : {1.0, 3.0, 10.0}) {
            int previous = 1 << 30;
            const DesignTarget t = identical(m, gamma, 5);
            // Width enters through 1 - J0^2(pi W), which increases along the
            // first lobe of J0.
            for (double w : {0.1, 0.2, 0.3, 0.5, 0.7}) {
                const int n = *min_ports_general(t, w).value;
                CHECK(n <= previous);
                previous = n;
            }
            CHECK(*min_ports_general(identical(m * 1.2, gamma, 5), 0.4).value >= *min_ports_general(t, 0.4).value);
            CHECK(*min_ports_general(identical(m, gamma * 1.5, 5), 0.4).value >= *min_ports_general(t, 0.4).value);
        }
}

TEST_CASE("equal-correlation port search") {
    // Oracle: smallest N for which the closed-form bound meets the budget,
    // by linear scan.
    const DesignTarget t = identical(2.0, 10.0, 100);
    const double budget = t.outage_budget();
    for (double mu : {0.05, 0.3, 0.6}) {
        const auto r = min_ports_equal_corr(t, mu);
        REQUIRE(r.feasible());
        int scan = 2;
        while (outage_ub_closed(scan, mu, t.q()).value > budget) ++scan;
        CHECK(*r.value == scan);
    }
    // Large-q estimate m gamma / (1 - mu^2) + 1 = 21 for small mu; the search
    // lands within a factor of about 2.2.
    const int n = *min_ports_equal_corr(t, 0.05).value;
    CHECK(n >= 21.0 / 2.2);
    CHECK(n <= 21.0 * 2.2);
}

TEST_CASE("equal-correlation search reduces to the independent-port count for small mu") {
    // With N_I large and mu -> 0 each extra port multiplies the bound by
    // about 1 - 1/q; compare with the independent-port requirement.
    const DesignTarget t = identical(2.0, 10.0, 1000);
    const double budget = t.outage_budget();
    const double q = t.q();
    const int independent = static_cast<int>(std::ceil(std::log(budget) / std::log(q / (1.0 + q))));
    const int found = *min_ports_equal_corr(t, 1e-3).value;
    CHECK(std::abs(found - independent) <= 0.02 * independent + 2);
}

TEST_CASE("equal-correlation search is monotone in mu") {
    const DesignTarget t = identical(1.5, 5.0, 20);
    int previous = 0;
    for (double mu = 0.05; mu < 0.95; mu += 0.05) {
        const int n = *min_ports_equal_corr(t, mu).value;
        CHECK(n >= previous);
        previous = n;
    }
}

TEST_CASE("equal-correlation search falls back to the integral when the sum cancels") {
    // Needs several hundred ports, where the alternating sum loses too many digits.
    const DesignTarget t = identical(5.5, 10.0, 5);
    const auto r = min_ports_equal_corr(t, 0.5);
    REQUIRE(r.feasible());
    CHECK(r.note.find("integral") != std::string::npos);
    // Cross-check the returned N against the integral bound itself.
    CHECK(outage_ub_integral_equal(*r.value, 0.5, t.q()) <= t.outage_budget() + 1e-6);
}

TEST_CASE("equal-correlation search reports infeasibility with the closest gain") {
    const DesignTarget t = identical(3.0, 10.0, 2);
    const auto r = min_ports_equal_corr(t, 0.5, {}, 8);
    CHECK_FALSE(r.feasible());
    CHECK(r.closest_gain > 0.0);
    CHECK(r.closest_gain < 3.0);
    CHECK_THROWS_AS(min_ports_equal_corr(t, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(min_ports_equal_corr(t, 1.0), std::invalid_argument);
}

TEST_CASE("critical correlation") {
    // m q = (N_I + 1)(N - 1): approximate form is exactly zero.
    DesignTarget boundary = identical(2.0, 10.0, 9);
    boundary.q_override = 10.0 * 10.0 / 2.0 * 2.0; // m q = 200 = 10 * 20
    const auto b = critical_mu(boundary, 21);
    REQUIRE(b.approx.feasible());
    CHECK(*b.approx.value == doctest::Approx(0.0));

    const auto tiny = critical_mu(identical(1e-9, 10.0, 9), 50);
    CHECK(*tiny.approx.value == doctest::Approx(1.0));

    const auto example = critical_mu(identical(2.0, 10.0, 9), 201);
    CHECK(*example.approx.value == doctest::Approx(std::sqrt(0.91)).epsilon(1e-12));
    CHECK(*example.approx.value == doctest::Approx(0.9539).epsilon(1e-4));

    // Too few ports.
    const auto small = critical_mu(identical(2.0, 10.0, 9), 5);
    CHECK_FALSE(small.approx.feasible());
    CHECK(small.approx.note.find("N too small") != std::string::npos);
    CHECK_THROWS_AS(critical_mu(identical(2.0, 10.0, 9), 1), std::invalid_argument);
}

TEST_CASE("critical correlation exact form equals the alternating sums") {
    // Term-by-term sums in long double as the oracle.
    const DesignTarget t = identical(2.0, 10.0, 9);
    const int n = 60;
    const long double q = t.q();
    long double s1 = 0.0L, s2 = 0.0L, binom = 1.0L;
    for (int k = 1; k <= n - 1; ++k) {
        binom = binom * (n - k) / k;
        const long double term = binom * std::pow(-1.0L, k + 1) / std::pow(q, static_cast<long double>(k));
        s1 += term;
        s2 += k * term;
    }
    const double oracle = std::sqrt(static_cast<double>((s1 - 2.0L / 10.0L) / s2));
    const auto r = critical_mu(t, n);
    REQUIRE(r.exact.feasible());
    CHECK(*r.exact.value == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("approximate critical correlation inverts the gain approximation") {
    const DesignTarget t = identical(2.0, 10.0, 9);
    for (int n : {21, 201, 2001}) {
        const auto r = critical_mu(t, n);
        REQUIRE(r.approx.feasible());
        CHECK(mg_approx_equal_corr(n, *r.approx.value, t.q(), t.n_interferers) ==
              doctest::Approx(t.mult_gain).epsilon(1e-12));
    }
}

TEST_CASE("minimum width") {
    const DesignTarget zero_gain = identical(1e-12, 10.0, 9);
    const auto w0 = min_width(zero_gain, 100);
    REQUIRE(w0.feasible());
    CHECK(*w0.value == doctest::Approx(0.0).epsilon(1e-3));

    // sqrt argument exactly zero: m q = (N_I + 1)(floor(N/2) - 1).
    DesignTarget edge = identical(2.0, 10.0, 9);
    edge.q_override = 10.0 * 49.0 / 2.0; // m q = 490 = 10 * 49 at N = 100
    const auto w_edge = min_width(edge, 100);
    CHECK_FALSE(w_edge.feasible());

    const auto too_small = min_width(identical(2.0, 10.0, 9), 8);
    CHECK_FALSE(too_small.feasible());
    CHECK(too_small.note.find("N too small") != std::string::npos);
    CHECK_THROWS_AS(min_width(identical(2.0, 10.0, 9), 3), std::invalid_argument);

    // Required correlation below every tabulated peak: resolution error surfaces
    // as an infeasible result naming the cap.
    DesignTarget harsh = identical(2.0, 10.0, 9);
    harsh.q_override = 10.0 * 49.0 / 2.0 * (1.0 - 1e-7);
    const auto w_harsh = min_width(harsh, 100);
    CHECK_FALSE(w_harsh.feasible());
    CHECK(w_harsh.note.find("500") != std::string::npos);
}

TEST_CASE("minimum width is nonincreasing in N") {
    const DesignTarget t = identical(2.0, 10.0, 100);
    double previous = 1e300;
    for (int n = 8; n <= 1024; n *= 2) {
        const auto w = min_width(t, n);
        if (!w.feasible()) continue;
        CHECK(*w.value <= previous);
        previous = *w.value;
    }
    CHECK(previous < 1e300);
}

TEST_CASE("round trip between port count and width") {
    const DesignTarget t = identical(2.0, 10.0, 100);
    for (double w : {0.5, 0.8, 1.5, 3.0}) {
        const int n = *min_ports_general(t, w).value;
        const auto back = min_width(t, n);
        REQUIRE(back.feasible());
        // The width rule bounds |J0| beyond pi W, so at that width the
        // point-correlation rule never asks for more ports.
        CHECK(*min_ports_general(t, *back.value).value <= n);
    }
}

TEST_CASE("integral-bound and Monte Carlo port searches") {
    const DesignTarget t = identical(1.0, 3.0, 3);
    const auto bound = min_ports_integral(t, 1.0);
    REQUIRE(bound.feasible());
    const auto mc = min_ports_monte_carlo(t, 1.0, *bound.value, 20000, 5);
    REQUIRE(mc.feasible());
    CHECK(*mc.value <= *bound.value);
    CHECK_FALSE(min_ports_integral(t, 0.0).feasible());
}
