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

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace fama::specfun {

namespace {

using std::numbers::pi;

// |x| <= kTaylorLimit: ascending series in long double.
// kTaylorLimit < |x| < kHankelLimit: trapezoidal rule on Bessel's integral.
// |x| >= kHankelLimit: Hankel amplitude/phase expansion.
constexpr double kTaylorLimit = 8.0;
constexpr double kHankelLimit = 20.0;

constexpr double kI0SeriesLimit = 20.0;

void require_finite(double x, const char *fn) {
    if (!std::isfinite(x)) throw std::domain_error(std::string(fn) + ": argument must be finite");
}

double taylor_j(int order, double x) {
    const long double h = 0.5L * x;
    const long double h2 = h * h;
    long double term = order == 0 ? 1.0L : h;
    long double sum = term;
    for (int m = 1; m < 200; ++m) {
        term *= -h2 / (static_cast<long double>(m) * (m + order));
        sum += term;
        if (m > h && std::fabs(term) < 1e-22L) break;
    }
    return static_cast<double>(sum);
}

// J_n(x) = (1/2pi) \int_{-pi}^{pi} cos(n t - x sin t) dt. The integrand is
// periodic, so the M-point rule is exact up to aliasing terms J_{M +- n}(x).
double trapezoid_j(int order, double x) {
    const int points = static_cast<int>(std::ceil(std::fabs(x))) + 48;
    double sum = 0.0;
    for (int j = 0; j < points; ++j) {
        const double t = 2.0 * pi * j / points;
        sum += std::cos(order * t - x * std::sin(t));
    }
    return sum / points;
}

double hankel_j(int order, double x) {
    const double mu = 4.0 * order * order;
    double p = 1.0;
    double q = 0.0;
    double a = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 80; ++k) {
        a *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (8.0 * k * x);
        const double mag = std::fabs(a);
        if (mag > last || mag < 1e-18) break;
        last = mag;
        const int j = k / 2;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0)
            p += sign * a;
        else
            q += sign * a;
    }
    const double chi = x - (0.5 * order + 0.25) * pi;
    return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_j_nonneg(int order, double x) {
    if (x <= kTaylorLimit) return taylor_j(order, x);
    if (x < kHankelLimit) return trapezoid_j(order, x);
    return hankel_j(order, x);
}

} // namespace

double bessel_j0(double x) {
    require_finite(x, "bessel_j0");
    return bessel_j_nonneg(0, std::fabs(x));
}

double bessel_j1(double x) {
    require_finite(x, "bessel_j1");
    const double v = bessel_j_nonneg(1, std::fabs(x));
    return x < 0.0 ? -v : v;
}

double bessel_i0_scaled(double x) {
    if (!(x >= 0.0) || std::isinf(x)) {
        if (x == std::numeric_limits<double>::infinity()) return 0.0;
        throw std::domain_error("bessel_i0_scaled: argument must be finite and >= 0");
    }
    if (x <= kI0SeriesLimit) {
        const double h2 = 0.25 * x * x;
        double term = 1.0;
        double sum = 1.0;
        for (int m = 1; m < 200; ++m) {
            term *= h2 / (static_cast<double>(m) * m);
            sum += term;
            if (term < 1e-17 * sum) break;
        }
        return sum * std::exp(-x);
    }
    // e^{-x} I0(x) ~ (2 pi x)^{-1/2} sum_k ((2k-1)!!)^2 / (k! (8x)^k)
    double term = 1.0;
    double sum = 1.0;
    double last = 1.0;
    for (int k = 1; k < 100; ++k) {
        term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (8.0 * k * x);
        if (term > last || term < 1e-18) break;
        last = term;
        sum += term;
    }
    return sum / std::sqrt(2.0 * pi * x);
}

void bessel_i_scaled_sequence(double x, std::span<double> out) {
    if (out.empty()) return;
    if (!(x >= 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel_i_scaled_sequence: argument must be finite and >= 0");
    std::fill(out.begin(), out.end(), 0.0);
    out[0] = bessel_i0_scaled(x);
    if (x == 0.0 || out.size() == 1) return;

    // Backward continued fraction for r_k = I_k / I_{k-1}, started far enough
    // above the last requested order that the start error is damped out.
    const std::size_t last = out.size() - 1;
    const std::size_t start = last + static_cast<std::size_t>(std::ceil(std::sqrt(84.0 * x))) + 32;
    double ratio = 0.0;
    for (std::size_t k = start; k > last; --k) ratio = 1.0 / (2.0 * static_cast<double>(k) / x + ratio);
    // ratio now holds r_{last+1}
    for (std::size_t k = last; k >= 1; --k) {
        ratio = 1.0 / (2.0 * static_cast<double>(k) / x + ratio);
        out[k] = ratio; // r_k, converted to values below
    }
    for (std::size_t k = 1; k <= last; ++k) out[k] *= out[k - 1];
}

double marcum_q1(double a, double b) {
    if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
        throw std::domain_error("marcum_q1: arguments must be finite and >= 0");
    if (b == 0.0) return 1.0;
    if (a == 0.0) return std::exp(-0.5 * b * b);

    const double x = a * b;
    if (a == b) return 0.5 * (1.0 + bessel_i0_scaled(x));

    const bool a_below = a < b;
    const double rho = a_below ? a / b : b / a;
    const double d = b - a;
    const double prefactor = std::exp(-0.5 * d * d);
    if (prefactor == 0.0) return a_below ? 0.0 : 1.0;

    // Terms rho^k e^{-x} I_k(x) are nonincreasing in k, so after K terms the
    // remainder is below rho^{K+1} / (1 - rho); orders beyond sqrt(84 x) + 32
    // are negligible regardless of rho.
    const double bessel_terms = std::ceil(std::sqrt(84.0 * x)) + 32.0;
    const double geometric_terms = std::ceil(std::log(1e-18 * (1.0 - rho)) / std::log(rho)) + 1.0;
    const auto count = static_cast<std::size_t>(std::min(bessel_terms, geometric_terms)) + 1;

    thread_local std::vector<double> scaled;
    scaled.resize(count + 1);
    bessel_i_scaled_sequence(x, scaled);

    double sum = 0.0;
    double power = a_below ? 1.0 : rho;
    for (std::size_t k = a_below ? 0 : 1; k <= count; ++k) {
        sum += power * scaled[k];
        power *= rho;
    }
    const double value = a_below ? prefactor * sum : 1.0 - prefactor * sum;
    return std::clamp(value, 0.0, 1.0);
}

double expint_en_scaled(int k, double x) {
    if (k < 0) throw std::domain_error("expint_en: order must be >= 0");
    if (!(x > 0.0) || !std::isfinite(x)) throw std::domain_error("expint_en: argument must be finite and > 0");
    if (k == 0) return 1.0 / x;

    constexpr double eps = 1e-16;
    constexpr int max_iter = 10000;
    if (x > 1.5) {
        // Modified Lentz on the continued fraction for e^{x} E_k(x).
        constexpr double tiny = 1e-300;
        double b = x + k;
        double c = 1.0 / tiny;
        double d = 1.0 / b;
        double h = d;
        for (int i = 1; i <= max_iter; ++i) {
            const double an = -static_cast<double>(i) * (k - 1 + i);
            b += 2.0;
            d = 1.0 / (an * d + b);
            c = b + an / c;
            const double del = c * d;
            h *= del;
            if (std::fabs(del - 1.0) < eps) return h;
        }
        return h;
    }

    // Power series about x = 0, with the digamma term at i = k - 1.
    constexpr double euler = 0.57721566490153286061;
    const int nm1 = k - 1;
    double ans = nm1 != 0 ? 1.0 / nm1 : -std::log(x) - euler;
    double fact = 1.0;
    for (int i = 1; i <= max_iter; ++i) {
        fact *= -x / i;
        double del;
        if (i != nm1) {
            del = -fact / (i - nm1);
        } else {
            double psi = -euler;
            for (int ii = 1; ii <= nm1; ++ii) psi += 1.0 / ii;
            del = fact * (-std::log(x) + psi);
        }
        ans += del;
        if (std::fabs(del) < std::fabs(ans) * eps) break;
    }
    return ans * std::exp(x);
}

double expint_en(int k, double x) {
    const double scaled = expint_en_scaled(k, x);
    return scaled * std::exp(-x);
}

} // namespace fama::specfun
