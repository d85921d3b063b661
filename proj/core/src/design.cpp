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

#include "fama/design.hpp"

#include "fama/channel.hpp"
#include "fama/errors.hpp"
#include "fama/montecarlo.hpp"
#include "fama/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fama {

void DesignTarget::validate() const {
    if (!(gamma > 0.0) || !std::isfinite(gamma))
        throw std::invalid_argument("design target: gamma must be positive and finite");
    if (n_interferers < 1) throw std::invalid_argument("design target: need at least one interferer");
    if (!(mult_gain > 0.0) || mult_gain > n_users())
        throw std::invalid_argument("design target: multiplexing gain must lie in (0, N_I + 1]");
    if (!(q() > 0.0) || !std::isfinite(q()))
        throw std::invalid_argument("design target: q must be positive and finite");
}

namespace {

std::string format_number(double v) {
    std::ostringstream os;
    os.precision(9);
    os << v;
    return os.str();
}

double gain_at(const DesignTarget &target, double epsilon) { return target.n_users() * (1.0 - epsilon); }

// Smallest n in [2, max_n] with pred(n) true, assuming pred is monotone in n.
// Returns max_n + 1 when pred(max_n) is false.
int search_monotone(int max_n, const std::function<bool(int)> &pred) {
    int lo = 1; // pred(lo) known false (or never evaluated below 2)
    int hi = 2;
    while (!pred(hi)) {
        if (hi >= max_n) return max_n + 1;
        lo = hi;
        hi = std::min(max_n, hi * 2);
    }
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (pred(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

} // namespace

DesignResult<int> min_ports_equal_corr(const DesignTarget &target, double mu, const QuadratureSettings &settings,
                                       int max_ports) {
    target.validate();
    if (!(mu > 0.0 && mu < 1.0)) throw std::invalid_argument("min_ports_equal_corr: mu must lie in (0, 1)");
    if (max_ports < 2) throw std::invalid_argument("min_ports_equal_corr: max_ports must be at least 2");

    const double q = target.q();
    const double budget = target.outage_budget();
    bool fallback = false;
    auto bound = [&](int n) {
        try {
            return outage_ub_closed(n, mu, q).value;
        } catch (const PrecisionError &) {
            fallback = true;
            return outage_ub_integral_equal(n, mu, q, settings);
        }
    };

    DesignResult<int> result;
    const int n = search_monotone(max_ports, [&](int k) { return bound(k) <= budget; });
    if (n > max_ports) {
        result.closest_gain = gain_at(target, bound(max_ports));
        result.note = "infeasible: bound not met within " + std::to_string(max_ports) + " ports; best gain " +
                      format_number(result.closest_gain);
        return result;
    }
    result.value = n;
    result.note = fallback ? "closed-form with integral fallback" : "closed-form";
    return result;
}

CriticalMu critical_mu(const DesignTarget &target, int n_ports) {
    target.validate();
    if (n_ports < 2) throw std::invalid_argument("critical_mu: need at least two ports");
    const double q = target.q();
    const double share = target.mult_gain / target.n_users();
    const double nm1 = n_ports - 1.0;

    CriticalMu out;

    // The alternating binomial sums have closed forms:
    //   sum_k C(N-1,k)(-1)^{k+1} q^{-k}   = 1 - (1 - 1/q)^{N-1}
    //   sum_k k C(N-1,k)(-1)^{k+1} q^{-k} = ((N-1)/q)(1 - 1/q)^{N-2}
    // which avoids the cancellation of summing them term by term.
    const double base = 1.0 - 1.0 / q;
    const double s1 = (q > 1.0) ? -std::expm1(nm1 * std::log1p(-1.0 / q)) : 1.0 - std::pow(base, nm1);
    const double s2 = nm1 / q * std::pow(base, nm1 - 1.0);
    const double ratio = (s1 - share) / s2;
    if (!(s2 > 0.0) || !std::isfinite(ratio)) {
        out.exact.note = "infeasible: correlation sum is not positive for this q and N";
    } else if (ratio < 0.0) {
        out.exact.note = "infeasible: N too small for target";
        out.exact.closest_gain = target.n_users() * s1;
    } else if (ratio > 1.0) {
        out.exact.value = 1.0;
        out.exact.note = "exact form exceeds 1; clamped";
    } else {
        out.exact.value = std::sqrt(ratio);
        out.exact.note = "exact form";
    }

    const double arg = 1.0 - target.mult_gain * q / (target.n_users() * nm1);
    if (arg < 0.0) {
        out.approx.note = "infeasible: N too small for target";
        out.approx.closest_gain = target.n_users() * nm1 / q;
    } else {
        out.approx.value = std::sqrt(std::min(arg, 1.0));
        out.approx.note = "approximation";
    }
    return out;
}

DesignResult<double> min_width(const DesignTarget &target, int n_ports) {
    target.validate();
    const int half = n_ports / 2;
    if (half < 2) throw std::invalid_argument("min_width: floor(N/2) must be at least 2");

    DesignResult<double> result;
    const double arg = 1.0 - target.mult_gain * target.q() / (target.n_users() * (half - 1.0));
    if (arg < 0.0) {
        result.note = "infeasible: N too small for target";
        result.closest_gain = target.n_users() * (half - 1.0) / target.q();
        return result;
    }
    const double mu_star = std::sqrt(arg);
    if (mu_star == 0.0) {
        result.note = "infeasible: required correlation is zero (unbounded width)";
        return result;
    }
    try {
        result.value = specfun::j0_envelope_inverse(mu_star) / std::numbers::pi;
        result.note = "envelope inverse";
    } catch (const ResolutionError &e) {
        result.note = std::string("infeasible: ") + e.what();
    }
    return result;
}

DesignResult<int> min_ports_general(const DesignTarget &target, double width) {
    target.validate();
    DesignResult<int> result;
    if (!(width > 0.0) || !std::isfinite(width)) {
        result.note = "infeasible: width must be positive";
        return result;
    }
    const double j = specfun::bessel_j0(std::numbers::pi * width);
    const double decorrelation = 1.0 - j * j;
    const double x = target.mult_gain * target.q() / (target.n_users() * decorrelation) + 1.0;
    // N must be even and at least 2x; the slack absorbs rounding in x.
    const double n = 2.0 * std::ceil(x - 1e-12);
    if (n > static_cast<double>(std::numeric_limits<int>::max())) {
        result.note = "infeasible: port count overflows";
        return result;
    }
    result.value = static_cast<int>(n);
    result.note = "decorrelation bound";
    return result;
}

DesignResult<int> min_ports_integral(const DesignTarget &target, double width, const QuadratureSettings &settings,
                                     int max_ports) {
    target.validate();
    DesignResult<int> result;
    if (!(width > 0.0) || !std::isfinite(width)) {
        result.note = "infeasible: width must be positive";
        return result;
    }
    const double budget = target.outage_budget();
    auto bound = [&](int n) {
        const PortGeometry g = make_geometry(n, width);
        return outage_ub_integral(std::span<const double>(g.mu), target.q(), settings).probability;
    };
    const int n = search_monotone(max_ports, [&](int k) { return bound(k) <= budget; });
    if (n > max_ports) {
        result.closest_gain = gain_at(target, bound(max_ports));
        result.note = "infeasible: bound not met within " + std::to_string(max_ports) + " ports; best gain " +
                      format_number(result.closest_gain);
        return result;
    }
    result.value = n;
    result.note = "integral bound";
    return result;
}

DesignResult<int> min_ports_monte_carlo(const DesignTarget &target, double width, int upper, std::int64_t trials,
                                        std::uint64_t seed, unsigned threads) {
    target.validate();
    if (upper < 2) throw std::invalid_argument("min_ports_monte_carlo: upper must be at least 2");
    DesignResult<int> result;
    if (!(width > 0.0) || !std::isfinite(width)) {
        result.note = "infeasible: width must be positive";
        return result;
    }
    const double budget = target.outage_budget();
    McOptions options;
    options.threads = threads;
    auto outage = [&](int n) {
        FamaScenario s;
        s.geometry = make_geometry(n, width);
        s.sigma = 1.0;
        s.sigma_i = std::sqrt(target.q() / target.gamma);
        s.n_interferers = target.n_interferers;
        s.gamma = target.gamma;
        return estimate_outage(s, trials, seed, options).probability;
    };
    const int n = search_monotone(upper, [&](int k) { return outage(k) <= budget; });
    if (n > upper) {
        result.closest_gain = gain_at(target, outage(upper));
        result.note = "infeasible: simulated outage above budget at " + std::to_string(upper) + " ports";
        return result;
    }
    result.value = n;
    result.note = "monte carlo";
    return result;
}

} // namespace fama
