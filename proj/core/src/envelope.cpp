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

#include "fama/errors.hpp"
#include "fama/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fama::specfun {

namespace {

double newton_j0_zero(double guess) {
    double x = guess;
    for (int it = 0; it < 50; ++it) {
        // J0' = -J1
        const double step = bessel_j0(x) / bessel_j1(x);
        x += step;
        if (std::fabs(step) < 1e-15 * x) break;
    }
    return x;
}

// Extrema of J0 are zeros of J1; J1' = J0 - J1 / x.
double newton_j1_zero(double guess) {
    double x = guess;
    for (int it = 0; it < 50; ++it) {
        const double j1 = bessel_j1(x);
        const double step = j1 / (bessel_j0(x) - j1 / x);
        x -= step;
        if (std::fabs(step) < 1e-15 * x) break;
    }
    return x;
}

} // namespace

EnvelopeTable::EnvelopeTable(double cap) : cap_(cap) {
    if (!(cap > 0.0) || !std::isfinite(cap)) throw std::invalid_argument("EnvelopeTable: cap must be finite and > 0");

    // McMahon's expansion seeds Newton for the s-th zero.
    for (int s = 1;; ++s) {
        const double beta = (s - 0.25) * std::numbers::pi;
        const double guess = beta + 1.0 / (8.0 * beta) - 124.0 / (3.0 * std::pow(8.0 * beta, 3));
        const double zero = newton_j0_zero(guess);
        zeros_.push_back(zero);
        if (zero > cap_) break;
    }

    extrema_.push_back({0.0, 1.0});
    for (std::size_t s = 0; s + 1 < zeros_.size(); ++s) {
        const double at = newton_j1_zero(0.5 * (zeros_[s] + zeros_[s + 1]));
        if (!(at > zeros_[s] && at < zeros_[s + 1]))
            throw std::logic_error("EnvelopeTable: extremum search left its bracket");
        if (at > cap_) break;
        const double peak = std::fabs(bessel_j0(at));
        if (peak >= extrema_.back().peak) throw std::logic_error("EnvelopeTable: |J0| peaks are not decreasing");
        extrema_.push_back({at, peak});
    }
}

const EnvelopeTable &EnvelopeTable::instance() {
    static const EnvelopeTable table(kDefaultCap);
    return table;
}

double EnvelopeTable::inverse(double mu_star) const {
    if (!(mu_star > 0.0) || !(mu_star <= 1.0))
        throw std::domain_error("j0_envelope_inverse: mu_star must lie in (0, 1]");
    if (mu_star >= 1.0) return 0.0;

    std::size_t first_below = 0;
    while (first_below < extrema_.size() && extrema_[first_below].peak > mu_star) ++first_below;
    if (first_below == extrema_.size()) {
        std::ostringstream msg;
        msg << "j0_envelope_inverse: resolution exceeded, mu* = " << mu_star
            << " is below the smallest tabulated |J0| peak " << extrema_.back().peak << " (table cap rho = " << cap_
            << ")";
        throw ResolutionError(msg.str(), cap_);
    }

    // Descending branch from the last peak above mu* down to the next zero.
    double lo = extrema_[first_below - 1].abscissa;
    double hi = zeros_[first_below - 1];
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (std::fabs(bessel_j0(mid)) > mu_star)
            lo = mid;
        else
            hi = mid;
    }
    return hi;
}

double j0_envelope_inverse(double mu_star) { return EnvelopeTable::instance().inverse(mu_star); }

} // namespace fama::specfun
