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

#include <span>
#include <vector>

// Special functions used by the outage analysis. Everything here is a pure
// function of its arguments and safe to call concurrently.

namespace fama::specfun {

/// Zero-order Bessel function of the first kind.
/// Throws std::domain_error for non-finite input.
double bessel_j0(double x);

/// First-order Bessel function of the first kind (J0' = -J1).
double bessel_j1(double x);

/// e^{-x} I0(x) for x >= 0; never overflows.
double bessel_i0_scaled(double x);

/// Fills out[k] = e^{-x} I_k(x) for k = 0..out.size()-1, x >= 0.
/// Ratios come from a backward continued fraction normalised by bessel_i0_scaled.
void bessel_i_scaled_sequence(double x, std::span<double> out);

/// First-order Marcum Q function Q1(a, b), a, b >= 0. Absolute error below 1e-10.
double marcum_q1(double a, double b);

/// Generalised exponential integral E_k(x) = \int_1^\infty e^{-xt} t^{-k} dt, x > 0.
double expint_en(int k, double x);

/// e^{x} E_k(x), the form used inside alternating sums where e^{x} and E_k(x)
/// would overflow and underflow separately.
double expint_en_scaled(int k, double x);

struct EnvelopeExtremum {
    double abscissa;
    double peak;
};

/// Successive local maxima of |J0| on [0, cap]. Peaks decrease strictly, so the
/// table is the monotone envelope of |J0|. Built once on first use.
class EnvelopeTable {
public:
    static constexpr double kDefaultCap = 500.0;

    static const EnvelopeTable &instance();

    explicit EnvelopeTable(double cap);

    std::span<const EnvelopeExtremum> extrema() const noexcept { return extrema_; }
    std::span<const double> zeros() const noexcept { return zeros_; }
    double cap() const noexcept { return cap_; }

    /// Smallest rho* >= 0 with |J0(rho)| <= mu_star for every rho >= rho*.
    /// Throws fama::ResolutionError if mu_star is below the last tabulated peak.
    double inverse(double mu_star) const;

private:
    std::vector<EnvelopeExtremum> extrema_;
    std::vector<double> zeros_;
    double cap_;
};

/// EnvelopeTable::instance().inverse(mu_star).
double j0_envelope_inverse(double mu_star);

} // namespace fama::specfun
