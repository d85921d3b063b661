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

#include <string>
#include <vector>

// Built-in property suite: the integral identities and inequalities the
// analysis rests on, the closed-form special cases of the outage evaluators,
// and sweep determinism across thread counts.

namespace fama {

struct SelftestCheck {
    std::string name;
    bool passed = false;
    double worst = 0.0;     // largest observed error or violation
    double tolerance = 0.0; // threshold worst is compared against
    std::string detail;
};

struct SelftestReport {
    std::vector<SelftestCheck> checks;

    bool passed() const noexcept;
};

SelftestReport run_selftest(unsigned threads = 1);

namespace identities {

/// Right-hand side of
///   int_0^inf x e^{-x^2/2} I0(c x) Q1(b, a x) dx
///     = e^{c^2/2} Q1(b/s, a c/s) - (a^2/s^2) e^{(c^2 - b^2)/(2 s^2)} I0(a b c/s^2),  s^2 = a^2 + 1.
double rician_marcum_closed(double a, double b, double c);

/// Left-hand side of the same identity by adaptive quadrature.
double rician_marcum_quadrature(double a, double b, double c, double tolerance = 1e-11);

/// int_0^inf (e^{-a x} / (1 + b x))^k dx by quadrature.
double power_ratio_integral(int k, double a, double b, double tolerance = 1e-12);

/// Its closed form e^{k a / b} E_k(k a / b) / b.
double power_ratio_closed(int k, double a, double b);

/// Grid minimum of Q1(alpha, beta) - e^{-(alpha^2 + beta^2)/2} I0(alpha beta)
/// over alpha, beta in [0, upper] with the given step (negative means violated).
double marcum_lower_bound_margin(double upper, double step);

/// Grid minimum of e^{-x} I0(x) (1 + 2x) - 1 over x in [0, upper].
double i0_lower_bound_margin(double upper, double step);

} // namespace identities

} // namespace fama
