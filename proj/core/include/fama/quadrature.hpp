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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace fama::quadrature {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Cached rule; built on first request and shared read-only afterwards.
const GaussLegendreRule &gauss_legendre(int n);

struct IntegralResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    bool converged = true;
};

/// Adaptive composite Gauss-Legendre on [a, b]. Each panel is integrated with
/// an n-point and a 2n-point rule; their difference is the panel error
/// estimate. The panel with the largest estimate is bisected until the
/// summed estimate is below tolerance or max_panels is reached.
IntegralResult integrate(const std::function<double(double)> &f, double a, double b, int order, double tolerance,
                         int max_panels = 4096);

} // namespace fama::quadrature
