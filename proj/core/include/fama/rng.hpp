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

#include <complex>
#include <cstdint>

namespace fama {

/// Counter-based generator: the n-th output of stream (seed, stream_id) is a
/// pure function of (seed, stream_id, n), so any shard of a run can be
/// replayed without touching the others.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    std::uint64_t next() noexcept;

    /// Uniform on the open interval (0, 1).
    double uniform() noexcept;

    /// Circularly symmetric complex Gaussian with E|z|^2 = 1, i.e. real and
    /// imaginary parts each of variance 1/2 (Box-Muller, no rejection).
    std::complex<double> complex_gaussian() noexcept;

    std::uint64_t position() const noexcept { return counter_; }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

} // namespace fama
