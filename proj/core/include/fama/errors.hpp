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

#include <stdexcept>
#include <string>

namespace fama {

// Accuracy of an alternating sum (or similar) fell below what the caller asked for.
class PrecisionError : public std::runtime_error {
public:
    PrecisionError(const std::string &what, double lost_digits) : std::runtime_error(what), lost_digits_(lost_digits) {}

    double lost_digits() const noexcept { return lost_digits_; }

private:
    double lost_digits_;
};

// A tabulated quantity was requested beyond the table's range.
class ResolutionError : public std::runtime_error {
public:
    ResolutionError(const std::string &what, double cap) : std::runtime_error(what), cap_(cap) {}

    double cap() const noexcept { return cap_; }

private:
    double cap_;
};

// Scenario with |mu_k| = 1 at some port; the exact and bound integrands divide by 1 - mu_k^2.
class SingularCorrelationError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Requested port count is above the exact evaluator's cap.
class CapExceededError : public std::invalid_argument {
public:
    CapExceededError(const std::string &what, int cap) : std::invalid_argument(what), cap_(cap) {}

    int cap() const noexcept { return cap_; }

private:
    int cap_;
};

// Bad command-line or configuration input (unknown option value, figure kind, key).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An input file does not exist or cannot be opened.
class FileNotFoundError : public std::runtime_error {
public:
    explicit FileNotFoundError(const std::string &path) : std::runtime_error("file not found: " + path), path_(path) {}

    const std::string &path() const noexcept { return path_; }

private:
    std::string path_;
};

} // namespace fama
