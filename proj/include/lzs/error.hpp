// Copyright 2026 The lzs-lattice Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lzs {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function (e.g. non-finite input).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A caller broke a documented precondition (non-Hermitian matrix, bad grid size, ...).
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// ODE integration gave up; `last_time()` is the last successfully reached time.
class IntegrationError : public Error {
public:
    IntegrationError(const std::string& what, double last_time)
        : Error(what), last_time_(last_time) {}
    double last_time() const noexcept { return last_time_; }

private:
    double last_time_;
};

/// An iterative method hit its budget before reaching the requested accuracy.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best_estimate, double error_estimate)
        : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}
    double best_estimate() const noexcept { return best_estimate_; }
    double error_estimate() const noexcept { return error_estimate_; }

private:
    double best_estimate_;
    double error_estimate_;
};

/// No consistent Bloch phase convention could be established.
class GaugeError : public Error {
public:
    using Error::Error;
};

/// Scalar root finding failed (no sign change in the bracket or iteration budget exhausted).
class RootFindingError : public Error {
public:
    RootFindingError(const std::string& what, double lo, double hi)
        : Error(what), lo_(lo), hi_(hi) {}
    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// Time series too short for the requested averaging window.
class WindowError : public Error {
public:
    using Error::Error;
};

/// Invalid or inconsistent sweep / CLI configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace lzs
