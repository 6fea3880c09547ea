// chansvc - service-rate analysis and simulation for i.i.d. fading channels
// Copyright (C) 2026 the chansvc authors
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

#ifndef CHANSVC_ERRORS_HPP
#define CHANSVC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chansvc {

// Adaptive quadrature failed to reach the requested tolerance. The partial
// estimate and its error bound are carried so callers can decide what to do
// with them instead of silently using a bad number.
class quadrature_error : public std::runtime_error {
public:
    quadrature_error(const std::string& what, double partial_value, double error_estimate)
        : std::runtime_error(what), partial_(partial_value), error_(error_estimate) {}

    double partial_value() const noexcept { return partial_; }
    double error_estimate() const noexcept { return error_; }

private:
    double partial_;
    double error_;
};

// A run would exceed the configured sample budget.
class budget_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation is not available for the given model configuration.
class unsupported_operation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Not enough data to compute the requested statistic.
class insufficient_data : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chansvc

#endif
