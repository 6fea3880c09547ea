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
//
// Deterministic service-rate constants of i.i.d. fading channels. The
// channel delivers service at the fixed rate c* = W * c0 where
//
//   c0 = (1/Gamma(m)) Int_0^inf ln(a z + 1) z^(m-1) e^-z dz,  a = rho/m
//
// for the Nakagami family, with closed forms for the Rayleigh and no-fading
// limits and a direct quadrature for arbitrary power-gain densities.

#ifndef CHANSVC_SERVICE_RATE_HPP
#define CHANSVC_SERVICE_RATE_HPP

#include <utility>

#include "chansvc/channel.hpp"

namespace chansvc {

enum class RateMethod { quadrature, closed_form_rayleigh, awgn_limit, generic_quadrature };

const char* to_string(RateMethod method);

// A computed service rate plus the bracket a <= c0 <= rho it must satisfy.
struct RateResult {
    double c_star = 0.0;              // nats/s
    RateMethod method = RateMethod::quadrature;
    double abs_error_estimate = 0.0;  // nats/s
    double c0 = 0.0;                  // c_star / W, dimensionless
    double lower_bound_a = 0.0;       // dimensionless
    double upper_bound = 0.0;         // dimensionless (= rho for Nakagami)

    // Validates the bracket (within the numerical error budget) and returns
    // the result; throws std::logic_error on violation.
    static RateResult make(double w_hz, double c0, RateMethod method, double c0_abs_error,
                           double lower_bound_a, double upper_bound);
};

// The dimensionless constant c0 for shape m >= 0.5 and a = a_scale > 0.
// Absolute error <= 1e-10 * max(1, c0); throws quadrature_error carrying the
// partial estimate if refinement fails.
double c0_integral(double m, double a_scale, double* abs_error = nullptr);

RateResult service_rate_nakagami(double m, const LinkBudget& link);

// Closed form W e^(1/rho) E1(1/rho) for the m = 1 (Rayleigh) channel.
RateResult service_rate_rayleigh_closed(const LinkBudget& link);

// Rician channel via the Nakagami shape substitution m = (K+1)^2/(2K+1).
RateResult service_rate_rician(double k, const LinkBudget& link);

// No-fading limit W ln(1 + rho).
RateResult service_rate_awgn(const LinkBudget& link);

// Arbitrary power-gain density (generic model): W Int ln(s y + 1) p(y) dy
// with s = Pt d^-alpha / (W N0), over the support hint plus tail extension.
RateResult service_rate_generic(const FadingModel& model, const LinkBudget& link);

// Analytic bracket (a, rho) with a = (Gamma(m,1)/Gamma(m)) ln(rho/m + 1).
std::pair<double, double> c0_bounds(double m, const LinkBudget& link);

// Dispatch on the model kind. Rayleigh goes through the closed form,
// Deterministic through the no-fading limit.
RateResult service_rate_for_model(const FadingModel& model, const LinkBudget& link);

} // namespace chansvc

#endif
