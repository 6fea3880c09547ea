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
// Test-only reference implementations, deliberately independent of the
// library's Gauss-Kronrod / continued-fraction code paths: adaptive Simpson
// quadrature and direct series. Slow and simple on purpose.

#ifndef CHANSVC_TESTS_ORACLES_HPP
#define CHANSVC_TESTS_ORACLES_HPP

#include <functional>

namespace oracles {

// Recursive adaptive Simpson on [a, b].
double simpson(const std::function<double(double)>& f, double a, double b, double tol);

// Simpson over [a, inf) for integrands with exponential-type decay:
// fixed-width slabs are added until three consecutive ones are negligible.
double simpson_to_inf(const std::function<double(double)>& f, double a, double tol);

// Upper incomplete gamma by direct quadrature.
double gamma_upper(double s, double x, double tol = 1e-12);

// E1 by direct quadrature of exp(-t)/t.
double exp_integral_e1(double x, double tol = 1e-13);

// Bessel I0 through the integral identity I0(x) = (1/pi) Int_0^pi
// exp(x cos t) dt — a different route than any series.
double bessel_i0(double x, double tol = 1e-13);

// The printed "Ei" series eta + ln x - x + x^2/(2*2!) - x^3/(3*3!) + ...,
// with the 9-digit Euler constant it was printed with.
double ei_printed_series(double x);

// Service-rate constant c0 = (1/Gamma(m)) Int ln(a z + 1) z^(m-1) e^-z dz.
// For m < 1 the head is computed under the substitution z = u^(1/m).
double c0(double m, double a, double tol = 1e-11);

} // namespace oracles

#endif
