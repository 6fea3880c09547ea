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
// Self-contained special-function kernel: log-gamma, upper incomplete gamma
// (plain and regularized), exponential integral E1, and modified Bessel I0.
// All functions are pure and reentrant.

#ifndef CHANSVC_SPECFUN_HPP
#define CHANSVC_SPECFUN_HPP

namespace chansvc {

// Shared accuracy knobs for the series / continued-fraction evaluations.
struct Accuracy {
    double rel_tol = 1e-12;  // convergence target, must be in (0, 1e-6]
    int max_terms = 1024;    // iteration cap, must be >= 32

    void validate() const;
};

const Accuracy& default_accuracy();

// ln Gamma(s) for s > 0, relative error <= 1e-13 on s in [0.5, 1e4].
double ln_gamma(double s);

// Upper incomplete gamma function
//
//              inf
//               /   s-1  -t
//   Gamma(s,x)=| dt t   e      (s > 0, x >= 0)
//              /
//              x
//
// Gamma(s,0) = Gamma(s). Overflows to +inf for s beyond ~171 wherever
// Gamma(s) itself is not representable in double.
double gamma_upper(double s, double x, const Accuracy& acc = default_accuracy());

// Regularized versions Q(s,x) = Gamma(s,x)/Gamma(s) and P(s,x) = 1 - Q(s,x).
// Stable for large s (evaluated in log space), used by the rate bounds.
double gamma_q(double s, double x, const Accuracy& acc = default_accuracy());
double gamma_p(double s, double x, const Accuracy& acc = default_accuracy());

// Exponential integral
//
//            inf
//             /     -t
//   E1(x) =  | dt  e  / t      (x > 0)
//             /
//             x
//
// Series for x < 1, modified Lentz continued fraction for x >= 1.
double exp_integral_e1(double x, const Accuracy& acc = default_accuracy());

// exp(x) * E1(x), stable for large x where exp(x) alone would overflow.
double exp_integral_e1_scaled(double x, const Accuracy& acc = default_accuracy());

// Modified Bessel function of the first kind, order zero, on [0, 700].
double bessel_i0(double x, const Accuracy& acc = default_accuracy());

namespace specfun_detail {
// Both evaluation routes, exposed so the seam can be cross-checked.
double e1_series(double x, const Accuracy& acc);
double e1_contfrac_scaled(double x, const Accuracy& acc);  // returns exp(x)*E1(x)
} // namespace specfun_detail

} // namespace chansvc

#endif
