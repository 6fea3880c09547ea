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

#ifndef CHANSVC_QUADRATURE_HPP
#define CHANSVC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "chansvc/errors.hpp"

namespace chansvc {

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;  // sum of per-panel Kronrod-Gauss differences
    int panels = 0;
};

struct QuadratureOptions {
    double abs_tol = 0.0;    // stop when error <= max(abs_tol, rel_tol * max(1,|I|))
    double rel_tol = 1e-10;
    int max_depth = 20;      // bisection levels per initial panel
    int max_panels = 20000;
};

// Adaptive Gauss(7)/Kronrod(15) integration over the panels defined by the
// sorted knot list. Worst panel first; throws quadrature_error with the
// partial estimate if the tolerance cannot be met within the caps.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& knots,
                                    const QuadratureOptions& opts = {});

} // namespace chansvc

#endif
