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

#include "chansvc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>

namespace chansvc {

namespace {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule
// (QUADPACK dqk15 constants). Nonnegative half of the symmetric rule.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
    int depth;
};

struct PanelErrorLess {
    bool operator()(const Panel& lhs, const Panel& rhs) const {
        return lhs.error < rhs.error;
    }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = fc * kWg[3];
    double result_kronrod = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(center - dx) + f(center + dx);
        result_kronrod += kWgk[j] * fsum;
        if (j % 2 == 1)
            result_gauss += kWg[j / 2] * fsum;
    }
    result_gauss *= half;
    result_kronrod *= half;

    Panel p;
    p.a = a;
    p.b = b;
    p.value = result_kronrod;
    p.error = std::fabs(result_kronrod - result_gauss);
    p.depth = depth;
    if (!std::isfinite(p.value))
        throw quadrature_error("integrand evaluated to a non-finite value", result_kronrod,
                               std::numeric_limits<double>::infinity());
    return p;
}

} // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    const std::vector<double>& knots,
                                    const QuadratureOptions& opts) {
    if (knots.size() < 2)
        throw std::invalid_argument("integrate_adaptive: need at least two knots");
    if (!std::is_sorted(knots.begin(), knots.end()))
        throw std::invalid_argument("integrate_adaptive: knots must be sorted");

    std::priority_queue<Panel, std::vector<Panel>, PanelErrorLess> heap;
    double total = 0.0;
    double total_err = 0.0;
    int panels = 0;

    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        if (knots[i] == knots[i + 1])
            continue;
        Panel p = evaluate_panel(f, knots[i], knots[i + 1], 0);
        total += p.value;
        total_err += p.error;
        heap.push(p);
        ++panels;
    }

    auto tolerance = [&]() {
        return std::max(opts.abs_tol, opts.rel_tol * std::max(1.0, std::fabs(total)));
    };

    while (total_err > tolerance()) {
        if (heap.empty())
            break;
        Panel worst = heap.top();
        if (worst.error <= 0.0)
            break;  // nothing left to gain
        heap.pop();
        if (worst.depth >= opts.max_depth)
            throw quadrature_error("adaptive quadrature hit the refinement cap", total, total_err);
        if (panels + 1 > opts.max_panels)
            throw quadrature_error("adaptive quadrature hit the panel cap", total, total_err);

        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid, worst.depth + 1);
        Panel right = evaluate_panel(f, mid, worst.b, worst.depth + 1);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++panels;
    }

    QuadratureResult out;
    out.value = total;
    out.abs_error = total_err;
    out.panels = panels;
    return out;
}

} // namespace chansvc
