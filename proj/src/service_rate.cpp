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

#include "chansvc/service_rate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "chansvc/errors.hpp"
#include "chansvc/quadrature.hpp"
#include "chansvc/specfun.hpp"

namespace chansvc {

const char* to_string(RateMethod method) {
    switch (method) {
    case RateMethod::quadrature: return "quadrature";
    case RateMethod::closed_form_rayleigh: return "closed_form_rayleigh";
    case RateMethod::awgn_limit: return "awgn_limit";
    case RateMethod::generic_quadrature: return "generic_quadrature";
    }
    return "unknown";
}

RateResult RateResult::make(double w_hz, double c0, RateMethod method, double c0_abs_error,
                            double lower_bound_a, double upper_bound) {
    const double slack = c0_abs_error + 1e-12 * std::max(1.0, std::fabs(c0));
    if (c0 < lower_bound_a - slack || c0 > upper_bound + slack)
        throw std::logic_error("RateResult: c0 violates its lower/upper bracket");
    RateResult r;
    r.c_star = w_hz * c0;
    r.method = method;
    r.abs_error_estimate = w_hz * c0_abs_error;
    r.c0 = c0;
    r.lower_bound_a = lower_bound_a;
    r.upper_bound = upper_bound;
    return r;
}

namespace {

void push_if_inside(std::vector<double>& knots, double x, double lo, double hi) {
    if (x > lo && x < hi) knots.push_back(x);
}

} // namespace

double c0_integral(double m, double a_scale, double* abs_error) {
    if (!(m >= 0.5) || !std::isfinite(m))
        throw std::domain_error("c0_integral: m must be >= 0.5");
    if (!(a_scale > 0.0) || !std::isfinite(a_scale))
        throw std::domain_error("c0_integral: a_scale must be > 0");

    // The gamma weight concentrates at z = m with width sqrt(m); beyond
    // ~1e6 the integrand is effectively evaluated at the mean and naive
    // quadrature only loses digits.
    if (m >= 1e6) {
        const double rho = a_scale * m;
        const double c0 = std::log1p(rho);
        if (abs_error) *abs_error = rho * rho / (m * (1.0 + rho) * (1.0 + rho));
        return c0;
    }

    const double ln_gamma_m = ln_gamma(m);
    const auto weighted = [m, a_scale, ln_gamma_m](double z) {
        if (z <= 0.0) return 0.0;
        return std::log1p(a_scale * z) *
               std::exp((m - 1.0) * std::log(z) - z - ln_gamma_m);
    };

    const double sigma = std::sqrt(m);
    const double z_knee = 1.0 / a_scale;  // where the log leaves its linear regime
    const double lo = std::max(0.0, m - 12.0 * sigma - 40.0);
    const double hi = m + 12.0 * sigma + 40.0;

    QuadratureOptions opts;
    opts.rel_tol = 5e-11;
    opts.max_depth = 20;

    double value = 0.0;
    double error = 0.0;

    double body_lo = lo;
    if (m < 1.0) {
        // z^(m-1) has unbounded slope at z = 0; the substitution z = u^(1/m)
        // flattens it so Gauss-Kronrod panels converge at full rate.
        const double b = std::min(1.0, hi);
        const double inv_m = 1.0 / m;
        const auto regularized = [m, inv_m, a_scale, ln_gamma_m](double u) {
            if (u <= 0.0) return 0.0;
            const double z = std::pow(u, inv_m);
            return inv_m * std::log1p(a_scale * z) * std::exp(-z - ln_gamma_m);
        };
        std::vector<double> sub_knots{0.0};
        if (z_knee < b) sub_knots.push_back(std::pow(z_knee, m));
        sub_knots.push_back(std::pow(b, m));
        std::sort(sub_knots.begin(), sub_knots.end());
        const QuadratureResult head = integrate_adaptive(regularized, sub_knots, opts);
        value += head.value;
        error += head.abs_error;
        body_lo = b;
    }

    if (body_lo < hi) {
        std::vector<double> knots{body_lo, hi};
        push_if_inside(knots, z_knee, body_lo, hi);
        push_if_inside(knots, m - 3.0 * sigma, body_lo, hi);
        push_if_inside(knots, m, body_lo, hi);
        push_if_inside(knots, m + 3.0 * sigma, body_lo, hi);
        std::sort(knots.begin(), knots.end());
        const QuadratureResult body = integrate_adaptive(weighted, knots, opts);
        value += body.value;
        error += body.abs_error;
    }

    // Analytic bounds for the discarded head and tail. With
    // ln(a z + 1) <= ln(a + 1) + z the tail beyond hi is at most
    // ln(a+1) Q(m, hi) + m Q(m+1, hi); the head below lo carries at most
    // ln(a lo + 1) P(m, lo) of mass-weighted integrand.
    if (lo > 0.0)
        error += std::log1p(a_scale * lo) * gamma_p(m, lo);
    error += std::log1p(a_scale) * gamma_q(m, hi) + m * gamma_q(m + 1.0, hi);

    if (abs_error) *abs_error = error;
    return value;
}

std::pair<double, double> c0_bounds(double m, const LinkBudget& link) {
    if (!(m >= 0.5) || !std::isfinite(m))
        throw std::domain_error("c0_bounds: m must be >= 0.5");
    link.validate();
    const double rho = link.rho();
    if (rho == 0.0) return {0.0, 0.0};
    const double a = gamma_q(m, 1.0) * std::log1p(rho / m);
    return {a, rho};
}

RateResult service_rate_nakagami(double m, const LinkBudget& link) {
    if (!(m >= 0.5) || !std::isfinite(m))
        throw std::domain_error("service_rate_nakagami: m must be >= 0.5");
    link.validate();

    const double rho = link.rho();
    if (rho == 0.0)
        return RateResult::make(link.w_hz, 0.0, RateMethod::quadrature, 0.0, 0.0, 0.0);

    double err = 0.0;
    const double c0 = c0_integral(m, rho / m, &err);
    const auto [lower, upper] = c0_bounds(m, link);
    return RateResult::make(link.w_hz, c0, RateMethod::quadrature, err, lower, upper);
}

RateResult service_rate_rayleigh_closed(const LinkBudget& link) {
    link.validate();
    const double rho = link.rho();
    if (rho == 0.0)
        return RateResult::make(link.w_hz, 0.0, RateMethod::closed_form_rayleigh, 0.0, 0.0, 0.0);

    const double beta = 1.0 / rho;
    const double c0 = exp_integral_e1_scaled(beta);
    const auto [lower, upper] = c0_bounds(1.0, link);
    return RateResult::make(link.w_hz, c0, RateMethod::closed_form_rayleigh,
                            1e-12 * std::fabs(c0), lower, upper);
}

RateResult service_rate_rician(double k, const LinkBudget& link) {
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::domain_error("service_rate_rician: K must be >= 0");
    return service_rate_nakagami(rician_k_to_nakagami_m(k), link);
}

RateResult service_rate_awgn(const LinkBudget& link) {
    link.validate();
    const double rho = link.rho();
    return RateResult::make(link.w_hz, std::log1p(rho), RateMethod::awgn_limit, 0.0, 0.0, rho);
}

RateResult service_rate_generic(const FadingModel& model, const LinkBudget& link) {
    if (model.kind() != FadingModel::Kind::generic)
        throw std::invalid_argument("service_rate_generic: model must be of the generic kind");
    link.validate();
    if (std::fabs(model.normalization() - 1.0) > 1e-6)
        throw std::invalid_argument(
            "service_rate_generic: generic pdf normalization is outside 1 +- 1e-6");

    const double s = link.snr_per_unit_gain();
    const auto& pdf = model.generic_pdf();
    const auto [lo, hi] = model.support();

    const auto integrand = [&pdf, s](double y) { return std::log1p(s * y) * pdf(y); };
    const auto mean_integrand = [&pdf](double y) { return y * pdf(y); };

    std::vector<double> knots;
    knots.push_back(lo);
    const double anchor = std::max(lo, hi * 1e-9);
    for (double t = anchor; t < hi; t *= 8.0)
        if (t > lo) knots.push_back(t);
    if (s > 0.0) push_if_inside(knots, 1.0 / s, lo, hi);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());

    QuadratureOptions opts;
    opts.rel_tol = 1e-10;

    QuadratureResult core = integrate_adaptive(integrand, knots, opts);
    double value = core.value;
    double error = core.abs_error;

    // Tail extension beyond the support hint: keep doubling until the slab
    // contribution is negligible against the tolerance. The construction-time
    // normalization check already bounds the mass out there by 1e-6.
    double tail_lo = hi;
    for (int i = 0; i < 8; ++i) {
        const double tail_hi = tail_lo * 2.0;
        QuadratureOptions tail_opts;
        tail_opts.rel_tol = 1e-8;
        const QuadratureResult slab = integrate_adaptive(integrand, {tail_lo, tail_hi}, tail_opts);
        value += slab.value;
        error += slab.abs_error;
        if (std::fabs(slab.value) < 1e-12 * std::max(1.0, std::fabs(value)))
            break;
        tail_lo = tail_hi;
    }

    const double mean_gain = integrate_adaptive(mean_integrand, knots, opts).value;
    const double upper = std::log1p(s * mean_gain) + 1e-9;  // Jensen, with quadrature slack
    return RateResult::make(link.w_hz, value, RateMethod::generic_quadrature, error, 0.0, upper);
}

RateResult service_rate_for_model(const FadingModel& model, const LinkBudget& link) {
    switch (model.kind()) {
    case FadingModel::Kind::nakagami: return service_rate_nakagami(model.m(), link);
    case FadingModel::Kind::rayleigh: return service_rate_rayleigh_closed(link);
    case FadingModel::Kind::rician: return service_rate_rician(model.k(), link);
    case FadingModel::Kind::deterministic: return service_rate_awgn(link);
    case FadingModel::Kind::generic: return service_rate_generic(model, link);
    }
    throw std::logic_error("service_rate_for_model: unhandled model kind");
}

} // namespace chansvc
