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

#include "chansvc/channel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "chansvc/errors.hpp"
#include "chansvc/quadrature.hpp"
#include "chansvc/specfun.hpp"

namespace chansvc {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw std::domain_error(message);
}

} // namespace

double LinkBudget::rho() const {
    return pr * pt_watts / (w_hz * n0_w_per_hz * std::pow(d_meters, alpha));
}

double LinkBudget::snr_per_unit_gain() const {
    return pt_watts / (w_hz * n0_w_per_hz * std::pow(d_meters, alpha));
}

void LinkBudget::validate() const {
    if (!(pt_watts >= 0.0) || !std::isfinite(pt_watts))
        throw std::invalid_argument("LinkBudget: pt_watts must be finite and >= 0");
    if (!(n0_w_per_hz > 0.0) || !std::isfinite(n0_w_per_hz))
        throw std::invalid_argument("LinkBudget: n0_w_per_hz must be finite and > 0");
    if (!(w_hz > 0.0) || !std::isfinite(w_hz))
        throw std::invalid_argument("LinkBudget: w_hz must be finite and > 0");
    if (!(d_meters > 0.0) || !std::isfinite(d_meters))
        throw std::invalid_argument("LinkBudget: d_meters must be finite and > 0");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("LinkBudget: alpha must be finite and >= 0");
    if (!(pr > 0.0) || !std::isfinite(pr))
        throw std::invalid_argument("LinkBudget: pr must be finite and > 0");
    const double r = rho();
    if (!std::isfinite(r) || r < 0.0)
        throw std::invalid_argument("LinkBudget: derived rho must be finite and >= 0");
}

LinkBudget LinkBudget::from_rho(double rho, double w_hz) {
    if (!(rho >= 0.0) || !std::isfinite(rho))
        throw std::invalid_argument("LinkBudget: rho must be finite and >= 0");
    if (!(w_hz > 0.0) || !std::isfinite(w_hz))
        throw std::invalid_argument("LinkBudget: w_hz must be finite and > 0");
    LinkBudget link;
    link.pt_watts = rho;
    link.n0_w_per_hz = 1.0 / w_hz;
    link.w_hz = w_hz;
    link.d_meters = 1.0;
    link.alpha = 0.0;
    link.pr = 1.0;
    return link;
}

double rician_k_to_nakagami_m(double k) {
    require(std::isfinite(k) && k >= 0.0, "rician_k_to_nakagami_m: K must be finite and >= 0");
    return (k + 1.0) * (k + 1.0) / (2.0 * k + 1.0);
}

// ---------------------------------------------------------------------------
// FadingModel construction

FadingModel FadingModel::nakagami(double m) {
    if (!(m >= 0.5) || !std::isfinite(m))
        throw std::invalid_argument("FadingModel: m must be >= 0.5");
    FadingModel model;
    model.kind_ = Kind::nakagami;
    model.param_ = m;
    return model;
}

FadingModel FadingModel::rayleigh() {
    FadingModel model;
    model.kind_ = Kind::rayleigh;
    model.param_ = 1.0;
    return model;
}

FadingModel FadingModel::rician(double k) {
    if (!(k >= 0.0) || !std::isfinite(k))
        throw std::invalid_argument("FadingModel: K must be >= 0");
    FadingModel model;
    model.kind_ = Kind::rician;
    model.param_ = k;
    return model;
}

FadingModel FadingModel::deterministic() {
    FadingModel model;
    model.kind_ = Kind::deterministic;
    return model;
}

FadingModel FadingModel::generic(std::function<double(double)> pdf, double support_lo,
                                 double support_hi, bool build_sampler) {
    if (!pdf)
        throw std::invalid_argument("FadingModel: generic pdf must be callable");
    if (!(support_lo >= 0.0) || !(support_hi > support_lo) || !std::isfinite(support_hi))
        throw std::invalid_argument("FadingModel: generic support must satisfy 0 <= lo < hi < inf");

    // Normalization check: mass over the support hint must be 1 +- 1e-6,
    // which also bounds whatever tail the hint cuts off.
    std::vector<double> knots;
    const double lo = support_lo;
    const double hi = support_hi;
    knots.push_back(lo);
    const double anchor = std::max(lo, hi * 1e-9);
    for (double t = anchor; t < hi; t *= 8.0)
        if (t > lo) knots.push_back(t);
    knots.push_back(hi);
    std::sort(knots.begin(), knots.end());

    QuadratureOptions opts;
    opts.rel_tol = 1e-9;
    const QuadratureResult norm = integrate_adaptive(pdf, knots, opts);
    if (std::fabs(norm.value - 1.0) > 1e-6)
        throw std::invalid_argument(
            "FadingModel: generic pdf must integrate to 1 +- 1e-6 over its support (got " +
            std::to_string(norm.value) + ")");

    FadingModel model;
    model.kind_ = Kind::generic;
    model.pdf_ = std::move(pdf);
    model.support_lo_ = support_lo;
    model.support_hi_ = support_hi;
    model.normalization_ = norm.value;
    if (build_sampler)
        model.table_ = channel_detail::InverseCdfTable::build(model.pdf_, support_lo, support_hi);
    return model;
}

double FadingModel::m() const {
    if (kind_ != Kind::nakagami)
        throw std::logic_error("FadingModel: m() is only defined for the Nakagami kind");
    return param_;
}

double FadingModel::k() const {
    if (kind_ != Kind::rician)
        throw std::logic_error("FadingModel: k() is only defined for the Rician kind");
    return param_;
}

double FadingModel::effective_m() const {
    switch (kind_) {
    case Kind::nakagami: return param_;
    case Kind::rayleigh: return 1.0;
    case Kind::rician: return rician_k_to_nakagami_m(param_);
    default:
        throw std::logic_error("FadingModel: no Nakagami-equivalent shape for this kind");
    }
}

const std::function<double(double)>& FadingModel::generic_pdf() const {
    if (kind_ != Kind::generic)
        throw std::logic_error("FadingModel: generic_pdf() requires the generic kind");
    return pdf_;
}

std::pair<double, double> FadingModel::support() const {
    if (kind_ != Kind::generic)
        throw std::logic_error("FadingModel: support() requires the generic kind");
    return {support_lo_, support_hi_};
}

std::string FadingModel::describe() const {
    std::ostringstream out;
    switch (kind_) {
    case Kind::nakagami: out << "nakagami(m=" << param_ << ")"; break;
    case Kind::rayleigh: out << "rayleigh"; break;
    case Kind::rician: out << "rician(K=" << param_ << ")"; break;
    case Kind::deterministic: out << "deterministic"; break;
    case Kind::generic:
        out << "generic(support=[" << support_lo_ << "," << support_hi_ << "]"
            << (table_ ? ",sampled" : "") << ")";
        break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Densities and samplers

double power_gain_pdf(const FadingModel& model, double pr, double gamma) {
    require(std::isfinite(gamma) && gamma >= 0.0, "power_gain_pdf: gamma must be >= 0");
    require(std::isfinite(pr) && pr > 0.0, "power_gain_pdf: pr must be > 0");

    switch (model.kind()) {
    case FadingModel::Kind::generic: {
        const auto [lo, hi] = model.support();
        if (gamma < lo || gamma > hi) return 0.0;
        return model.generic_pdf()(gamma);
    }
    case FadingModel::Kind::deterministic:
        throw unsupported_operation(
            "power_gain_pdf: the deterministic model has no density (point mass at pr)");
    default: break;
    }

    const double m = model.effective_m();
    if (gamma == 0.0) {
        if (m < 1.0) return std::numeric_limits<double>::infinity();  // boundary singularity
        if (m == 1.0) return 1.0 / pr;
        return 0.0;
    }
    // log-space form of (m/pr)^m gamma^(m-1) exp(-m gamma/pr) / Gamma(m)
    const double log_pdf = m * std::log(m / pr) + (m - 1.0) * std::log(gamma) -
                           m * gamma / pr - ln_gamma(m);
    return std::exp(log_pdf);
}

double gamma_variate(RngStream& stream, double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::domain_error("gamma_variate: shape and scale must be > 0");

    if (shape < 1.0) {
        const double boosted = gamma_variate(stream, shape + 1.0, 1.0);
        const double u = stream.next_double();
        return scale * boosted * std::pow(u, 1.0 / shape);
    }

    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = stream.next_normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_double();
        if (u < 1.0 - 0.0331 * x * x * x * x)
            return scale * d * v;
        if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
            return scale * d * v;
    }
}

double sample_power_gain(const FadingModel& model, double pr, RngStream& stream) {
    require(std::isfinite(pr) && pr > 0.0, "sample_power_gain: pr must be > 0");

    switch (model.kind()) {
    case FadingModel::Kind::deterministic:
        return pr;
    case FadingModel::Kind::generic: {
        if (!model.has_sampler())
            throw unsupported_operation(
                "sample_power_gain: generic model has no sampling method; construct it with "
                "build_sampler=true to tabulate the inverse CDF");
        // The table is built on the model's own support scale; generic
        // models carry their mean inside the pdf, pr is not reapplied.
        return model.sampler()->sample(stream.next_double());
    }
    default: {
        const double m = model.effective_m();
        return gamma_variate(stream, m, pr / m);
    }
    }
}

double instantaneous_capacity(double gamma, const LinkBudget& link) {
    require(std::isfinite(gamma) && gamma >= 0.0, "instantaneous_capacity: gamma must be >= 0");
    return link.w_hz * std::log1p(gamma * link.snr_per_unit_gain());
}

// ---------------------------------------------------------------------------
// Inverse-CDF table

namespace channel_detail {

std::shared_ptr<const InverseCdfTable> InverseCdfTable::build(
    const std::function<double(double)>& pdf, double support_lo, double support_hi, int nodes) {
    if (nodes < 16)
        throw std::invalid_argument("InverseCdfTable: need at least 16 nodes");

    // Log-spaced gamma nodes. A zero lower end is replaced by a tiny strictly
    // positive anchor; the sliver below it is sampled linearly.
    const double lo = std::max(support_lo, support_hi * 1e-12);
    const double ratio = std::pow(support_hi / lo, 1.0 / (nodes - 1));

    std::vector<double> g(nodes);
    g[0] = lo;
    for (int i = 1; i < nodes; ++i) g[i] = g[i - 1] * ratio;
    g[nodes - 1] = support_hi;

    // Cumulative mass via the fixed 15-point rule per segment.
    std::vector<double> cdf(nodes);
    {
        QuadratureOptions opts;
        opts.rel_tol = 1e-9;
        opts.max_depth = 16;
        double head = 0.0;
        if (support_lo < lo)
            head = integrate_adaptive(pdf, {support_lo, lo}, opts).value;
        cdf[0] = head;
        for (int i = 1; i < nodes; ++i)
            cdf[i] = cdf[i - 1] + integrate_adaptive(pdf, {g[i - 1], g[i]}, opts).value;
    }
    const double total = cdf[nodes - 1];
    if (!(total > 0.0) || !std::isfinite(total))
        throw std::invalid_argument("InverseCdfTable: pdf has no usable mass on the support");

    auto table = std::make_shared<InverseCdfTable>();
    table->u_.reserve(nodes);
    table->gamma_.reserve(nodes);
    for (int i = 0; i < nodes; ++i) {
        const double u = cdf[i] / total;
        if (!table->u_.empty() && u <= table->u_.back())
            continue;  // drop zero-mass segments, interpolation needs strict increase
        table->u_.push_back(u);
        table->gamma_.push_back(g[i]);
    }

    // Fritsch-Carlson monotone tangents for gamma as a function of u.
    const std::size_t n = table->u_.size();
    table->slope_.assign(n, 0.0);
    if (n >= 2) {
        std::vector<double> secant(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i)
            secant[i] = (table->gamma_[i + 1] - table->gamma_[i]) /
                        (table->u_[i + 1] - table->u_[i]);
        table->slope_[0] = secant[0];
        table->slope_[n - 1] = secant[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (secant[i - 1] * secant[i] <= 0.0) {
                table->slope_[i] = 0.0;
            } else {
                const double h0 = table->u_[i] - table->u_[i - 1];
                const double h1 = table->u_[i + 1] - table->u_[i];
                const double w1 = 2.0 * h1 + h0;
                const double w2 = h1 + 2.0 * h0;
                table->slope_[i] = (w1 + w2) / (w1 / secant[i - 1] + w2 / secant[i]);
            }
        }
    }
    return table;
}

double InverseCdfTable::sample(double u) const {
    if (u <= u_.front()) {
        // Linear ramp over the sliver of mass below the first node.
        return gamma_.front() * (u_.front() > 0.0 ? u / u_.front() : 1.0);
    }
    if (u >= u_.back())
        return gamma_.back();

    const auto it = std::upper_bound(u_.begin(), u_.end(), u);
    const std::size_t i = static_cast<std::size_t>(it - u_.begin()) - 1;
    const double h = u_[i + 1] - u_[i];
    const double t = (u - u_[i]) / h;
    const double y0 = gamma_[i];
    const double y1 = gamma_[i + 1];
    const double m0 = slope_[i] * h;
    const double m1 = slope_[i + 1] * h;
    const double t2 = t * t;
    const double t3 = t2 * t;
    return (2.0 * t3 - 3.0 * t2 + 1.0) * y0 + (t3 - 2.0 * t2 + t) * m0 +
           (-2.0 * t3 + 3.0 * t2) * y1 + (t3 - t2) * m1;
}

} // namespace channel_detail

} // namespace chansvc
