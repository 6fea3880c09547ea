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

#include "chansvc/fluid_queue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chansvc/errors.hpp"
#include "chansvc/io.hpp"
#include "chansvc/kahan.hpp"

namespace chansvc {

namespace {
constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
}

long long QueueConfig::steps() const {
    return std::llround(horizon_s / delta_tau_s);
}

void QueueConfig::validate() const {
    if (!(source_rate_r >= 0.0) || !std::isfinite(source_rate_r))
        throw std::invalid_argument("QueueConfig: source_rate_r must be finite and >= 0");
    if (!(initial_backlog >= 0.0) || !std::isfinite(initial_backlog))
        throw std::invalid_argument("QueueConfig: initial_backlog must be finite and >= 0");
    if (!(delta_tau_s > 0.0) || !std::isfinite(delta_tau_s))
        throw std::invalid_argument("QueueConfig: delta_tau_s must be finite and > 0");
    if (!(horizon_s >= delta_tau_s) || !std::isfinite(horizon_s))
        throw std::invalid_argument("QueueConfig: horizon_s must be >= delta_tau_s");
    if (max_trace_points < 2)
        throw std::invalid_argument("QueueConfig: max_trace_points must be >= 2");
    if (static_cast<double>(steps()) > sample_budget)
        throw budget_error("QueueConfig: steps exceed the sample budget; raise sample_budget "
                           "explicitly or coarsen delta_tau");
}

QueueTrace run_fluid_queue(const FadingModel& model, const LinkBudget& link,
                           const QueueConfig& cfg, std::uint64_t seed) {
    link.validate();
    cfg.validate();
    if (model.kind() == FadingModel::Kind::generic && !model.has_sampler())
        throw unsupported_operation(
            "run_fluid_queue: generic model has no sampling method; construct it with "
            "build_sampler=true (inverse-CDF tabulation)");

    const long long n = cfg.steps();
    const long long stride = std::max<long long>(1, (n + cfg.max_trace_points - 1) /
                                                        cfg.max_trace_points);

    QueueTrace trace;
    trace.config = cfg;
    trace.link = link;
    trace.model_desc = model.describe();
    trace.rng_algorithm = std::string(kRngAlgorithmId);

    const std::size_t expected = static_cast<std::size_t>(n / stride + 2);
    trace.t_s.reserve(expected);
    trace.backlog_nats.reserve(expected);
    trace.s_tilde_nats.reserve(expected);

    RngStream rng(seed, 0);
    const double snr_scale = link.snr_per_unit_gain();
    const double w = link.w_hz;
    const double dt = cfg.delta_tau_s;
    const double r_dt = cfg.source_rate_r * dt;
    const double b0 = cfg.initial_backlog;

    // S~ is accumulated compensated; the backlog is then read off the exact
    // conservation identity B = B0 + R t - S~ (clamped against tiny negative
    // rounding) so the conservation check holds at every recorded step.
    KahanSum served;
    double backlog = b0;

    trace.t_s.push_back(0.0);
    trace.backlog_nats.push_back(b0);
    trace.s_tilde_nats.push_back(0.0);

    for (long long step = 1; step <= n; ++step) {
        const double gain = sample_power_gain(model, link.pr, rng);
        const double capability = w * dt * std::log1p(gain * snr_scale);
        const double available = backlog + r_dt;  // arrivals credited first
        const double drained = std::min(available, capability);
        served.add(drained);
        const double arrivals = cfg.source_rate_r * (static_cast<double>(step) * dt);
        backlog = std::max(0.0, b0 + arrivals - served.value());

        if (step % stride == 0 || step == n) {
            trace.t_s.push_back(static_cast<double>(step) * dt);
            trace.backlog_nats.push_back(backlog);
            trace.s_tilde_nats.push_back(served.value());
        }
    }

    // Virtual delay per recorded point by a single forward sweep.
    const std::size_t count = trace.t_s.size();
    trace.delay_s.assign(count, kNan);
    std::size_t j = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const double target = b0 + cfg.source_rate_r * trace.t_s[i];
        if (trace.s_tilde_nats[i] >= target) {
            trace.delay_s[i] = 0.0;
            continue;
        }
        if (j < i) j = i;
        while (j < count && trace.s_tilde_nats[j] < target) ++j;
        if (j == count) {
            trace.delay_s[i] = kNan;  // censored: drain time beyond the horizon
            continue;
        }
        double t_hit = trace.t_s[j];
        if (j > 0 && trace.s_tilde_nats[j] > trace.s_tilde_nats[j - 1]) {
            const double frac = (target - trace.s_tilde_nats[j - 1]) /
                                (trace.s_tilde_nats[j] - trace.s_tilde_nats[j - 1]);
            t_hit = trace.t_s[j - 1] + frac * (trace.t_s[j] - trace.t_s[j - 1]);
        }
        trace.delay_s[i] = std::max(0.0, t_hit - trace.t_s[i]);
    }
    return trace;
}

double virtual_delay(const QueueTrace& trace, double t) {
    if (trace.t_s.empty())
        throw insufficient_data("virtual_delay: empty trace");
    if (t < trace.t_s.front() || t > trace.t_s.back())
        throw std::invalid_argument("virtual_delay: t outside the trace horizon");

    const double b0 = trace.config.initial_backlog;
    const double target = b0 + trace.config.source_rate_r * t;
    const auto it = std::lower_bound(trace.s_tilde_nats.begin(), trace.s_tilde_nats.end(), target);
    if (it == trace.s_tilde_nats.end())
        return kNan;  // censored
    const std::size_t j = static_cast<std::size_t>(it - trace.s_tilde_nats.begin());
    double t_hit = trace.t_s[j];
    if (j > 0 && trace.s_tilde_nats[j] > trace.s_tilde_nats[j - 1]) {
        const double frac = (target - trace.s_tilde_nats[j - 1]) /
                            (trace.s_tilde_nats[j] - trace.s_tilde_nats[j - 1]);
        t_hit = trace.t_s[j - 1] + frac * (trace.t_s[j] - trace.t_s[j - 1]);
    }
    return std::max(0.0, t_hit - t);
}

QueueSummary summarize_queue(const QueueTrace& trace) {
    QueueSummary summary;
    const std::size_t n = trace.t_s.size();
    if (n == 0) return summary;

    KahanSum backlog_sum, delay_sum;
    long long delay_count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        summary.max_backlog_nats = std::max(summary.max_backlog_nats, trace.backlog_nats[i]);
        backlog_sum.add(trace.backlog_nats[i]);
        if (std::isnan(trace.delay_s[i])) {
            ++summary.censored_count;
        } else {
            delay_sum.add(trace.delay_s[i]);
            ++delay_count;
        }
    }
    summary.mean_backlog_nats = backlog_sum.value() / static_cast<double>(n);
    summary.mean_delay_s =
        delay_count > 0 ? delay_sum.value() / static_cast<double>(delay_count) : 0.0;

    KahanSum st, sb, stt, stb;
    for (std::size_t i = 0; i < n; ++i) {
        st.add(trace.t_s[i]);
        sb.add(trace.backlog_nats[i]);
        stt.add(trace.t_s[i] * trace.t_s[i]);
        stb.add(trace.t_s[i] * trace.backlog_nats[i]);
    }
    const double count = static_cast<double>(n);
    const double tbar = st.value() / count;
    const double bbar = sb.value() / count;
    const double var_t = stt.value() / count - tbar * tbar;
    const double cov = stb.value() / count - tbar * bbar;
    summary.backlog_slope_nats_per_s = var_t > 0.0 ? cov / var_t : 0.0;
    return summary;
}

std::string queue_to_csv(const QueueTrace& trace) {
    std::string out = "t_s,backlog_nats,s_tilde_nats,delay_s\n";
    for (std::size_t i = 0; i < trace.t_s.size(); ++i) {
        out += format_double(trace.t_s[i]);
        out += ',';
        out += format_double(trace.backlog_nats[i]);
        out += ',';
        out += format_double(trace.s_tilde_nats[i]);
        out += ',';
        out += format_double(trace.delay_s[i]);
        out += '\n';
    }
    return out;
}

nlohmann::json queue_summary_to_json(const QueueSummary& summary, const QueueTrace& trace) {
    nlohmann::json j;
    j["max_backlog_nats"] = summary.max_backlog_nats;
    j["mean_backlog_nats"] = summary.mean_backlog_nats;
    j["mean_delay_s"] = summary.mean_delay_s;
    j["backlog_slope_nats_per_s"] = summary.backlog_slope_nats_per_s;
    j["censored_count"] = summary.censored_count;
    j["model"] = trace.model_desc;
    j["rng_algorithm"] = trace.rng_algorithm;
    j["queue"] = {{"source_rate_nats_per_s", trace.config.source_rate_r},
                  {"initial_backlog_nats", trace.config.initial_backlog},
                  {"horizon_s", trace.config.horizon_s},
                  {"delta_tau_s", trace.config.delta_tau_s}};
    j["link"] = {{"pt_watts", trace.link.pt_watts},
                 {"n0_w_per_hz", trace.link.n0_w_per_hz},
                 {"w_hz", trace.link.w_hz},
                 {"d_meters", trace.link.d_meters},
                 {"alpha", trace.link.alpha},
                 {"pr", trace.link.pr},
                 {"rho", trace.link.rho()}};
    return j;
}

} // namespace chansvc
