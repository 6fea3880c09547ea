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

#include "chansvc/mcsim.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>

#include "chansvc/errors.hpp"
#include "chansvc/io.hpp"
#include "chansvc/kahan.hpp"
#include "chansvc/service_rate.hpp"

namespace chansvc {

long long SimConfig::steps() const {
    return std::llround(horizon_s / delta_tau_s);
}

void SimConfig::validate() const {
    if (!(delta_tau_s > 0.0) || !std::isfinite(delta_tau_s))
        throw std::invalid_argument("SimConfig: delta_tau_s must be finite and > 0");
    if (!(horizon_s >= delta_tau_s) || !std::isfinite(horizon_s))
        throw std::invalid_argument("SimConfig: horizon_s must be >= delta_tau_s");
    if (rounds < 1)
        throw std::invalid_argument("SimConfig: rounds must be >= 1");
    const long long n = steps();
    if (n < 10)
        throw std::invalid_argument("SimConfig: horizon/delta_tau must give at least 10 steps");
    if (checkpoints < 1 || static_cast<long long>(checkpoints) > n)
        throw std::invalid_argument("SimConfig: checkpoints must be in [1, steps]");
    const double total = static_cast<double>(n) * static_cast<double>(rounds);
    if (total > sample_budget)
        throw budget_error(
            "SimConfig: steps*rounds = " + std::to_string(total) +
            " exceeds the sample budget of " + std::to_string(sample_budget) +
            "; raise sample_budget explicitly or use a coarser delta_tau/shorter horizon");
}

namespace {

// Draws one power gain per step; the model switch is hoisted out of the
// inner loop.
std::function<double(RngStream&)> make_gain_sampler(const FadingModel& model, double pr) {
    switch (model.kind()) {
    case FadingModel::Kind::deterministic:
        return [pr](RngStream&) { return pr; };
    case FadingModel::Kind::generic: {
        if (!model.has_sampler())
            throw unsupported_operation(
                "simulate_service: generic model has no sampling method; construct it with "
                "build_sampler=true (inverse-CDF tabulation)");
        const auto* table = model.sampler();
        return [table](RngStream& rng) { return table->sample(rng.next_double()); };
    }
    default: {
        const double m = model.effective_m();
        const double scale = pr / m;
        return [m, scale](RngStream& rng) { return gamma_variate(rng, m, scale); };
    }
    }
}

struct RoundOutput {
    std::vector<double> s_at_checkpoints;  // size checkpoints + 1
    double final_s = 0.0;
};

RoundOutput run_round(const FadingModel& model, const LinkBudget& link, const SimConfig& cfg,
                      const std::vector<long long>& checkpoint_steps, std::uint64_t round_index) {
    RngStream rng(cfg.base_seed, round_index);
    const auto draw = make_gain_sampler(model, link.pr);
    const double snr_scale = link.snr_per_unit_gain();
    const double w = link.w_hz;
    const double dt = cfg.delta_tau_s;
    const long long n = cfg.steps();

    RoundOutput out;
    out.s_at_checkpoints.resize(checkpoint_steps.size());
    out.s_at_checkpoints[0] = 0.0;

    // Accumulate the dimensionless sum of log terms and scale by W*dtau when
    // reading off a checkpoint; one multiplication instead of n.
    KahanSum acc;
    std::size_t next_cp = 1;
    for (long long step = 1; step <= n; ++step) {
        const double gain = draw(rng);
        acc.add(std::log1p(gain * snr_scale));
        while (next_cp < checkpoint_steps.size() && checkpoint_steps[next_cp] == step) {
            out.s_at_checkpoints[next_cp] = w * dt * acc.value();
            ++next_cp;
        }
    }
    out.final_s = w * dt * acc.value();
    return out;
}

} // namespace

ServiceTrace simulate_service(const FadingModel& model, const LinkBudget& link,
                              const SimConfig& cfg, ExecutionPolicy policy) {
    link.validate();
    cfg.validate();
    if (model.kind() == FadingModel::Kind::generic && !model.has_sampler())
        throw unsupported_operation(
            "simulate_service: generic model has no sampling method; construct it with "
            "build_sampler=true (inverse-CDF tabulation)");

    const long long n = cfg.steps();
    std::vector<long long> checkpoint_steps(cfg.checkpoints + 1);
    for (int j = 0; j <= cfg.checkpoints; ++j)
        checkpoint_steps[j] = std::llround(static_cast<double>(j) * static_cast<double>(n) /
                                           cfg.checkpoints);
    checkpoint_steps.front() = 0;
    checkpoint_steps.back() = n;

    ServiceTrace trace;
    trace.checkpoint_times.resize(checkpoint_steps.size());
    for (std::size_t j = 0; j < checkpoint_steps.size(); ++j)
        trace.checkpoint_times[j] = static_cast<double>(checkpoint_steps[j]) * cfg.delta_tau_s;
    trace.s_cum.resize(cfg.rounds);
    trace.finals.resize(cfg.rounds);
    trace.config = cfg;
    trace.link = link;
    trace.model_desc = model.describe();
    trace.rng_algorithm = std::string(kRngAlgorithmId);

    if (policy == ExecutionPolicy::parallel) {
        #pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < cfg.rounds; ++r) {
            RoundOutput out = run_round(model, link, cfg, checkpoint_steps,
                                        static_cast<std::uint64_t>(r));
            trace.s_cum[r] = std::move(out.s_at_checkpoints);
            trace.finals[r] = out.final_s;
        }
    } else {
        for (int r = 0; r < cfg.rounds; ++r) {
            RoundOutput out = run_round(model, link, cfg, checkpoint_steps,
                                        static_cast<std::uint64_t>(r));
            trace.s_cum[r] = std::move(out.s_at_checkpoints);
            trace.finals[r] = out.final_s;
        }
    }
    return trace;
}

LinearityStats linearity_stats(const ServiceTrace& trace, double c_star) {
    const std::size_t rounds = trace.finals.size();
    if (rounds < 2)
        throw insufficient_data("linearity_stats: need at least 2 rounds");
    if (trace.checkpoint_times.size() < 2)
        throw insufficient_data("linearity_stats: need more than a single checkpoint");

    LinearityStats stats;

    KahanSum mean_acc;
    for (double f : trace.finals) mean_acc.add(f);
    const double mean = mean_acc.value() / static_cast<double>(rounds);
    stats.mean_final = mean;

    KahanSum var_acc;
    double max_abs_dev = 0.0;
    double max_abs_dev_cstar = 0.0;
    const double target = c_star * trace.checkpoint_times.back();
    for (double f : trace.finals) {
        const double d = f - mean;
        var_acc.add(d * d);
        max_abs_dev = std::max(max_abs_dev, std::fabs(d));
        max_abs_dev_cstar = std::max(max_abs_dev_cstar, std::fabs(f - target));
    }
    stats.std_final = std::sqrt(var_acc.value() / static_cast<double>(rounds - 1));
    stats.max_dev_ratio = (mean != 0.0) ? max_abs_dev / std::fabs(mean) : 0.0;
    stats.max_dev_ratio_vs_cstar = (target != 0.0) ? max_abs_dev_cstar / std::fabs(target) : 0.0;

    // Pooled least squares over every (t_k, S_r(t_k)) point.
    KahanSum st, ss, stt, sts, sss;
    const double count = static_cast<double>(rounds * trace.checkpoint_times.size());
    for (std::size_t r = 0; r < rounds; ++r) {
        for (std::size_t j = 0; j < trace.checkpoint_times.size(); ++j) {
            const double t = trace.checkpoint_times[j];
            const double s = trace.s_cum[r][j];
            st.add(t);
            ss.add(s);
            stt.add(t * t);
            sts.add(t * s);
            sss.add(s * s);
        }
    }
    const double tbar = st.value() / count;
    const double sbar = ss.value() / count;
    const double cov_ts = sts.value() / count - tbar * sbar;
    const double var_t = stt.value() / count - tbar * tbar;
    const double var_s = sss.value() / count - sbar * sbar;
    stats.slope_fit = (var_t > 0.0) ? cov_ts / var_t : 0.0;
    stats.intercept_fit = sbar - stats.slope_fit * tbar;
    if (var_s > 0.0 && var_t > 0.0) {
        const double corr2 = (cov_ts * cov_ts) / (var_t * var_s);
        stats.r_squared = std::min(1.0, corr2);
    } else {
        stats.r_squared = 1.0;  // degenerate but perfectly explained
    }
    return stats;
}

std::vector<std::pair<double, double>> empirical_cf(std::span<const double> finals,
                                                    double c_star, double horizon_s,
                                                    std::span<const double> lambda_grid) {
    if (lambda_grid.empty())
        throw std::invalid_argument("empirical_cf: lambda grid must not be empty");
    if (finals.size() < 30)
        throw std::invalid_argument("empirical_cf: need at least 30 rounds");
    for (double lambda : lambda_grid) {
        if (std::fabs(lambda * c_star * horizon_s) > 1e3)
            throw std::invalid_argument(
                "empirical_cf: |lambda * c_star * horizon| must be <= 1e3 to avoid phase "
                "aliasing");
    }

    std::vector<std::pair<double, double>> out;
    out.reserve(lambda_grid.size());
    for (double lambda : lambda_grid) {
        KahanSum re, im;
        for (double s : finals) {
            const double phase = lambda * s;
            re.add(std::cos(phase));
            im.add(std::sin(phase));
        }
        const double inv_r = 1.0 / static_cast<double>(finals.size());
        const std::complex<double> phi_hat(re.value() * inv_r, im.value() * inv_r);
        const double ref_phase = lambda * c_star * horizon_s;
        const std::complex<double> phi_ref(std::cos(ref_phase), std::sin(ref_phase));
        out.emplace_back(lambda, std::abs(phi_hat - phi_ref));
    }
    return out;
}

std::vector<IncrementScanRow> max_increment_scan(const FadingModel& model,
                                                 const LinkBudget& link,
                                                 std::span<const double> delta_tau_list,
                                                 double horizon_s, std::uint64_t seed,
                                                 double epsilon) {
    link.validate();
    if (delta_tau_list.empty())
        throw std::invalid_argument("max_increment_scan: delta_tau list must not be empty");
    for (double dt : delta_tau_list) {
        if (!(dt > 0.0))
            throw std::invalid_argument("max_increment_scan: delta_tau values must be > 0");
        const double ratio = horizon_s / dt;
        if (std::fabs(ratio - std::llround(ratio)) > 1e-9 * ratio)
            throw std::invalid_argument(
                "max_increment_scan: each delta_tau must divide the horizon");
    }

    if (epsilon <= 0.0) {
        const RateResult rate = service_rate_for_model(model, link);
        epsilon = rate.c_star * 1e-4 * horizon_s;
    }

    const double snr_scale = link.snr_per_unit_gain();
    const double w = link.w_hz;

    std::vector<IncrementScanRow> rows;
    rows.reserve(delta_tau_list.size());
    for (std::size_t i = 0; i < delta_tau_list.size(); ++i) {
        const double dt = delta_tau_list[i];
        const long long n = std::llround(horizon_s / dt);
        RngStream rng(seed, i);
        const auto draw = make_gain_sampler(model, link.pr);

        double max_inc = 0.0;
        long long above = 0;
        for (long long step = 0; step < n; ++step) {
            const double inc = w * dt * std::log1p(draw(rng) * snr_scale);
            max_inc = std::max(max_inc, inc);
            if (inc > epsilon) ++above;
        }
        IncrementScanRow row;
        row.delta_tau_s = dt;
        row.max_increment_nats = max_inc;
        row.tail_fraction = static_cast<double>(above) / static_cast<double>(n);
        row.epsilon_nats = epsilon;
        rows.push_back(row);
    }
    return rows;
}

std::string trace_to_csv(const ServiceTrace& trace) {
    std::string out = "round,t_s,s_nats\n";
    for (std::size_t r = 0; r < trace.s_cum.size(); ++r) {
        for (std::size_t j = 0; j < trace.checkpoint_times.size(); ++j) {
            out += std::to_string(r);
            out += ',';
            out += format_double(trace.checkpoint_times[j]);
            out += ',';
            out += format_double(trace.s_cum[r][j]);
            out += '\n';
        }
    }
    return out;
}

nlohmann::json stats_to_json(const LinearityStats& stats, const ServiceTrace& trace,
                             double c_star) {
    nlohmann::json j;
    j["mean_final_nats"] = stats.mean_final;
    j["std_final_nats"] = stats.std_final;
    j["max_dev_ratio"] = stats.max_dev_ratio;
    j["max_dev_ratio_vs_cstar"] = stats.max_dev_ratio_vs_cstar;
    j["slope_fit_nats_per_s"] = stats.slope_fit;
    j["intercept_fit_nats"] = stats.intercept_fit;
    j["r_squared"] = stats.r_squared;
    j["c_star_nats_per_s"] = c_star;
    j["model"] = trace.model_desc;
    j["rng_algorithm"] = trace.rng_algorithm;
    j["sim"] = {{"delta_tau_s", trace.config.delta_tau_s},
                {"horizon_s", trace.config.horizon_s},
                {"rounds", trace.config.rounds},
                {"checkpoints", trace.config.checkpoints},
                {"base_seed", trace.config.base_seed},
                {"sample_budget", trace.config.sample_budget}};
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
