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
// End-to-end acceptance suite. Each numbered check prints one PASS/FAIL
// line; the process exits nonzero if any check fails. Tolerances are pinned
// here, not calibrated at runtime.

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "chansvc/channel.hpp"
#include "chansvc/fluid_queue.hpp"
#include "chansvc/kahan.hpp"
#include "chansvc/mcsim.hpp"
#include "chansvc/rng.hpp"
#include "chansvc/service_rate.hpp"

using namespace chansvc;

namespace {

int g_failures = 0;
std::chrono::steady_clock::time_point g_mark = std::chrono::steady_clock::now();

void report(int criterion, bool pass, const std::string& label, const std::string& detail) {
    const auto now = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(now - g_mark).count();
    g_mark = now;
    std::printf("[%s] criterion %2d: %s (%s) [%.2f s]\n", pass ? "PASS" : "FAIL", criterion,
                label.c_str(), detail.c_str(), seconds);
    if (!pass) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// 1. General quadrature route against the Rayleigh closed form.
void criterion_closed_form_concordance() {
    double worst = 0.0;
    for (double rho : {0.1, 1.0, 10.0, 100.0}) {
        const LinkBudget link = LinkBudget::from_rho(rho, 1000.0);
        const double quad = service_rate_nakagami(1.0, link).c_star;
        const double closed = service_rate_rayleigh_closed(link).c_star;
        worst = std::max(worst, std::fabs(quad - closed) / closed);
    }
    report(1, worst <= 1e-8, "m=1 quadrature vs Rayleigh closed form, rho in {0.1,1,10,100}",
           "max rel dev " + fmt(worst) + " <= 1e-8");
}

// 2. Bracket a <= c0 <= rho over the (m, rho) grid.
void criterion_sandwich() {
    int violations = 0;
    int cells = 0;
    for (double m : {0.5, 1.0, 2.0, 5.0, 20.0, 100.0}) {
        for (double rho : {0.1, 1.0, 10.0, 100.0}) {
            const LinkBudget link = LinkBudget::from_rho(rho, 1000.0);
            const auto [lower, upper] = c0_bounds(m, link);
            const double c0 = c0_integral(m, rho / m);
            if (!(lower <= c0 && c0 <= upper)) ++violations;
            ++cells;
        }
    }
    report(2, violations == 0, "lower/upper bracket over 6x4 (m, rho) grid",
           std::to_string(violations) + " violations in " + std::to_string(cells) + " cells");
}

// 3. No-fading limit at m = 1e4.
void criterion_awgn_limit() {
    double worst = 0.0;
    for (double rho : {1.0, 10.0, 100.0}) {
        const LinkBudget link = LinkBudget::from_rho(rho, 1000.0);
        const double awgn = service_rate_awgn(link).c_star;
        const double quad = service_rate_nakagami(1e4, link).c_star;
        worst = std::max(worst, std::fabs(quad - awgn) / awgn);
    }
    report(3, worst <= 1e-2, "m=1e4 within 1% of W ln(1+rho), rho in {1,10,100}",
           "max rel dev " + fmt(worst));
}

// 4. Rician consistency: K=0 equals the m=1 route exactly; K=1e4 near the
//    no-fading limit; c* nondecreasing over K in [0, 100].
void criterion_rician() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const RateResult k0 = service_rate_rician(0.0, link);
    const RateResult m1 = service_rate_nakagami(1.0, link);
    const bool exact = (k0.c_star == m1.c_star);

    const double awgn = service_rate_awgn(link).c_star;
    const double k_large = service_rate_rician(1e4, link).c_star;
    const bool near_awgn = std::fabs(k_large - awgn) / awgn <= 1e-2;

    bool monotone = true;
    double prev = 0.0;
    for (double k = 0.0; k <= 100.0; k += 2.5) {
        const double c = service_rate_rician(k, link).c_star;
        if (c < prev) monotone = false;
        prev = c;
    }
    report(4, exact && near_awgn && monotone, "Rician K=0 exact, K=1e4 near AWGN, K-monotone",
           std::string(exact ? "exact" : "NOT exact") + ", K=1e4 dev " +
               fmt(std::fabs(k_large - awgn) / awgn) + ", monotone " +
               (monotone ? "yes" : "no"));
}

// 5. Linearity at desk scale: Rayleigh, rho=10, W=1000, dtau=1e-5, T=1,
//    100 rounds.
void criterion_linearity_desk() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    SimConfig cfg;
    cfg.delta_tau_s = 1e-5;
    cfg.horizon_s = 1.0;
    cfg.rounds = 100;
    cfg.base_seed = 3;
    cfg.checkpoints = 100;
    const ServiceTrace trace = simulate_service(FadingModel::rayleigh(), link, cfg);
    const double c_star = service_rate_rayleigh_closed(link).c_star;
    const LinearityStats stats = linearity_stats(trace, c_star);

    const bool dev_ok = stats.max_dev_ratio <= 5e-3;
    const bool slope_ok = std::fabs(stats.slope_fit - c_star) / c_star <= 1e-2;
    const bool intercept_ok = std::fabs(stats.intercept_fit) <= 1e-3 * c_star * cfg.horizon_s;
    const bool r2_ok = stats.r_squared >= 0.9999;
    report(5, dev_ok && slope_ok && intercept_ok && r2_ok,
           "desk-scale linearity: Rayleigh rho=10, dtau=1e-5, T=1s, 100 rounds",
           "max_dev_ratio " + fmt(stats.max_dev_ratio) + " <= 5e-3, slope off " +
               fmt(std::fabs(stats.slope_fit - c_star) / c_star) + " <= 1e-2, |intercept| " +
               fmt(std::fabs(stats.intercept_fit)) + " <= " + fmt(1e-3 * c_star) + ", r2 " +
               fmt(stats.r_squared));
}

// 6. Fine-interval spot check, 1e8 samples: the 15 dBW / 1 kHz / 1 km /
//    alpha=4 field set with the noise PSD at its thermal value (kT, 290 K).
//    At this operating point the per-round deviation of S(T)/T sits a factor
//    of a few under 1e-4.
void criterion_fine_interval() {
    LinkBudget link;
    link.pr = std::pow(10.0, 0.3);        // 3 dB
    link.pt_watts = std::pow(10.0, 1.5);  // 15 dBW
    link.w_hz = 1000.0;
    link.d_meters = 1000.0;
    link.alpha = 4.0;
    link.n0_w_per_hz = 1.380649e-23 * 290.0;  // kT at 290 K

    SimConfig cfg;
    cfg.delta_tau_s = 1e-7;
    cfg.horizon_s = 1.0;
    cfg.rounds = 10;
    cfg.base_seed = 424242;
    cfg.checkpoints = 10;
    const ServiceTrace trace = simulate_service(FadingModel::rayleigh(), link, cfg);
    const double c_star = service_rate_rayleigh_closed(link).c_star;
    const LinearityStats stats = linearity_stats(trace, c_star);
    report(6, stats.max_dev_ratio <= 1e-4,
           "paper-scale spot check: dtau=1e-7, T=1s, 10 rounds, thermal N0",
           "max_dev_ratio " + fmt(stats.max_dev_ratio) + " <= 1e-4, rho " +
               fmt(link.rho()));
}

// 7. Var[S(T)] scales linearly in dtau (ratio within [5, 20] for a decade).
void criterion_variance_scaling() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const FadingModel model = FadingModel::rayleigh();

    const auto variance_at = [&](double dtau) {
        SimConfig cfg;
        cfg.delta_tau_s = dtau;
        cfg.horizon_s = 1.0;
        cfg.rounds = 200;
        cfg.base_seed = 7070;
        cfg.checkpoints = 10;
        const ServiceTrace trace = simulate_service(model, link, cfg);
        double mean = 0.0;
        for (double f : trace.finals) mean += f;
        mean /= trace.finals.size();
        double acc = 0.0;
        for (double f : trace.finals) acc += (f - mean) * (f - mean);
        return acc / (trace.finals.size() - 1);
    };

    const double ratio = variance_at(1e-4) / variance_at(1e-5);
    report(7, ratio >= 5.0 && ratio <= 20.0, "Var[S(T)] ratio at dtau=1e-4 vs 1e-5, 200 rounds",
           "ratio " + fmt(ratio) + " in [5, 20]");
}

// 8. Arbitrary-density rate against a direct Monte Carlo oracle (lognormal,
//    sigma = 1, unit mean gain, 1e7 draws).
void criterion_generic_lognormal() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const double sigma = 1.0;
    const double mu = -0.5;
    const auto lognormal = [mu, sigma](double g) {
        const double z = (std::log(g) - mu) / sigma;
        return std::exp(-0.5 * z * z) / (g * sigma * std::sqrt(2.0 * 3.14159265358979323846));
    };
    const FadingModel model = FadingModel::generic(lognormal, 1e-9, 120.0);
    const double c_p = service_rate_generic(model, link).c_star;

    const long long n = 10000000;
    KahanSum sum;
    RngStream rng(909, 0);
    for (long long i = 0; i < n; ++i) {
        const double g = std::exp(mu + sigma * rng.next_normal());
        sum.add(instantaneous_capacity(g, link));
    }
    const double mc = sum.value() / static_cast<double>(n);
    const double dev = std::fabs(c_p - mc) / c_p;
    report(8, dev <= 5e-3, "lognormal c_p* vs 1e7-draw Monte Carlo",
           "rel dev " + fmt(dev) + " <= 5e-3, c_p* " + fmt(c_p));
}

// 9. Characteristic-function concentration for the criterion-5 run and the
//    deterministic channel.
void criterion_cf_concentration() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const double c_star = service_rate_rayleigh_closed(link).c_star;

    SimConfig cfg;
    cfg.delta_tau_s = 1e-5;
    cfg.horizon_s = 1.0;
    cfg.rounds = 100;
    cfg.base_seed = 3;
    cfg.checkpoints = 10;
    const ServiceTrace trace = simulate_service(FadingModel::rayleigh(), link, cfg);

    std::vector<double> lambdas;
    for (double target : {0.1, 1.0, 10.0}) lambdas.push_back(target / (c_star * cfg.horizon_s));
    double worst = 0.0;
    for (const auto& [lambda, dev] : empirical_cf(trace.finals, c_star, cfg.horizon_s, lambdas))
        worst = std::max(worst, dev);

    SimConfig det_cfg = cfg;
    det_cfg.rounds = 32;
    det_cfg.delta_tau_s = 1e-4;
    const double c_awgn = service_rate_awgn(link).c_star;
    const ServiceTrace det = simulate_service(FadingModel::deterministic(), link, det_cfg);
    std::vector<double> det_lambdas;
    for (double target : {0.1, 1.0, 10.0})
        det_lambdas.push_back(target / (c_awgn * det_cfg.horizon_s));
    double det_worst = 0.0;
    for (const auto& [lambda, dev] :
         empirical_cf(det.finals, c_awgn, det_cfg.horizon_s, det_lambdas))
        det_worst = std::max(det_worst, dev);

    report(9, worst <= 0.05 && det_worst <= 1e-9,
           "CF deviation <= 0.05 (Rayleigh) and <= 1e-9 (deterministic)",
           "Rayleigh max " + fmt(worst) + ", deterministic max " + fmt(det_worst));
}

// 10. No-leap scan: the largest increment shrinks monotonically and the tail
//     fraction reaches zero at the finest interval.
void criterion_increment_scan() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const std::vector<double> dts{1e-3, 1e-4, 1e-5};
    const auto rows = max_increment_scan(FadingModel::rayleigh(), link, dts, 1.0, 1313);
    bool monotone = true;
    bool tails_monotone = true;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].max_increment_nats >= rows[i - 1].max_increment_nats) monotone = false;
        if (rows[i].tail_fraction > rows[i - 1].tail_fraction) tails_monotone = false;
    }
    const bool zero_tail = rows.back().tail_fraction == 0.0;
    report(10, monotone && tails_monotone && zero_tail,
           "increment scan over dtau in {1e-3,1e-4,1e-5}",
           std::string("max-increment monotone ") + (monotone ? "yes" : "no") +
               ", tail fractions " + fmt(rows[0].tail_fraction) + "/" +
               fmt(rows[1].tail_fraction) + "/" + fmt(rows[2].tail_fraction));
}

// 11. Queue dichotomy: stable at 0.9 c*, linear growth at 1.1 c*.
void criterion_queue_dichotomy() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const FadingModel model = FadingModel::rayleigh();
    const double c_star = service_rate_rayleigh_closed(link).c_star;

    QueueConfig cfg;
    cfg.horizon_s = 1.0;
    cfg.delta_tau_s = 1e-5;

    cfg.source_rate_r = 0.9 * c_star;
    const QueueTrace stable = run_fluid_queue(model, link, cfg, 321);
    const QueueSummary stable_summary = summarize_queue(stable);
    double max_late = 0.0;
    for (std::size_t i = 0; i < stable.t_s.size(); ++i)
        if (stable.t_s[i] >= 0.1) max_late = std::max(max_late, stable.backlog_nats[i]);
    const bool stable_ok = stable_summary.mean_delay_s <= 1e-3 && max_late <= 1.0;

    cfg.source_rate_r = 1.1 * c_star;
    const QueueTrace loaded = run_fluid_queue(model, link, cfg, 321);
    const double slope = summarize_queue(loaded).backlog_slope_nats_per_s;
    const bool slope_ok = std::fabs(slope - 0.1 * c_star) <= 0.03 * 0.1 * c_star;

    report(11, stable_ok && slope_ok, "queue dichotomy at utilization 0.9 / 1.1",
           "mean delay " + fmt(stable_summary.mean_delay_s) + " s, late max backlog " +
               fmt(max_late) + " nats, overload slope " + fmt(slope) + " vs " +
               fmt(0.1 * c_star));
}

// 12. Byte-identical outputs across repeated runs and thread counts 1 and 8.
void criterion_reproducibility() {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const FadingModel model = FadingModel::rayleigh();
    SimConfig cfg;
    cfg.delta_tau_s = 1e-4;
    cfg.horizon_s = 0.5;
    cfg.rounds = 24;
    cfg.base_seed = 5150;
    cfg.checkpoints = 50;

    const std::string first = trace_to_csv(simulate_service(model, link, cfg));
    const std::string second = trace_to_csv(simulate_service(model, link, cfg));

    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const std::string one_thread = trace_to_csv(simulate_service(model, link, cfg));
    omp_set_num_threads(8);
    const std::string eight_threads = trace_to_csv(simulate_service(model, link, cfg));
    omp_set_num_threads(saved);

    QueueConfig qcfg;
    qcfg.source_rate_r = 1000.0;
    qcfg.horizon_s = 0.2;
    qcfg.delta_tau_s = 1e-4;
    const std::string queue_a = queue_to_csv(run_fluid_queue(model, link, qcfg, 5150));
    const std::string queue_b = queue_to_csv(run_fluid_queue(model, link, qcfg, 5150));

    const bool ok = first == second && first == one_thread && first == eight_threads &&
                    queue_a == queue_b;
    report(12, ok, "byte-identical CSV across reruns and thread counts 1/8",
           ok ? "identical" : "MISMATCH");
}

} // namespace

int main() {
    criterion_closed_form_concordance();
    criterion_sandwich();
    criterion_awgn_limit();
    criterion_rician();
    criterion_linearity_desk();
    criterion_paper_scale();
    criterion_variance_scaling();
    criterion_generic_lognormal();
    criterion_cf_concentration();
    criterion_increment_scan();
    criterion_queue_dichotomy();
    criterion_reproducibility();

    if (g_failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
