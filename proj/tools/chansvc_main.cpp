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
// Subcommands: rate, simulate, queue, sweep, cf-check.
// Exit codes: 0 success, 2 config error, 3 numerical failure, 4 budget refusal.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "chansvc/errors.hpp"
#include "chansvc/fluid_queue.hpp"
#include "chansvc/io.hpp"
#include "chansvc/mcsim.hpp"
#include "chansvc/run_config.hpp"
#include "chansvc/service_rate.hpp"

namespace {

using namespace chansvc;

constexpr double kLog2E = 1.4426950408889634;

struct GlobalOpts {
    std::string config_path;
    std::string out_dir = ".";
    std::string format = "text";
    bool out_given = false;
    bool serial = false;

    bool json_stdout() const { return format == "json"; }
};

struct Overrides {
    std::optional<std::string> model;
    std::optional<double> m, k, rho, pr_db, pt_dbw, n0, d_m, alpha, w_hz;
    std::optional<double> delta_tau, horizon, sample_budget;
    std::optional<int> rounds, checkpoints;
    std::optional<std::uint64_t> seed;
    std::optional<double> source_rate, utilization, initial_backlog;
};

void add_common_options(CLI::App* cmd, GlobalOpts& g, Overrides& o) {
    cmd->add_option("--config", g.config_path, "JSON config file; flags override file values");
    cmd->add_option("--out", g.out_dir, "output directory")->each([&g](const std::string&) {
        g.out_given = true;
    });
    cmd->add_option("--format", g.format, "stdout format: text, csv or json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_flag("--serial", g.serial, "force the serial reference engine");

    cmd->add_option("--model", o.model, "nakagami|rayleigh|rician|deterministic|awgn");
    cmd->add_option("--m", o.m, "Nakagami shape (>= 0.5)");
    cmd->add_option("--k", o.k, "Rician K-factor (>= 0)");
    cmd->add_option("--rho", o.rho, "mean SNR scale shortcut, bypasses physical fields");
    cmd->add_option("--pr-db", o.pr_db, "mean power gain Pr in dB");
    cmd->add_option("--pt-dbw", o.pt_dbw, "transmit power in dBW");
    cmd->add_option("--n0", o.n0, "noise PSD N0 in W/Hz");
    cmd->add_option("--d-m", o.d_m, "distance in meters");
    cmd->add_option("--alpha", o.alpha, "path-loss exponent");
    cmd->add_option("--w-hz", o.w_hz, "bandwidth in Hz");
    cmd->add_option("--delta-tau", o.delta_tau, "sampling interval in seconds");
    cmd->add_option("--horizon", o.horizon, "observation duration in seconds");
    cmd->add_option("--rounds", o.rounds, "number of independent rounds");
    cmd->add_option("--checkpoints", o.checkpoints, "trace points per round");
    cmd->add_option("--seed", o.seed, "base RNG seed");
    cmd->add_option("--sample-budget", o.sample_budget, "max total draws before refusal");
    cmd->add_option("--source-rate", o.source_rate, "source rate R in nats/s");
    cmd->add_option("--utilization", o.utilization, "R as a fraction of c*");
    cmd->add_option("--initial-backlog", o.initial_backlog, "initial backlog in nats");
}

RunConfig build_config(const GlobalOpts& g, const Overrides& o) {
    RunConfig cfg;
    if (!g.config_path.empty()) {
        std::ifstream in(g.config_path);
        if (!in)
            throw std::invalid_argument("config: cannot open " + g.config_path);
        nlohmann::json j;
        in >> j;
        cfg = RunConfig::from_json(j);
    }
    if (o.model) cfg.model = *o.model;
    if (o.m) cfg.m = o.m;
    if (o.k) cfg.k = o.k;
    if (o.rho) cfg.rho = o.rho;
    if (o.pr_db) cfg.pr_db = o.pr_db;
    if (o.pt_dbw) cfg.pt_dbw = o.pt_dbw;
    if (o.n0) cfg.n0_w_per_hz = o.n0;
    if (o.d_m) cfg.d_m = o.d_m;
    if (o.alpha) cfg.alpha = o.alpha;
    if (o.w_hz) cfg.w_hz = *o.w_hz;
    if (o.delta_tau) cfg.delta_tau_s = *o.delta_tau;
    if (o.horizon) cfg.horizon_s = *o.horizon;
    if (o.rounds) cfg.rounds = *o.rounds;
    if (o.checkpoints) cfg.checkpoints = *o.checkpoints;
    if (o.seed) cfg.seed = *o.seed;
    if (o.sample_budget) cfg.sample_budget = *o.sample_budget;
    if (o.source_rate) cfg.source_rate = o.source_rate;
    if (o.utilization) cfg.utilization = o.utilization;
    if (o.initial_backlog) cfg.initial_backlog = *o.initial_backlog;
    return cfg;
}

RateResult rate_for_config(const RunConfig& cfg, const LinkBudget& link) {
    if (cfg.model == "awgn" || cfg.model == "deterministic")
        return service_rate_awgn(link);
    return service_rate_for_model(cfg.resolve_model(), link);
}

nlohmann::json rate_to_json(const RateResult& r, const LinkBudget& link) {
    nlohmann::json j;
    j["c_star_nats_per_s"] = r.c_star;
    j["c_star_bits_per_s"] = r.c_star * kLog2E;
    j["method"] = to_string(r.method);
    j["abs_error_estimate_nats_per_s"] = r.abs_error_estimate;
    j["c0"] = r.c0;
    j["lower_bound_nats_per_s"] = r.lower_bound_a * link.w_hz;
    j["upper_bound_nats_per_s"] = r.upper_bound * link.w_hz;
    return j;
}

void print_rate_text(const RateResult& r, const LinkBudget& link) {
    std::cout << "c*            = " << format_double(r.c_star) << " nats/s ("
              << format_double(r.c_star * kLog2E) << " bits/s)\n"
              << "method        = " << to_string(r.method) << "\n"
              << "abs error est = " << format_double(r.abs_error_estimate) << " nats/s\n"
              << "bounds        = [" << format_double(r.lower_bound_a * link.w_hz) << ", "
              << format_double(r.upper_bound * link.w_hz) << "] nats/s\n";
}

int cmd_rate(const GlobalOpts& g, const RunConfig& cfg) {
    const LinkBudget link = cfg.resolve_link();
    const RateResult r = rate_for_config(cfg, link);
    nlohmann::json j = rate_to_json(r, link);
    j["config"] = cfg.to_json();
    if (g.json_stdout())
        std::cout << j.dump(2) << "\n";
    else
        print_rate_text(r, link);
    if (g.out_given)
        write_file_atomic(std::filesystem::path(g.out_dir) / "rate.json", j.dump(2) + "\n");
    return 0;
}

int cmd_simulate(const GlobalOpts& g, const RunConfig& cfg) {
    const LinkBudget link = cfg.resolve_link();
    const FadingModel model = cfg.resolve_model();
    const SimConfig sim = cfg.sim_config();
    const RateResult rate = rate_for_config(cfg, link);

    const ServiceTrace trace = simulate_service(
        model, link, sim, g.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
    const LinearityStats stats = linearity_stats(trace, rate.c_star);

    nlohmann::json j = stats_to_json(stats, trace, rate.c_star);
    j["config"] = cfg.to_json();

    const std::filesystem::path out(g.out_dir);
    write_file_atomic(out / "service_trace.csv", trace_to_csv(trace));
    write_file_atomic(out / "linearity_stats.json", j.dump(2) + "\n");

    if (g.json_stdout()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "c*            = " << format_double(rate.c_star) << " nats/s\n"
                  << "slope_fit     = " << format_double(stats.slope_fit) << " nats/s ("
                  << format_double((stats.slope_fit - rate.c_star) / rate.c_star * 100.0)
                  << "% off c*)\n"
                  << "max_dev_ratio = " << format_double(stats.max_dev_ratio) << "\n"
                  << "r_squared     = " << format_double(stats.r_squared) << "\n"
                  << "wrote " << (out / "service_trace.csv").string() << ", "
                  << (out / "linearity_stats.json").string() << "\n";
    }
    return 0;
}

int cmd_queue(const GlobalOpts& g, const RunConfig& cfg) {
    const LinkBudget link = cfg.resolve_link();
    const FadingModel model = cfg.resolve_model();
    const RateResult rate = rate_for_config(cfg, link);
    const QueueConfig qcfg = cfg.queue_config(rate.c_star);

    const QueueTrace trace = run_fluid_queue(model, link, qcfg, cfg.seed);
    const QueueSummary summary = summarize_queue(trace);

    nlohmann::json j = queue_summary_to_json(summary, trace);
    j["c_star_nats_per_s"] = rate.c_star;
    j["config"] = cfg.to_json();

    const std::filesystem::path out(g.out_dir);
    write_file_atomic(out / "queue_trace.csv", queue_to_csv(trace));
    write_file_atomic(out / "queue_summary.json", j.dump(2) + "\n");

    if (g.json_stdout()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "c*           = " << format_double(rate.c_star) << " nats/s, R = "
                  << format_double(qcfg.source_rate_r) << " nats/s\n"
                  << "max backlog  = " << format_double(summary.max_backlog_nats) << " nats\n"
                  << "mean delay   = " << format_double(summary.mean_delay_s) << " s ("
                  << summary.censored_count << " censored)\n"
                  << "backlog slope= " << format_double(summary.backlog_slope_nats_per_s)
                  << " nats/s\n"
                  << "wrote " << (out / "queue_trace.csv").string() << ", "
                  << (out / "queue_summary.json").string() << "\n";
    }
    return 0;
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> values;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) values.push_back(std::stod(item));
    if (values.empty())
        throw std::invalid_argument("sweep: grid must not be empty");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] < values[i - 1])
            throw std::invalid_argument("sweep: grid must be sorted ascending");
    return values;
}

int cmd_sweep(const GlobalOpts& g, const RunConfig& cfg, const std::string& param,
              const std::string& values_csv) {
    const std::vector<double> grid = parse_grid(values_csv);

    std::string csv = "param,c_star,lower,upper\n";
    std::vector<double> c_stars(grid.size());
    std::vector<RateResult> results(grid.size());

    // Validate the grid up front; the parallel loop below must not throw.
    if (param == "m") {
        for (double m : grid)
            if (!(m >= 0.5)) throw std::invalid_argument("sweep: m must be >= 0.5");
    } else if (param == "k") {
        for (double k : grid)
            if (!(k >= 0.0)) throw std::invalid_argument("sweep: k must be >= 0");
    } else if (param == "rho") {
        for (double rho : grid)
            if (!(rho >= 0.0)) throw std::invalid_argument("sweep: rho must be >= 0");
    } else {
        throw std::invalid_argument("sweep: param must be one of m, k, rho");
    }

    std::exception_ptr first_error;
    if (param == "rho") {
        #pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            try {
                RunConfig point = cfg;
                point.rho = grid[i];
                results[i] = rate_for_config(point, point.resolve_link());
            } catch (...) {
                #pragma omp critical
                if (!first_error) first_error = std::current_exception();
            }
        }
    } else {
        const LinkBudget link = cfg.resolve_link();
        const bool is_m = (param == "m");
        #pragma omp parallel for schedule(dynamic)
        for (std::size_t i = 0; i < grid.size(); ++i) {
            try {
                results[i] = is_m ? service_rate_nakagami(grid[i], link)
                                  : service_rate_rician(grid[i], link);
            } catch (...) {
                #pragma omp critical
                if (!first_error) first_error = std::current_exception();
            }
        }
    }
    if (first_error) std::rethrow_exception(first_error);

    const double w = (param == "rho") ? cfg.w_hz : cfg.resolve_link().w_hz;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        c_stars[i] = results[i].c_star;
        csv += format_double(grid[i]) + "," + format_double(results[i].c_star) + "," +
               format_double(results[i].lower_bound_a * w) + "," +
               format_double(results[i].upper_bound * w) + "\n";
    }

    // AWGN reference row: the no-fading limit at the sweep's link (for rho
    // sweeps, at the largest grid point).
    {
        LinkBudget ref_link = (param == "rho") ? LinkBudget::from_rho(grid.back(), cfg.w_hz)
                                               : cfg.resolve_link();
        const RateResult awgn = service_rate_awgn(ref_link);
        csv += "inf," + format_double(awgn.c_star) + "," +
               format_double(awgn.lower_bound_a * w) + "," +
               format_double(awgn.upper_bound * w) + "\n";
    }

    bool monotone = true;
    for (std::size_t i = 1; i < c_stars.size(); ++i)
        if (c_stars[i] < c_stars[i - 1]) monotone = false;

    const std::filesystem::path out(g.out_dir);
    write_file_atomic(out / "sweep.csv", csv);
    std::cout << "rows                  = " << grid.size() << " + awgn reference\n"
              << "monotone nondecreasing= " << (monotone ? "yes" : "no") << "\n"
              << "wrote " << (out / "sweep.csv").string() << "\n";
    return 0;
}

int cmd_cf_check(const GlobalOpts& g, const RunConfig& cfg, const std::string& lambda_csv) {
    const LinkBudget link = cfg.resolve_link();
    const FadingModel model = cfg.resolve_model();
    const SimConfig sim = cfg.sim_config();
    const RateResult rate = rate_for_config(cfg, link);

    std::vector<double> lambdas;
    if (!lambda_csv.empty()) {
        lambdas = parse_grid(lambda_csv);
    } else {
        // Default grid: lambda such that lambda * c* * T = 0.1, 1, 10.
        for (double target : {0.1, 1.0, 10.0})
            lambdas.push_back(target / (rate.c_star * sim.horizon_s));
    }

    const ServiceTrace trace = simulate_service(
        model, link, sim, g.serial ? ExecutionPolicy::serial : ExecutionPolicy::parallel);
    const auto deviations = empirical_cf(trace.finals, rate.c_star, sim.horizon_s, lambdas);

    std::string csv = "lambda,deviation\n";
    for (const auto& [lambda, dev] : deviations)
        csv += format_double(lambda) + "," + format_double(dev) + "\n";

    const std::filesystem::path out(g.out_dir);
    write_file_atomic(out / "cf_check.csv", csv);
    double max_dev = 0.0;
    for (const auto& [lambda, dev] : deviations) max_dev = std::max(max_dev, dev);
    std::cout << "max CF deviation = " << format_double(max_dev) << " over " << lambdas.size()
              << " lambda points\n"
              << "wrote " << (out / "cf_check.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"service-rate analysis and simulation for i.i.d. fading channels"};
    app.require_subcommand(1);

    GlobalOpts g_rate, g_sim, g_queue, g_sweep, g_cf;
    Overrides o_rate, o_sim, o_queue, o_sweep, o_cf;

    CLI::App* rate = app.add_subcommand("rate", "compute the deterministic service rate c*");
    add_common_options(rate, g_rate, o_rate);

    CLI::App* simulate = app.add_subcommand("simulate", "Monte Carlo service process S(t)");
    add_common_options(simulate, g_sim, o_sim);

    CLI::App* queue = app.add_subcommand("queue", "fluid FIFO queue fed at constant rate");
    add_common_options(queue, g_queue, o_queue);

    CLI::App* sweep = app.add_subcommand("sweep", "c* over an m, K or rho grid");
    add_common_options(sweep, g_sweep, o_sweep);
    std::string sweep_param = "m";
    std::string sweep_values;
    sweep->add_option("--param", sweep_param, "grid parameter: m, k or rho");
    sweep->add_option("--values", sweep_values, "comma-separated ascending grid")->required();

    CLI::App* cf = app.add_subcommand("cf-check", "empirical characteristic-function deviations");
    add_common_options(cf, g_cf, o_cf);
    std::string lambda_values;
    cf->add_option("--lambda-values", lambda_values,
                   "comma-separated lambda grid (default: 0.1,1,10 over c*T)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (rate->parsed()) return cmd_rate(g_rate, build_config(g_rate, o_rate));
        if (simulate->parsed()) return cmd_simulate(g_sim, build_config(g_sim, o_sim));
        if (queue->parsed()) return cmd_queue(g_queue, build_config(g_queue, o_queue));
        if (sweep->parsed())
            return cmd_sweep(g_sweep, build_config(g_sweep, o_sweep), sweep_param, sweep_values);
        if (cf->parsed())
            return cmd_cf_check(g_cf, build_config(g_cf, o_cf), lambda_values);
    } catch (const budget_error& e) {
        std::cerr << "budget refusal: " << e.what() << "\n";
        return 4;
    } catch (const quadrature_error& e) {
        std::cerr << "numerical failure: " << e.what()
                  << " (partial value " << e.partial_value() << ", error estimate "
                  << e.error_estimate() << ")\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
