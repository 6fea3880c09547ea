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
// Monte Carlo engine for the cumulative service process S(t) = sum C(t_n)
// dtau. Rounds are independent work units keyed by RNG stream index; the
// OpenMP kernel and the serial reference produce bitwise-identical traces,
// so results are invariant to scheduling and thread count.

#ifndef CHANSVC_MCSIM_HPP
#define CHANSVC_MCSIM_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chansvc/channel.hpp"

#include "json.hpp"

namespace chansvc {

struct SimConfig {
    double delta_tau_s = 1e-5;   // sampling interval
    double horizon_s = 1.0;      // observation duration per round
    int rounds = 100;
    std::uint64_t base_seed = 1;
    int checkpoints = 100;       // evenly spaced trace points per round
    double sample_budget = 1e10; // refuse runs beyond steps * rounds draws

    long long steps() const;
    void validate() const;
};

enum class ExecutionPolicy { serial, parallel };

// Per-round cumulative service samples at the checkpoint times, plus run
// metadata for reproducibility.
struct ServiceTrace {
    std::vector<double> checkpoint_times;     // size checkpoints + 1, starts at 0
    std::vector<std::vector<double>> s_cum;   // [round][checkpoint], nats
    std::vector<double> finals;               // S(horizon) per round, nats
    SimConfig config;
    LinkBudget link;
    std::string model_desc;
    std::string rng_algorithm;
};

ServiceTrace simulate_service(const FadingModel& model, const LinkBudget& link,
                              const SimConfig& cfg,
                              ExecutionPolicy policy = ExecutionPolicy::parallel);

struct LinearityStats {
    double mean_final = 0.0;            // nats
    double std_final = 0.0;             // nats
    double max_dev_ratio = 0.0;         // max_r |S_r(T) - mean| / mean
    double max_dev_ratio_vs_cstar = 0.0;// same but against c* T
    double slope_fit = 0.0;             // nats/s, pooled least squares
    double intercept_fit = 0.0;         // nats
    double r_squared = 0.0;
};

LinearityStats linearity_stats(const ServiceTrace& trace, double c_star);

// |mean_r e^{i lambda S_r(T)} - e^{i lambda c* T}| per lambda. Needs at
// least 30 rounds and |lambda c* T| <= 1e3 to stay clear of phase aliasing.
std::vector<std::pair<double, double>> empirical_cf(std::span<const double> finals,
                                                    double c_star, double horizon_s,
                                                    std::span<const double> lambda_grid);

struct IncrementScanRow {
    double delta_tau_s = 0.0;
    double max_increment_nats = 0.0;  // largest single Delta s_n
    double tail_fraction = 0.0;       // empirical P(Delta s_n > epsilon)
    double epsilon_nats = 0.0;
};

// No-leap scan: one simulated round per sampling interval, reporting the
// largest increment and the tail fraction above epsilon (default
// c* 1e-4 horizon).
std::vector<IncrementScanRow> max_increment_scan(const FadingModel& model,
                                                 const LinkBudget& link,
                                                 std::span<const double> delta_tau_list,
                                                 double horizon_s, std::uint64_t seed,
                                                 double epsilon = 0.0);

// CSV with header round,t_s,s_nats; full round-trip float precision.
std::string trace_to_csv(const ServiceTrace& trace);

// Stats plus config echo and RNG algorithm id.
nlohmann::json stats_to_json(const LinearityStats& stats, const ServiceTrace& trace,
                             double c_star);

} // namespace chansvc

#endif
