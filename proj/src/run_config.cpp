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

#include "chansvc/run_config.hpp"

#include <cmath>
#include <stdexcept>

namespace chansvc {

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

namespace {

template <typename T>
void read_optional(const nlohmann::json& j, const char* key, std::optional<T>& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

template <typename T>
void read_value(const nlohmann::json& j, const char* key, T& out) {
    if (j.contains(key)) out = j.at(key).get<T>();
}

} // namespace

RunConfig RunConfig::from_json(const nlohmann::json& j) {
    RunConfig cfg;
    read_value(j, "model", cfg.model);
    read_optional(j, "m", cfg.m);
    read_optional(j, "k", cfg.k);
    read_optional(j, "rho", cfg.rho);
    read_optional(j, "pr_db", cfg.pr_db);
    read_optional(j, "pt_dbw", cfg.pt_dbw);
    read_optional(j, "n0_w_per_hz", cfg.n0_w_per_hz);
    read_optional(j, "d_m", cfg.d_m);
    read_optional(j, "alpha", cfg.alpha);
    read_value(j, "w_hz", cfg.w_hz);
    read_value(j, "delta_tau_s", cfg.delta_tau_s);
    read_value(j, "horizon_s", cfg.horizon_s);
    read_value(j, "rounds", cfg.rounds);
    read_value(j, "checkpoints", cfg.checkpoints);
    read_value(j, "seed", cfg.seed);
    read_value(j, "sample_budget", cfg.sample_budget);
    read_optional(j, "source_rate_nats_per_s", cfg.source_rate);
    read_optional(j, "utilization", cfg.utilization);
    read_value(j, "initial_backlog_nats", cfg.initial_backlog);
    return cfg;
}

nlohmann::json RunConfig::to_json() const {
    nlohmann::json j;
    j["model"] = model;
    if (m) j["m"] = *m;
    if (k) j["k"] = *k;
    if (rho) j["rho"] = *rho;
    if (pr_db) j["pr_db"] = *pr_db;
    if (pt_dbw) j["pt_dbw"] = *pt_dbw;
    if (n0_w_per_hz) j["n0_w_per_hz"] = *n0_w_per_hz;
    if (d_m) j["d_m"] = *d_m;
    if (alpha) j["alpha"] = *alpha;
    j["w_hz"] = w_hz;
    j["delta_tau_s"] = delta_tau_s;
    j["horizon_s"] = horizon_s;
    j["rounds"] = rounds;
    j["checkpoints"] = checkpoints;
    j["seed"] = seed;
    j["sample_budget"] = sample_budget;
    if (source_rate) j["source_rate_nats_per_s"] = *source_rate;
    if (utilization) j["utilization"] = *utilization;
    j["initial_backlog_nats"] = initial_backlog;
    return j;
}

LinkBudget RunConfig::resolve_link() const {
    if (rho) {
        LinkBudget link = LinkBudget::from_rho(*rho, w_hz);
        link.validate();
        return link;
    }
    if (!pr_db || !pt_dbw || !n0_w_per_hz || !d_m || !alpha)
        throw std::invalid_argument(
            "config: either rho or the full physical field set (pr_db, pt_dbw, n0_w_per_hz, "
            "d_m, alpha) must be provided");
    LinkBudget link;
    link.pr = db_to_linear(*pr_db);
    link.pt_watts = db_to_linear(*pt_dbw);
    link.n0_w_per_hz = *n0_w_per_hz;
    link.d_meters = *d_m;
    link.alpha = *alpha;
    link.w_hz = w_hz;
    link.validate();
    return link;
}

FadingModel RunConfig::resolve_model(bool build_sampler) const {
    (void)build_sampler;  // the CLI model set needs no tabulated sampler
    if (model == "nakagami") {
        if (!m) throw std::invalid_argument("config: model nakagami requires m");
        if (!(*m >= 0.5)) throw std::invalid_argument("config: m must be >= 0.5");
        return FadingModel::nakagami(*m);
    }
    if (model == "rayleigh") return FadingModel::rayleigh();
    if (model == "rician") {
        if (!k) throw std::invalid_argument("config: model rician requires k");
        if (!(*k >= 0.0)) throw std::invalid_argument("config: k must be >= 0");
        return FadingModel::rician(*k);
    }
    if (model == "deterministic" || model == "awgn") return FadingModel::deterministic();
    throw std::invalid_argument(
        "config: model must be one of nakagami, rayleigh, rician, deterministic, awgn");
}

SimConfig RunConfig::sim_config() const {
    SimConfig cfg;
    cfg.delta_tau_s = delta_tau_s;
    cfg.horizon_s = horizon_s;
    cfg.rounds = rounds;
    cfg.base_seed = seed;
    cfg.checkpoints = checkpoints;
    cfg.sample_budget = sample_budget;
    cfg.validate();
    return cfg;
}

QueueConfig RunConfig::queue_config(double c_star) const {
    if (source_rate && utilization)
        throw std::invalid_argument("config: give either source_rate or utilization, not both");
    QueueConfig cfg;
    if (source_rate) {
        cfg.source_rate_r = *source_rate;
    } else if (utilization) {
        if (!(*utilization >= 0.0))
            throw std::invalid_argument("config: utilization must be >= 0");
        cfg.source_rate_r = *utilization * c_star;
    } else {
        throw std::invalid_argument("config: queue runs need source_rate or utilization");
    }
    cfg.initial_backlog = initial_backlog;
    cfg.horizon_s = horizon_s;
    cfg.delta_tau_s = delta_tau_s;
    cfg.sample_budget = sample_budget;
    cfg.validate();
    return cfg;
}

} // namespace chansvc
