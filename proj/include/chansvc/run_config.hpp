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
// Flat, diffable run configuration: JSON file keys and CLI flags map onto
// the same fields, dB conversions happen here, and the resolved config is
// echoed into every JSON output so a run can be reproduced bit for bit.

#ifndef CHANSVC_RUN_CONFIG_HPP
#define CHANSVC_RUN_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "chansvc/channel.hpp"
#include "chansvc/fluid_queue.hpp"
#include "chansvc/mcsim.hpp"

#include "json.hpp"

namespace chansvc {

double db_to_linear(double db);

struct RunConfig {
    // Model selection: nakagami (+m), rayleigh, rician (+k), deterministic
    // ("awgn" is accepted as an alias).
    std::string model = "rayleigh";
    std::optional<double> m;
    std::optional<double> k;

    // Link: either the composite rho shortcut or the physical field set.
    std::optional<double> rho;
    std::optional<double> pr_db;
    std::optional<double> pt_dbw;
    std::optional<double> n0_w_per_hz;
    std::optional<double> d_m;
    std::optional<double> alpha;
    double w_hz = 1000.0;

    // Simulation.
    double delta_tau_s = 1e-5;
    double horizon_s = 1.0;
    int rounds = 100;
    int checkpoints = 100;
    std::uint64_t seed = 1;
    double sample_budget = 1e10;

    // Queue: exactly one of source_rate / utilization (fraction of c*).
    std::optional<double> source_rate;
    std::optional<double> utilization;
    double initial_backlog = 0.0;

    static RunConfig from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    LinkBudget resolve_link() const;
    FadingModel resolve_model(bool build_sampler = false) const;
    SimConfig sim_config() const;
    QueueConfig queue_config(double c_star) const;
};

} // namespace chansvc

#endif
