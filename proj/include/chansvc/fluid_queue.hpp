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
// Fluid FIFO queue fed by a constant-rate source and drained by the channel
// service process: backlog B(t), utilized service S~(t) and virtual delay
// D(t). Traffic is infinitely divisible, the buffer is unbounded, and
// arrivals are credited before service within a step.

#ifndef CHANSVC_FLUID_QUEUE_HPP
#define CHANSVC_FLUID_QUEUE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "chansvc/channel.hpp"

#include "json.hpp"

namespace chansvc {

struct QueueConfig {
    double source_rate_r = 0.0;      // nats/s, >= 0
    double initial_backlog = 0.0;    // nats, >= 0
    double horizon_s = 1.0;
    double delta_tau_s = 1e-5;
    long long max_trace_points = 200000;  // recorded rows; steps are thinned to fit
    double sample_budget = 1e10;

    long long steps() const;
    void validate() const;
};

struct QueueTrace {
    std::vector<double> t_s;
    std::vector<double> backlog_nats;
    std::vector<double> s_tilde_nats;
    std::vector<double> delay_s;  // NaN marks a censored value (drain beyond horizon)
    QueueConfig config;
    LinkBudget link;
    std::string model_desc;
    std::string rng_algorithm;
};

QueueTrace run_fluid_queue(const FadingModel& model, const LinkBudget& link,
                           const QueueConfig& cfg, std::uint64_t seed);

// Horizontal gap inf{ d >= 0 : S~(t+d) >= R t + initial_backlog }, linearly
// interpolated between trace points; NaN when censored by the horizon.
double virtual_delay(const QueueTrace& trace, double t);

struct QueueSummary {
    double max_backlog_nats = 0.0;
    double mean_backlog_nats = 0.0;
    double mean_delay_s = 0.0;          // over non-censored points
    double backlog_slope_nats_per_s = 0.0;  // least-squares fit of B(t)
    long long censored_count = 0;
};

QueueSummary summarize_queue(const QueueTrace& trace);

// CSV with header t_s,backlog_nats,s_tilde_nats,delay_s.
std::string queue_to_csv(const QueueTrace& trace);

nlohmann::json queue_summary_to_json(const QueueSummary& summary, const QueueTrace& trace);

} // namespace chansvc

#endif
