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
// Serial reference vs OpenMP engine on the same Monte Carlo workload.

#include <benchmark/benchmark.h>

#include "chansvc/mcsim.hpp"
#include "chansvc/service_rate.hpp"

using namespace chansvc;

namespace {

SimConfig bench_config(int rounds) {
    SimConfig cfg;
    cfg.delta_tau_s = 1e-6;
    cfg.horizon_s = 0.05;
    cfg.rounds = rounds;
    cfg.base_seed = 1;
    cfg.checkpoints = 10;
    return cfg;
}

void BM_SimulateSerial(benchmark::State& state) {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const FadingModel model = FadingModel::rayleigh();
    const SimConfig cfg = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ServiceTrace trace = simulate_service(model, link, cfg, ExecutionPolicy::serial);
        benchmark::DoNotOptimize(trace.finals.data());
    }
    state.SetItemsProcessed(state.iterations() * cfg.steps() * cfg.rounds);
}

void BM_SimulateParallel(benchmark::State& state) {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    const FadingModel model = FadingModel::rayleigh();
    const SimConfig cfg = bench_config(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        ServiceTrace trace = simulate_service(model, link, cfg, ExecutionPolicy::parallel);
        benchmark::DoNotOptimize(trace.finals.data());
    }
    state.SetItemsProcessed(state.iterations() * cfg.steps() * cfg.rounds);
}

void BM_ServiceRateQuadrature(benchmark::State& state) {
    const LinkBudget link = LinkBudget::from_rho(10.0, 1000.0);
    double m = 0.5;
    for (auto _ : state) {
        benchmark::DoNotOptimize(service_rate_nakagami(m, link).c_star);
        m = (m < 1000.0) ? m * 1.7 : 0.5;
    }
}

} // namespace

BENCHMARK(BM_SimulateSerial)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SimulateParallel)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ServiceRateQuadrature);

BENCHMARK_MAIN();
