// Copyright 2026 The idcoherence Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>

#include "idc/discrimination.h"
#include "idc/experiments.h"
#include "idc/linalg.h"

namespace {

idc::CMat random_hermitian(std::mt19937_64 &engine) {
    std::uniform_real_distribution<double> u(-1, 1);
    idc::CMat m(4);
    for (size_t i = 0; i < 4; i++) {
        m(i, i) = u(engine);
        for (size_t j = i + 1; j < 4; j++) {
            m(i, j) = {u(engine), u(engine)};
            m(j, i) = std::conj(m(i, j));
        }
    }
    return m;
}

void BM_eigh_4x4(benchmark::State &state) {
    std::mt19937_64 engine(1);
    idc::CMat a = random_hermitian(engine);
    for (auto _ : state) {
        benchmark::DoNotOptimize(idc::eigh(a));
    }
}
BENCHMARK(BM_eigh_4x4);

void BM_optimal_povm(benchmark::State &state) {
    auto params = idc::preset_parameters(idc::Figure::Fig4);
    auto prep = std::get<idc::PureSpinSuperposition>(params.preparation);
    auto psi = idc::project_superposition(prep, params.overlaps, params.statistics);
    params.channel.phi = {1.1, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(idc::optimal_povm(params.channel, psi));
    }
}
BENCHMARK(BM_optimal_povm);

void BM_closed_form_general(benchmark::State &state) {
    auto params = idc::preset_parameters(idc::Figure::Fig4);
    auto prep = std::get<idc::PureSpinSuperposition>(params.preparation);
    params.channel.phi = {1.1, 0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            idc::closed_form_error_general(prep, params.overlaps, idc::Statistics::Fermion, params.channel));
    }
}
BENCHMARK(BM_closed_form_general);

void BM_sweep_fig3b(benchmark::State &state) {
    auto spec = idc::preset_sweep(idc::Figure::Fig3b);
    unsigned threads = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(idc::run_sweep(spec, threads));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spec.point_count()));
}
BENCHMARK(BM_sweep_fig3b)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

void BM_oracle_campaign(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(idc::run_oracle_campaign(1000, 20190514));
    }
}
BENCHMARK(BM_oracle_campaign)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
