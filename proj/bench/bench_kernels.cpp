// Copyright 2026 The shadowlab Authors
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


// Serial reference kernels against their OpenMP counterparts. Thread count is
// taken from OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include <vector>

#include "shadowlab/fixtures.hpp"
#include "shadowlab/flipper.hpp"
#include "shadowlab/qsim.hpp"
#include "shadowlab/shadow_collect.hpp"

using namespace shadowlab;

namespace {

CircuitSpec layered(std::size_t n) {
    Rng rng(1);
    return fixtures::random_circuit(n, 4, rng);
}

void BM_ApplyCircuit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = layered(n);
    const auto psi = qsim::Statevector::zero(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsim::apply_circuit(psi, c));
    }
}

void BM_ApplyCircuitSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = layered(n);
    const auto psi = qsim::Statevector::zero(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsim::reference::apply_circuit(psi, c));
    }
}

void BM_ExpvalPauli(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto psi = qsim::apply_circuit(qsim::Statevector::zero(n), layered(n));
    Rng rng(2);
    const auto p = fixtures::random_pauli(n, n / 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsim::expval_pauli(psi, p));
    }
}

void BM_ExpvalPauliSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto psi = qsim::apply_circuit(qsim::Statevector::zero(n), layered(n));
    Rng rng(2);
    const auto p = fixtures::random_pauli(n, n / 2, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qsim::reference::expval_pauli(psi, p));
    }
}

void BM_ShadowCollect(benchmark::State &state) {
    const auto c = layered(6);
    const auto T = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(collect_pauli_shadow(c, T, 3));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ShadowCollectSerial(benchmark::State &state) {
    const auto c = layered(6);
    const auto T = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(reference::collect_pauli_shadow(c, T, 3));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

const ConventionalLinearModel &alg1_model() {
    static const ConventionalLinearModel m = [] {
        Rng rng(4);
        return fixtures::random_conventional_model(3, 3, false, rng);
    }();
    return m;
}

void BM_Algorithm1(benchmark::State &state) {
    const std::vector<double> x{0.1, 0.2, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(algorithm1_run(alg1_model(), x, static_cast<uint64_t>(state.range(0)), 5));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Algorithm1Serial(benchmark::State &state) {
    const std::vector<double> x{0.1, 0.2, 0.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            reference::algorithm1_run(alg1_model(), x, static_cast<uint64_t>(state.range(0)), 5));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_ApplyCircuit)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApplyCircuitSerial)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpvalPauli)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExpvalPauliSerial)->Arg(16)->Arg(20)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ShadowCollect)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ShadowCollectSerial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Algorithm1)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Algorithm1Serial)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
