// Copyright 2026 The spinvar Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <benchmark/benchmark.h>

#include <vector>

#include "spinvar/circuits.hpp"
#include "spinvar/exact.hpp"
#include "spinvar/pauli.hpp"
#include "spinvar/problems.hpp"

using namespace spinvar;

namespace {

StateVector random_state(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {rng.uniform() - 0.5, rng.uniform() - 0.5};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return {n, std::move(amps)};
}

std::vector<double> angles(std::size_t p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> t(p);
    for (auto &x : t) {
        x = 6.0 * rng.uniform() - 3.0;
    }
    return t;
}

void BM_PauliRotation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = random_state(n, 1);
    std::string label(n, 'I');
    label[0] = 'X';
    label[1] = 'Y';
    label[n - 1] = 'Z';
    const auto p = pauli_from_label(label);
    for (auto _ : state) {
        apply_pauli_rotation(s, p, 0.37);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_PauliRotation)->DenseRange(10, 20, 5);

void BM_SingleQubitGate(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto s = random_state(n, 2);
    const auto u = gates::ry(0.4);
    for (auto _ : state) {
        s.apply_1q_unchecked(u, n / 2);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension()));
}
BENCHMARK(BM_SingleQubitGate)->DenseRange(10, 20, 5);

void BM_ObservableMatvec(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = build_mgm({n, 1.0, -0.1, true});
    const auto s = random_state(n, 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(observable_matvec(h, s));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(s.dimension() * h.size()));
}
BENCHMARK(BM_ObservableMatvec)->DenseRange(8, 16, 4);

void BM_Expectation(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = build_mgm({n, 1.0, -0.1, true});
    const auto s = random_state(n, 4);
    for (auto _ : state) {
        benchmark::DoNotOptimize(expectation(h, s));
    }
}
BENCHMARK(BM_Expectation)->DenseRange(8, 16, 4);

void BM_EfficientSU2Circuit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = build_efficient_su2(n, 5);
    const auto theta = angles(c.n_params(), 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_circuit(c, theta, StateVector(n)));
    }
}
BENCHMARK(BM_EfficientSU2Circuit)->DenseRange(4, 16, 4);

void BM_QaoaCircuit(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto c = build_qaoa_ansatz(build_mgm({n, 1.0, -0.1, true}), 5);
    const auto theta = angles(c.n_params(), 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_circuit(c, theta, StateVector(n)));
    }
}
BENCHMARK(BM_QaoaCircuit)->DenseRange(4, 16, 4);

void BM_NoisyEnergyEstimate(benchmark::State &state) {
    const auto h = build_mgm({4, 1.0, -0.1, true});
    const auto c = build_efficient_su2(4, 7);
    const auto theta = angles(c.n_params(), 7);
    Rng rng(8);
    const auto noise = NoiseConfig::nisq_defaults();
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            estimate_circuit_energy(c, theta, h, static_cast<std::size_t>(state.range(0)), noise,
                                    rng));
    }
}
BENCHMARK(BM_NoisyEnergyEstimate)->Arg(256)->Arg(1024);

void BM_Lanczos(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto h = build_mgm({n, 1.0, -0.1, true});
    for (auto _ : state) {
        benchmark::DoNotOptimize(lanczos_lowest(h, 2));
    }
}
BENCHMARK(BM_Lanczos)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
