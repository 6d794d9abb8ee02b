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
/**
 * @file vqa.hpp
 * Algorithm drivers composing circuits, simulator and optimizers: VQE,
 * QAOA, VQD and the ground/first-excited gap scan over chain lengths.
 *
 * Random streams derived from a run's seed: 0 initial parameters (uniform
 * in [-pi, pi)), 1 optimizer perturbations, 2 per-evaluation sampling
 * (one child stream per evaluation index), 3 final-state sampling.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "spinvar/circuits.hpp"
#include "spinvar/optimizers.hpp"
#include "spinvar/pauli.hpp"
#include "spinvar/problems.hpp"

namespace spinvar {

struct SimulationConfig {
    enum class Mode { Exact, Sampled };

    Mode mode = Mode::Exact;
    std::size_t shots = 1024;
    /// Only used in Sampled mode.
    NoiseConfig noise;

    [[nodiscard]] static SimulationConfig exact() { return {}; }
    [[nodiscard]] static SimulationConfig sampled(std::size_t shots,
                                                  NoiseConfig noise = {}) {
        return {Mode::Sampled, shots, noise};
    }
    [[nodiscard]] bool noisy() const noexcept {
        return mode == Mode::Sampled && noise.enabled;
    }
};

using OptimizerConfig = std::variant<SpsaConfig, QnspsaConfig, GradientConfig>;

/// "spsa", "qnspsa" or "grad".
[[nodiscard]] std::string optimizer_name(const OptimizerConfig &cfg);
[[nodiscard]] std::size_t optimizer_iterations(const OptimizerConfig &cfg);

struct Ansatz {
    Circuit circuit;
    std::string family;
    std::size_t reps = 0;
};

[[nodiscard]] Ansatz make_efficient_su2(std::size_t n_qubits, std::size_t reps);
[[nodiscard]] Ansatz make_qaoa(const Observable &h, std::size_t p,
                               CostTermOrder order = CostTermOrder::PauliType);

struct AnsatzInfo {
    std::string family;
    std::size_t reps = 0;
    std::size_t n_params = 0;
    std::size_t depth = 0;
};

enum class EnergyConvention { Actual, Doubled };

[[nodiscard]] const char *convention_name(EnergyConvention c) noexcept;

struct ProblemInfo {
    std::string name = "custom";
    std::optional<Graph> graph;
    std::optional<double> exact_energy;
    EnergyConvention convention = EnergyConvention::Actual;
};

struct VqaResult {
    std::string problem;
    std::size_t n_qubits = 0;
    AnsatzInfo ansatz;
    OptimizerConfig optimizer;
    SimulationConfig simulation;
    std::size_t trajectories = 1;
    OptimizerTrace trace;
    /// Minimum recorded objective (penalty-free energy for VQD levels).
    double best_energy = 0.0;
    double final_energy = 0.0;
    std::vector<double> best_theta;
    /// Noiseless expectation of the Hamiltonian at best_theta.
    double best_state_energy = 0.0;
    std::optional<double> exact_energy;
    /// Most probable measured bitstring (QAOA runs).
    std::optional<std::string> bitstring;
    std::optional<double> cut_value;
    /// VQD levels above 0: best penalized objective.
    std::optional<double> penalized_objective;
    std::uint64_t seed = 0;
    EnergyConvention convention = EnergyConvention::Actual;
    std::vector<std::string> warnings;
};

/// Minimizes <psi(theta)|h|psi(theta)> over `ansatz` applied to |0...0>.
/// The deterministic gradient optimizer requires Exact mode.
[[nodiscard]] VqaResult vqe_run(const Observable &h, const Ansatz &ansatz,
                                const OptimizerConfig &opt,
                                const SimulationConfig &sim, std::uint64_t seed,
                                const ProblemInfo &problem = {});

/// VQE on the p-level QAOA ansatz of h, followed by `readout_shots`
/// measurements of the best state; reports the most probable bitstring and,
/// for Max-cut problems, its cut value.
[[nodiscard]] VqaResult qaoa_run(const Observable &h, std::size_t p,
                                 const OptimizerConfig &opt,
                                 const SimulationConfig &sim, std::uint64_t seed,
                                 const ProblemInfo &problem = {},
                                 std::size_t readout_shots = 4096);

/// Samples the state at r.best_theta (`shots` shots, readout flips when the
/// run was noisy) and stores the most probable bitstring and, when the
/// problem carries a graph, its cut value.
void read_out_bitstring(VqaResult &r, const Ansatz &ansatz, std::size_t shots,
                        const ProblemInfo &problem);

/// Calls `run` with `restarts` seeds (the first is `seed`, the others are
/// derived from it) and keeps the result with the lowest best_energy.
[[nodiscard]] VqaResult
best_of_restarts(std::size_t restarts, std::uint64_t seed,
                 const std::function<VqaResult(std::uint64_t)> &run);

struct VqdConfig {
    /// Number of states (ground state plus k-1 excited states).
    std::size_t k = 2;
    /// Overlap penalty weights; empty means 2.5 * spectral_bound(h) each,
    /// strictly above the widest possible spectral gap.
    std::vector<double> betas;
    /// Independent optimizations per excited level; the lowest penalized
    /// objective is kept.
    std::size_t restarts = 1;
};

/// Variational quantum deflation. Level 0 is exactly vqe_run(seed); level j
/// minimizes <H> + sum_{i<j} beta_i |<psi_i|psi(theta)>|^2 with earlier
/// states frozen. Overlaps are exact state-vector fidelities in every mode.
[[nodiscard]] std::vector<VqaResult>
vqd_run(const Observable &h, const std::function<Ansatz()> &ansatz_factory,
        const VqdConfig &cfg, const OptimizerConfig &opt, const SimulationConfig &sim,
        std::uint64_t seed, const ProblemInfo &problem = {});

enum class GapMethod { Exact, Vqd };

struct GapRow {
    std::size_t n = 0;
    double e0 = 0.0;
    double e1 = 0.0;
    double gap = 0.0;
    bool even = true;
};

[[nodiscard]] inline std::size_t default_gap_reps(std::size_t n) {
    return std::max<std::size_t>(5, (n + 1) / 2);
}

struct GapScanConfig {
    GapMethod method = GapMethod::Exact;
    /// J, alpha and half_prefactor; n_spins is taken from the scan list.
    MgmParams params;
    /// VQD settings.
    OptimizerConfig optimizer = GradientConfig{};
    /// EfficientSU2 repetitions per chain length; max(5, ceil(n/2)) by default.
    std::function<std::size_t(std::size_t)> reps_for_n = default_gap_reps;
    std::size_t restarts = 3;
    std::uint64_t seed = 1;
};

/// Two lowest MGM energies (with multiplicity) and their difference for
/// every n in `ns` (each n >= 4).
[[nodiscard]] std::vector<GapRow> energy_gap_scan(const std::vector<std::size_t> &ns,
                                                  const GapScanConfig &cfg);

} // namespace spinvar
