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
#include "spinvar/vqa.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "spinvar/error.hpp"
#include "spinvar/exact.hpp"

namespace spinvar {
namespace {

enum Stream : std::uint64_t {
    InitialParameters = 0,
    OptimizerPerturbations = 1,
    Sampling = 2,
    FinalReadout = 3,
};

struct Penalty {
    std::vector<StateVector> states;
    std::vector<double> betas;
};

std::vector<double> initial_parameters(std::size_t n, std::uint64_t seed) {
    Rng rng = Rng::derive(seed, InitialParameters);
    std::vector<double> theta(n);
    for (auto &t : theta) {
        t = -std::numbers::pi + 2.0 * std::numbers::pi * rng.uniform();
    }
    return theta;
}

StateVector prepare(const Circuit &c, std::span<const double> theta) {
    StateVector s(c.n_qubits());
    execute(c, theta, s);
    return s;
}

double penalty_value(const Penalty *penalty, const StateVector &s) {
    double extra = 0.0;
    if (penalty != nullptr) {
        for (std::size_t i = 0; i < penalty->states.size(); ++i) {
            extra += penalty->betas[i] * fidelity(penalty->states[i], s);
        }
    }
    return extra;
}

VqaResult run_variational(const Observable &h, const Ansatz &ansatz,
                          const OptimizerConfig &opt, const SimulationConfig &sim,
                          std::uint64_t seed, const ProblemInfo &problem,
                          const Penalty *penalty) {
    const Circuit &c = ansatz.circuit;
    if (c.n_qubits() != h.n_qubits()) {
        throw InvalidArgument("ansatz acts on " + std::to_string(c.n_qubits()) +
                              " qubits but the Hamiltonian on " +
                              std::to_string(h.n_qubits()));
    }
    if (c.n_qubits() > StateVector::max_qubits) {
        throw InvalidArgument("simulation is limited to 26 qubits");
    }
    c.validate();
    sim.noise.validate();
    if (sim.mode == SimulationConfig::Mode::Sampled && sim.shots == 0) {
        throw InvalidArgument("shots must be positive");
    }
    const bool exact = sim.mode == SimulationConfig::Mode::Exact;
    if (!exact && std::holds_alternative<GradientConfig>(opt)) {
        throw InvalidArgument("the deterministic gradient optimizer needs the "
                              "noiseless exact-expectation simulator");
    }

    const std::uint64_t sampling_seed = Rng::derive_seed(seed, Sampling);
    auto counter = std::make_shared<std::uint64_t>(0);

    Objective obj(c.n_params(), [&, counter](std::span<const double> theta) {
        const std::uint64_t k = (*counter)++;
        if (exact) {
            const StateVector s = prepare(c, theta);
            return expectation(h, s) + penalty_value(penalty, s);
        }
        Rng rng = Rng::derive(sampling_seed, k);
        double e = estimate_circuit_energy(c, theta, h, sim.shots, sim.noise, rng).value;
        if (penalty != nullptr) {
            e += penalty_value(penalty, prepare(c, theta));
        }
        return e;
    });
    obj.set_fidelity([&, counter](std::span<const double> a, std::span<const double> b) {
        const std::uint64_t k = (*counter)++;
        const double f = fidelity(prepare(c, a), prepare(c, b));
        if (exact) {
            return f;
        }
        // Shot noise on the overlap probability.
        Rng rng = Rng::derive(sampling_seed, k);
        std::size_t hits = 0;
        for (std::size_t s = 0; s < sim.shots; ++s) {
            hits += rng.uniform() < f ? 1 : 0;
        }
        return static_cast<double>(hits) / static_cast<double>(sim.shots);
    });
    if (exact && supports_parameter_shift(c)) {
        obj.set_gradient([&c](Objective &o, std::span<const double> theta) {
            return parameter_shift_gradient(o, c, theta);
        });
    }

    const std::vector<double> theta0 = initial_parameters(c.n_params(), seed);
    Rng opt_rng = Rng::derive(seed, OptimizerPerturbations);
    OptimizerTrace trace = std::visit(
        [&](const auto &cfg) -> OptimizerTrace {
            using T = std::decay_t<decltype(cfg)>;
            if constexpr (std::is_same_v<T, SpsaConfig>) {
                return spsa_minimize(obj, theta0, cfg, opt_rng);
            } else if constexpr (std::is_same_v<T, QnspsaConfig>) {
                return qnspsa_minimize(obj, theta0, cfg, opt_rng);
            } else {
                return shift_gradient_minimize(obj, theta0, cfg);
            }
        },
        opt);

    VqaResult r;
    r.problem = problem.name;
    r.n_qubits = h.n_qubits();
    r.ansatz = {ansatz.family, ansatz.reps, c.n_params(), circuit_depth(c)};
    r.optimizer = opt;
    r.simulation = sim;
    r.trajectories = sim.noisy() ? noisy_trajectory_count(sim.shots) : 1;
    r.best_energy = trace.best_value;
    r.final_energy = trace.final_value;
    r.best_theta = trace.best_theta;
    r.best_state_energy = expectation(h, prepare(c, r.best_theta));
    r.exact_energy = problem.exact_energy;
    r.seed = seed;
    r.convention = problem.convention;
    r.trace = std::move(trace);
    return r;
}

} // namespace

std::string optimizer_name(const OptimizerConfig &cfg) {
    switch (cfg.index()) {
    case 0:
        return "spsa";
    case 1:
        return "qnspsa";
    default:
        return "grad";
    }
}

std::size_t optimizer_iterations(const OptimizerConfig &cfg) {
    return std::visit([](const auto &c) { return c.iterations; }, cfg);
}

Ansatz make_efficient_su2(std::size_t n_qubits, std::size_t reps) {
    return {build_efficient_su2(n_qubits, reps), "efficient_su2", reps};
}

Ansatz make_qaoa(const Observable &h, std::size_t p, CostTermOrder order) {
    return {build_qaoa_ansatz(h, p, order), "qaoa", p};
}

const char *convention_name(EnergyConvention c) noexcept {
    return c == EnergyConvention::Actual ? "actual" : "doubled";
}

VqaResult vqe_run(const Observable &h, const Ansatz &ansatz, const OptimizerConfig &opt,
                  const SimulationConfig &sim, std::uint64_t seed,
                  const ProblemInfo &problem) {
    return run_variational(h, ansatz, opt, sim, seed, problem, nullptr);
}

VqaResult qaoa_run(const Observable &h, std::size_t p, const OptimizerConfig &opt,
                   const SimulationConfig &sim, std::uint64_t seed,
                   const ProblemInfo &problem, std::size_t readout_shots) {
    const Ansatz ansatz = make_qaoa(h, p);
    VqaResult r = run_variational(h, ansatz, opt, sim, seed, problem, nullptr);
    if (readout_shots > 0) {
        read_out_bitstring(r, ansatz, readout_shots, problem);
    }
    return r;
}

void read_out_bitstring(VqaResult &r, const Ansatz &ansatz, std::size_t shots,
                        const ProblemInfo &problem) {
    if (shots == 0) {
        throw InvalidArgument("readout needs at least one shot");
    }
    const StateVector best = prepare(ansatz.circuit, r.best_theta);
    Rng rng = Rng::derive(r.seed, FinalReadout);
    const Histogram counts = sample_counts(
        best, shots, rng, r.simulation.noisy() ? r.simulation.noise.p_readout : 0.0);
    auto top = counts.begin();
    for (auto it = counts.begin(); it != counts.end(); ++it) {
        if (it->second > top->second) {
            top = it;
        }
    }
    r.bitstring = top->first;
    if (problem.graph) {
        r.cut_value = problem.graph->cut_value(*r.bitstring);
    }
}

VqaResult best_of_restarts(std::size_t restarts, std::uint64_t seed,
                           const std::function<VqaResult(std::uint64_t)> &run) {
    if (restarts < 1) {
        throw InvalidArgument("restarts must be >= 1");
    }
    std::optional<VqaResult> best;
    for (std::size_t r = 0; r < restarts; ++r) {
        VqaResult candidate = run(r == 0 ? seed : Rng::derive_seed(seed, 500 + r));
        if (!best || candidate.best_energy < best->best_energy) {
            best = std::move(candidate);
        }
    }
    return std::move(*best);
}

std::vector<VqaResult> vqd_run(const Observable &h,
                               const std::function<Ansatz()> &ansatz_factory,
                               const VqdConfig &cfg, const OptimizerConfig &opt,
                               const SimulationConfig &sim, std::uint64_t seed,
                               const ProblemInfo &problem) {
    if (cfg.k < 2) {
        throw InvalidArgument("VQD needs k >= 2 states");
    }
    if (cfg.restarts < 1) {
        throw InvalidArgument("VQD needs at least one optimization per level");
    }
    std::vector<double> betas = cfg.betas;
    if (betas.empty()) {
        betas.assign(cfg.k - 1, 2.5 * spectral_bound(h));
    }
    if (betas.size() < cfg.k - 1) {
        throw InvalidArgument("VQD needs k-1 penalty weights");
    }
    for (const double b : betas) {
        if (!(b > 0.0)) {
            throw InvalidArgument("VQD penalty weights must be positive");
        }
    }

    std::vector<VqaResult> levels;
    Penalty penalty;
    for (std::size_t level = 0; level < cfg.k; ++level) {
        std::optional<VqaResult> best;
        Ansatz ansatz = ansatz_factory();
        for (std::size_t attempt = 0; attempt < cfg.restarts; ++attempt) {
            const std::uint64_t run_seed =
                (level == 0 && attempt == 0)
                    ? seed
                    : Rng::derive_seed(seed, 1000 * (level + 1) + attempt);
            VqaResult r = run_variational(h, ansatz, opt, sim, run_seed, problem,
                                          level == 0 ? nullptr : &penalty);
            if (!best || r.trace.best_value < best->trace.best_value) {
                best = std::move(r);
            }
        }
        VqaResult r = std::move(*best);
        const StateVector psi = prepare(ansatz.circuit, r.best_theta);
        if (level > 0) {
            r.penalized_objective = r.trace.best_value;
            r.best_energy = r.best_state_energy;
            r.final_energy = expectation(h, prepare(ansatz.circuit, r.trace.final_theta));
            if (r.best_energy < levels.back().best_energy - 1e-9) {
                r.warnings.push_back("level " + std::to_string(level) +
                                     " energy lies below level " +
                                     std::to_string(level - 1) +
                                     "; an earlier level did not reach its optimum");
            }
        }
        penalty.states.push_back(psi);
        penalty.betas.push_back(level < betas.size() ? betas[level] : betas.back());
        levels.push_back(std::move(r));
    }
    return levels;
}

std::vector<GapRow> energy_gap_scan(const std::vector<std::size_t> &ns,
                                    const GapScanConfig &cfg) {
    std::vector<GapRow> rows;
    for (const auto n : ns) {
        MgmParams p = cfg.params;
        p.n_spins = n;
        const Observable h = build_mgm(p);
        GapRow row;
        row.n = n;
        row.even = n % 2 == 0;
        if (cfg.method == GapMethod::Exact) {
            const auto ev = lanczos_lowest(h, 2);
            row.e0 = ev[0];
            row.e1 = ev[1];
        } else {
            VqdConfig vcfg;
            vcfg.k = 2;
            vcfg.restarts = cfg.restarts;
            const std::size_t reps = cfg.reps_for_n(n);
            ProblemInfo info;
            info.name = "mgm";
            const auto levels =
                vqd_run(h, [&]() { return make_efficient_su2(n, reps); }, vcfg,
                        cfg.optimizer, SimulationConfig::exact(),
                        Rng::derive_seed(cfg.seed, n), info);
            row.e0 = levels[0].best_energy;
            row.e1 = levels[1].best_energy;
        }
        row.gap = row.e1 - row.e0;
        rows.push_back(row);
    }
    return rows;
}

} // namespace spinvar
