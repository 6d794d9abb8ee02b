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
 * @file circuits.hpp
 * Parameterized circuits, the ansatz families and circuit execution.
 *
 * Angle conventions: RX/RY/RZ(t) = exp(-i t/2 P) and a Pauli rotation
 * gate with angle t applies exp(-i t/2 P). A gate bound to parameter slot
 * j with multiplier m uses angle m * theta[j].
 */
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinvar/measurement.hpp"
#include "spinvar/pauli.hpp"
#include "spinvar/rng.hpp"
#include "spinvar/statevector.hpp"

namespace spinvar {

enum class GateKind { RX, RY, RZ, H, U3, CX, PauliRotation };

[[nodiscard]] const char *gate_name(GateKind kind) noexcept;

/// Either a reference to a parameter slot scaled by a fixed multiplier, or
/// a constant angle.
struct Angle {
    std::optional<std::size_t> slot;
    double value = 0.0; ///< multiplier when bound, angle otherwise

    [[nodiscard]] static Angle bound(std::size_t slot, double multiplier = 1.0) {
        return {slot, multiplier};
    }
    [[nodiscard]] static Angle fixed(double angle) { return {std::nullopt, angle}; }

    [[nodiscard]] double resolve(std::span<const double> theta) const {
        return slot ? value * theta[*slot] : value;
    }
};

struct Gate {
    GateKind kind = GateKind::H;
    /// qubits[0] for single-qubit gates; {control, target} for CX. Unused
    /// for Pauli rotations, whose support is `pauli`.
    std::array<std::size_t, 2> qubits{};
    Angle angle;
    /// U3's phi and lambda (always constant).
    std::array<double, 2> phases{};
    PauliString pauli;

    /// Bit mask of the qubits this gate touches.
    [[nodiscard]] std::uint64_t qubit_mask() const noexcept;
};

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    Circuit &h(std::size_t q);
    Circuit &rx(std::size_t q, Angle a);
    Circuit &ry(std::size_t q, Angle a);
    Circuit &rz(std::size_t q, Angle a);
    Circuit &u3(std::size_t q, double theta, double phi, double lambda);
    Circuit &cx(std::size_t control, std::size_t target);
    Circuit &pauli_rotation(const PauliString &p, Angle a);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept { return gates_; }

    /// P: one past the highest referenced slot.
    [[nodiscard]] std::size_t n_params() const noexcept { return slot_uses_.size(); }

    /// Gate indices reading parameter slot j.
    [[nodiscard]] std::vector<std::size_t> gates_using(std::size_t slot) const;

    /// Throws InvalidArgument when a slot in [0, P) is referenced by no gate.
    void validate() const;

    /// One line per gate: `kind qubits slot multiplier`; unbound gates print
    /// `-` for the slot and their constant angle as the last field.
    [[nodiscard]] std::string dump() const;

  private:
    void add(Gate g);

    std::size_t n_qubits_;
    std::vector<Gate> gates_;
    std::vector<std::size_t> slot_uses_;
};

/// Hardware-efficient ansatz: reps+1 rotation blocks (an RY layer then an
/// RZ layer, one parameter per gate) separated by reps linear CX chains
/// CX(0,1), CX(1,2), ..., CX(n-2,n-1). n_params = 2n(reps+1).
[[nodiscard]] Circuit build_efficient_su2(std::size_t n_qubits, std::size_t reps);

/// Order of the cost-layer rotations inside one QAOA level.
enum class CostTermOrder {
    /// Observable order (for MGM: bond by bond, X, Y, Z within a bond).
    Construction,
    /// Stable partition by the first non-identity Pauli letter: all X-led
    /// terms, then Y, then Z. For SU(2)-symmetric models the bond-by-bond
    /// product commutes with total spin and leaves |+...+> stuck in the
    /// fully polarized multiplet; this order breaks that symmetry.
    PauliType,
};

/// p-level QAOA: H on every qubit, then p times {exp(-i gamma_j c_k P_k)
/// for each non-identity term, RX(2 beta_j) on every qubit}. Slots are
/// gamma_1, beta_1, ..., gamma_p, beta_p.
[[nodiscard]] Circuit build_qaoa_ansatz(const Observable &h, std::size_t p,
                                        CostTermOrder order = CostTermOrder::PauliType);

/// reps repetitions of one independently parameterized Pauli rotation per
/// listed string (Trotterized exponential of a Pauli-string cluster
/// operator). n_params = reps * strings.size().
[[nodiscard]] Circuit build_pauli_cluster_ansatz(const std::vector<PauliString> &strings,
                                                 std::size_t reps);

enum class DepthMode {
    /// Every gate, including multi-qubit Pauli rotations, is one layer.
    Logical,
    /// Pauli rotations expanded into basis changes, a CX ladder over their
    /// support, an RZ and the mirrored ladder and basis changes.
    Native,
};

/// Greedy ASAP layering: each gate sits one layer after the latest gate
/// sharing one of its qubits. Deterministic.
[[nodiscard]] std::size_t circuit_depth(const Circuit &c,
                                        DepthMode mode = DepthMode::Native);

/// Applies the circuit in place. With `noise` enabled, a trajectory Pauli
/// error is drawn from `rng` after every gate (one uniform draw per gate,
/// plus the Pauli choice when an error fires).
void execute(const Circuit &c, std::span<const double> theta, StateVector &state,
             const NoiseConfig &noise = NoiseConfig::off(), Rng *rng = nullptr);

/// Copying form of execute. Throws InvalidArgument when theta has the wrong
/// length, the state size differs or noise is enabled without an rng.
[[nodiscard]] StateVector run_circuit(const Circuit &c, std::span<const double> theta,
                                      const StateVector &s0,
                                      const NoiseConfig &noise = NoiseConfig::off(),
                                      Rng *rng = nullptr);

/// Trajectory count used by noisy estimation: min(shots, 256).
[[nodiscard]] std::size_t noisy_trajectory_count(std::size_t shots) noexcept;

struct SampledEnergy {
    double value = 0.0;
    std::size_t trajectories = 1;
};

/// Shot-based estimate of <O> on the circuit's output from |0...0>. With
/// noise enabled, runs noisy_trajectory_count(shots) independent
/// trajectories (child streams of `rng`) and spreads the shots over them.
[[nodiscard]] SampledEnergy estimate_circuit_energy(const Circuit &c,
                                                    std::span<const double> theta,
                                                    const Observable &o,
                                                    std::size_t shots,
                                                    const NoiseConfig &noise,
                                                    Rng &rng);

} // namespace spinvar
