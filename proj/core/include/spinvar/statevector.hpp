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
 * @file statevector.hpp
 * Dense 2^n-amplitude state vector and the gate kernels that act on it.
 *
 * Endianness is fixed project-wide: qubit q is bit q of the amplitude
 * index (qubit 0 is the lowest-order bit), and in every label or bitstring
 * character q describes qubit q, i.e. the leftmost character is qubit 0.
 */
#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "spinvar/rng.hpp"

namespace spinvar {

using Complex = std::complex<double>;

/// Row-major 2x2 matrix {u00, u01, u10, u11}.
using Matrix2 = std::array<Complex, 4>;

/// Measurement histogram keyed by bitstring (character q = qubit q).
using Histogram = std::map<std::string, std::size_t>;

class StateVector {
  public:
    static constexpr std::size_t max_qubits = 26;

    /// |0...0> on `n_qubits` qubits.
    explicit StateVector(std::size_t n_qubits);

    /// Takes ownership of `amplitudes`; size must be 2^n_qubits. The vector
    /// need not be normalized (matvec results are ordinary vectors).
    StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }

    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }

    [[nodiscard]] const Complex &operator[](std::size_t i) const { return amps_[i]; }
    [[nodiscard]] Complex &operator[](std::size_t i) { return amps_[i]; }

    [[nodiscard]] double norm() const noexcept;
    [[nodiscard]] std::vector<double> probabilities() const;

    /// Applies a 2x2 unitary to qubit `q`. Throws if `u` is not unitary
    /// within 1e-10 or `q` is out of range.
    void apply_1q(const Matrix2 &u, std::size_t q);

    /// Controlled-X. Throws when control == target or indices are invalid.
    void apply_cx(std::size_t control, std::size_t target);

    /// Same as apply_1q without the unitarity check. Used by the circuit
    /// executor, whose matrices are unitary by construction.
    void apply_1q_unchecked(const Matrix2 &u, std::size_t q) noexcept;

  private:
    std::size_t n_qubits_;
    std::vector<Complex> amps_;
};

/// |0...0>; throws InvalidArgument unless 1 <= n <= 26.
[[nodiscard]] StateVector init_zero(std::size_t n_qubits);

namespace gates {
[[nodiscard]] Matrix2 hadamard() noexcept;
[[nodiscard]] Matrix2 rx(double theta) noexcept;
[[nodiscard]] Matrix2 ry(double theta) noexcept;
[[nodiscard]] Matrix2 rz(double theta) noexcept;
/// Generic single-qubit rotation U(theta, phi, lambda) with three Euler
/// angles, U(0,0,0) = I.
[[nodiscard]] Matrix2 u3(double theta, double phi, double lambda) noexcept;
/// S^dagger.
[[nodiscard]] Matrix2 sdg() noexcept;
} // namespace gates

[[nodiscard]] bool is_unitary(const Matrix2 &u, double tol = 1e-10) noexcept;

/// <a|b>; throws on dimension mismatch.
[[nodiscard]] Complex inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, clamped into [0, 1].
[[nodiscard]] double fidelity(const StateVector &a, const StateVector &b);

/// Draws `shots` basis-state indices from |a_i|^2 by inverse-CDF lookup
/// (binary search over the cumulative distribution), then flips every
/// measured bit independently with probability `p_readout`.
[[nodiscard]] std::vector<std::uint64_t>
sample_indices(const StateVector &s, std::size_t shots, Rng &rng,
               double p_readout = 0.0);

/// Histogram of `shots` measurements in the computational basis.
[[nodiscard]] Histogram sample_counts(const StateVector &s, std::size_t shots,
                                      Rng &rng, double p_readout = 0.0);

/// Bitstring of basis index `index` on `n_qubits` qubits.
[[nodiscard]] std::string index_to_bitstring(std::uint64_t index,
                                             std::size_t n_qubits);
[[nodiscard]] std::uint64_t bitstring_to_index(const std::string &bits);

/// Depolarizing-plus-readout noise realized by Pauli trajectories: after
/// every gate on qubit set Q, with probability p1 (|Q| = 1) or p2
/// (|Q| >= 2) a uniformly random non-identity Pauli on Q is inserted.
struct NoiseConfig {
    double p1 = 0.001;
    double p2 = 0.01;
    double p_readout = 0.01;
    bool enabled = false;

    /// Throws InvalidArgument when a probability lies outside [0, 1].
    void validate() const;

    [[nodiscard]] double readout() const noexcept {
        return enabled ? p_readout : 0.0;
    }

    [[nodiscard]] static NoiseConfig off() noexcept { return {}; }
    [[nodiscard]] static NoiseConfig nisq_defaults() noexcept {
        NoiseConfig n;
        n.enabled = true;
        return n;
    }
};

} // namespace spinvar
