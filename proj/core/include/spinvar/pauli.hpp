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
 * @file pauli.hpp
 * Pauli strings, weighted Pauli sums (observables) and their matrix-free
 * action on state vectors.
 *
 * A Pauli string on n qubits is stored as two n-bit masks: bit q of
 * `x_mask` is set for X or Y on qubit q, bit q of `z_mask` for Z or Y.
 * Label character q is qubit q (leftmost character = qubit 0).
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinvar/statevector.hpp"

namespace spinvar {

class PauliString {
  public:
    static constexpr std::size_t max_qubits = 64;

    PauliString() = default;

    /// Throws InvalidArgument when n_qubits is 0 or > 64, or when a mask
    /// uses bits at or above n_qubits.
    PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

    [[nodiscard]] static PauliString identity(std::size_t n_qubits) {
        return {n_qubits, 0, 0};
    }

    /// Single-qubit Pauli `op` ('X', 'Y' or 'Z') on qubit q.
    [[nodiscard]] static PauliString single(std::size_t n_qubits, std::size_t q,
                                            char op);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::uint64_t x_mask() const noexcept { return x_; }
    [[nodiscard]] std::uint64_t z_mask() const noexcept { return z_; }
    [[nodiscard]] std::uint64_t support() const noexcept { return x_ | z_; }
    [[nodiscard]] bool is_identity() const noexcept { return (x_ | z_) == 0; }
    [[nodiscard]] std::size_t weight() const noexcept;
    [[nodiscard]] std::size_t y_count() const noexcept;

    /// 'I', 'X', 'Y' or 'Z' acting on qubit q.
    [[nodiscard]] char at(std::size_t q) const noexcept;
    [[nodiscard]] std::string label() const;

    /// True when on every qubit the two strings act with the same Pauli or
    /// at least one acts as identity.
    [[nodiscard]] bool qubitwise_commutes(const PauliString &other) const noexcept;

    /// Phase i^(#Y) picked up when writing the string as X^x Z^z.
    [[nodiscard]] Complex y_phase() const noexcept;

    friend bool operator==(const PauliString &, const PauliString &) = default;

  private:
    std::size_t n_qubits_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Parses a label over {I,X,Y,Z}; throws ParseError naming the 1-based
/// position of the first invalid character.
[[nodiscard]] PauliString pauli_from_label(std::string_view label);

struct PauliTerm {
    double coefficient = 0.0;
    PauliString string;
};

/// Real-weighted sum of distinct Pauli strings on a fixed number of
/// qubits. Terms keep first-occurrence order; duplicates are merged and
/// coefficients that cancel below 1e-15 are dropped.
class Observable {
  public:
    static constexpr double drop_threshold = 1e-15;

    explicit Observable(std::size_t n_qubits);
    Observable(std::size_t n_qubits, const std::vector<PauliTerm> &terms);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<PauliTerm> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Sum of identity-term coefficients.
    [[nodiscard]] double constant() const noexcept;
    [[nodiscard]] bool is_identity_only() const noexcept;

    [[nodiscard]] Observable scaled(double factor) const;

    /// One `coefficient<TAB>label` line per term, coefficients printed with
    /// round-trip precision.
    [[nodiscard]] std::string to_text() const;
    [[nodiscard]] static Observable from_text(std::string_view text);

  private:
    std::size_t n_qubits_;
    std::vector<PauliTerm> terms_;
};

/// P|s>; input unchanged.
[[nodiscard]] StateVector apply_string(const PauliString &p, const StateVector &s);

/// In-place P|s>.
void apply_string_inplace(const PauliString &p, StateVector &s);

/// exp(-i (angle/2) P)|s> in place. Identity strings are rejected because
/// they only contribute a global phase.
void apply_pauli_rotation(StateVector &s, const PauliString &p, double angle);

/// sum_k c_k P_k |s>.
[[nodiscard]] StateVector observable_matvec(const Observable &o,
                                            const StateVector &s);

/// Span form of observable_matvec used by the Lanczos solver; `out` is
/// overwritten. Sizes must equal 2^o.n_qubits().
void observable_matvec(const Observable &o, std::span<const Complex> in,
                       std::span<Complex> out);

/// <s|P|s>.
[[nodiscard]] Complex string_expectation(const PauliString &p,
                                         std::span<const Complex> s);

/// Re<s|O|s> for a normalized state. Throws when the state is not
/// normalized within 1e-8 or the imaginary residue exceeds 1e-10 (scaled by
/// the spectral bound when that is larger than one).
[[nodiscard]] double expectation(const Observable &o, const StateVector &s);

/// sum_k |c_k|, an upper bound on the spectral radius.
[[nodiscard]] double spectral_bound(const Observable &o) noexcept;

} // namespace spinvar
