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
#include "spinvar/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "spinvar/error.hpp"

namespace spinvar {
namespace {

void check_qubit_count(std::size_t n) {
    if (n < 1 || n > StateVector::max_qubits) {
        throw InvalidArgument("qubit count must lie in [1, 26], got " +
                              std::to_string(n));
    }
}

void check_qubit(std::size_t q, std::size_t n) {
    if (q >= n) {
        throw InvalidArgument("qubit index " + std::to_string(q) +
                              " out of range for " + std::to_string(n) +
                              " qubits");
    }
}

} // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amps_.size() != (std::size_t{1} << n_qubits)) {
        throw InvalidArgument("amplitude count " + std::to_string(amps_.size()) +
                              " does not match 2^" + std::to_string(n_qubits));
    }
}

double StateVector::norm() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return std::sqrt(acc);
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

void StateVector::apply_1q(const Matrix2 &u, std::size_t q) {
    check_qubit(q, n_qubits_);
    if (!is_unitary(u)) {
        throw InvalidArgument("single-qubit matrix is not unitary");
    }
    apply_1q_unchecked(u, q);
}

void StateVector::apply_1q_unchecked(const Matrix2 &u, std::size_t q) noexcept {
    const std::size_t stride = std::size_t{1} << q;
    const std::size_t dim = amps_.size();
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t i = block; i < block + stride; ++i) {
            const Complex a0 = amps_[i];
            const Complex a1 = amps_[i + stride];
            amps_[i] = u[0] * a0 + u[1] * a1;
            amps_[i + stride] = u[2] * a0 + u[3] * a1;
        }
    }
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
    check_qubit(control, n_qubits_);
    check_qubit(target, n_qubits_);
    if (control == target) {
        throw InvalidArgument("CX control and target must differ");
    }
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if ((i & cbit) != 0 && (i & tbit) == 0) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

StateVector init_zero(std::size_t n_qubits) { return StateVector(n_qubits); }

namespace gates {

Matrix2 hadamard() noexcept {
    const double r = std::numbers::sqrt2 / 2.0;
    return {Complex{r, 0}, Complex{r, 0}, Complex{r, 0}, Complex{-r, 0}};
}

Matrix2 rx(double theta) noexcept {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
}

Matrix2 ry(double theta) noexcept {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

Matrix2 rz(double theta) noexcept {
    const Complex phase = std::polar(1.0, -theta / 2);
    return {phase, Complex{0, 0}, Complex{0, 0}, std::conj(phase)};
}

Matrix2 u3(double theta, double phi, double lambda) noexcept {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return {Complex{c, 0}, -std::polar(s, lambda), std::polar(s, phi),
            std::polar(c, phi + lambda)};
}

Matrix2 sdg() noexcept {
    return {Complex{1, 0}, Complex{0, 0}, Complex{0, 0}, Complex{0, -1}};
}

} // namespace gates

bool is_unitary(const Matrix2 &u, double tol) noexcept {
    // U^dagger U == I
    const Complex m00 = std::conj(u[0]) * u[0] + std::conj(u[2]) * u[2];
    const Complex m01 = std::conj(u[0]) * u[1] + std::conj(u[2]) * u[3];
    const Complex m11 = std::conj(u[1]) * u[1] + std::conj(u[3]) * u[3];
    return std::abs(m00 - 1.0) <= tol && std::abs(m11 - 1.0) <= tol &&
           std::abs(m01) <= tol;
}

Complex inner_product(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw InvalidArgument("inner product of states with different dimensions");
    }
    Complex acc{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

std::vector<std::uint64_t> sample_indices(const StateVector &s,
                                          std::size_t shots, Rng &rng,
                                          double p_readout) {
    std::vector<double> cdf(s.dimension());
    double acc = 0.0;
    const auto amps = s.amplitudes();
    for (std::size_t i = 0; i < cdf.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    std::vector<std::uint64_t> out;
    out.reserve(shots);
    const std::size_t n = s.n_qubits();
    for (std::size_t k = 0; k < shots; ++k) {
        const double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        auto idx = static_cast<std::uint64_t>(std::distance(cdf.begin(), it));
        if (idx >= cdf.size()) {
            // u rounded up to the total; take the last reachable outcome.
            idx = cdf.size() - 1;
            while (idx > 0 && std::norm(amps[idx]) == 0.0) {
                --idx;
            }
        }
        if (p_readout > 0.0) {
            for (std::size_t q = 0; q < n; ++q) {
                if (rng.uniform() < p_readout) {
                    idx ^= std::uint64_t{1} << q;
                }
            }
        }
        out.push_back(idx);
    }
    return out;
}

Histogram sample_counts(const StateVector &s, std::size_t shots, Rng &rng,
                        double p_readout) {
    if (shots == 0) {
        throw InvalidArgument("shots must be positive");
    }
    Histogram h;
    for (const auto idx : sample_indices(s, shots, rng, p_readout)) {
        ++h[index_to_bitstring(idx, s.n_qubits())];
    }
    return h;
}

std::string index_to_bitstring(std::uint64_t index, std::size_t n_qubits) {
    std::string bits(n_qubits, '0');
    for (std::size_t q = 0; q < n_qubits; ++q) {
        if (((index >> q) & 1U) != 0) {
            bits[q] = '1';
        }
    }
    return bits;
}

std::uint64_t bitstring_to_index(const std::string &bits) {
    std::uint64_t index = 0;
    for (std::size_t q = 0; q < bits.size(); ++q) {
        if (bits[q] == '1') {
            index |= std::uint64_t{1} << q;
        } else if (bits[q] != '0') {
            throw ParseError(q + 1, "bitstring contains '" +
                                        std::string(1, bits[q]) + "'");
        }
    }
    return index;
}

void NoiseConfig::validate() const {
    const auto check = [](double p, const char *name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw InvalidArgument(std::string(name) + " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_readout, "p_readout");
}

} // namespace spinvar
