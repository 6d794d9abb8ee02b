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
#include "spinvar/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "spinvar/error.hpp"

namespace spinvar {
namespace {

std::vector<std::size_t> mask_qubits(std::uint64_t mask) {
    std::vector<std::size_t> qs;
    while (mask != 0) {
        qs.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return qs;
}

class Layering {
  public:
    explicit Layering(std::size_t n_qubits) : level_(n_qubits, 0) {}

    void place(std::uint64_t mask) {
        std::size_t top = 0;
        for (const auto q : mask_qubits(mask)) {
            top = std::max(top, level_[q]);
        }
        for (const auto q : mask_qubits(mask)) {
            level_[q] = top + 1;
        }
    }

    [[nodiscard]] std::size_t depth() const {
        return level_.empty() ? 0 : *std::max_element(level_.begin(), level_.end());
    }

  private:
    std::vector<std::size_t> level_;
};

void place_native_rotation(Layering &layers, const PauliString &p) {
    const auto support = mask_qubits(p.support());
    const auto bit = [](std::size_t q) { return std::uint64_t{1} << q; };
    const auto basis_change = [&]() {
        for (const auto q : support) {
            if (p.at(q) != 'Z') {
                layers.place(bit(q));
            }
        }
    };
    basis_change();
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
        layers.place(bit(support[i]) | bit(support[i + 1]));
    }
    layers.place(bit(support.back()));
    for (std::size_t i = support.size() - 1; i > 0; --i) {
        layers.place(bit(support[i - 1]) | bit(support[i]));
    }
    basis_change();
}

void insert_pauli_error(StateVector &state, std::uint64_t mask, Rng &rng) {
    const auto qs = mask_qubits(mask);
    const std::uint64_t choices = (std::uint64_t{1} << (2 * qs.size())) - 1;
    std::uint64_t r = 1 + rng.below(choices);
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (const auto q : qs) {
        // 1 = X, 2 = Z, 3 = Y
        const std::uint64_t code = r & 3U;
        r >>= 2U;
        if ((code & 1U) != 0) {
            x |= std::uint64_t{1} << q;
        }
        if ((code & 2U) != 0) {
            z |= std::uint64_t{1} << q;
        }
    }
    apply_string_inplace(PauliString(state.n_qubits(), x, z), state);
}

} // namespace

const char *gate_name(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::H:
        return "H";
    case GateKind::U3:
        return "U3";
    case GateKind::CX:
        return "CX";
    case GateKind::PauliRotation:
        return "PAULI_ROT";
    }
    return "?";
}

std::uint64_t Gate::qubit_mask() const noexcept {
    switch (kind) {
    case GateKind::PauliRotation:
        return pauli.support();
    case GateKind::CX:
        return (std::uint64_t{1} << qubits[0]) | (std::uint64_t{1} << qubits[1]);
    default:
        return std::uint64_t{1} << qubits[0];
    }
}

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > PauliString::max_qubits) {
        throw InvalidArgument("circuit qubit count must lie in [1, 64]");
    }
}

void Circuit::add(Gate g) {
    if (g.kind == GateKind::PauliRotation) {
        if (g.pauli.n_qubits() != n_qubits_) {
            throw InvalidArgument("Pauli rotation string does not match circuit width");
        }
        if (g.pauli.is_identity()) {
            throw InvalidArgument("Pauli rotation about the identity is rejected");
        }
    } else {
        const std::size_t used = g.kind == GateKind::CX ? 2 : 1;
        for (std::size_t i = 0; i < used; ++i) {
            if (g.qubits[i] >= n_qubits_) {
                throw InvalidArgument("gate qubit " + std::to_string(g.qubits[i]) +
                                      " out of range");
            }
        }
        if (g.kind == GateKind::CX && g.qubits[0] == g.qubits[1]) {
            throw InvalidArgument("CX control and target must differ");
        }
    }
    if (!std::isfinite(g.angle.value)) {
        throw InvalidArgument("non-finite gate angle or multiplier");
    }
    if (g.angle.slot) {
        if (slot_uses_.size() <= *g.angle.slot) {
            slot_uses_.resize(*g.angle.slot + 1, 0);
        }
        ++slot_uses_[*g.angle.slot];
    }
    gates_.push_back(std::move(g));
}

Circuit &Circuit::h(std::size_t q) {
    Gate g;
    g.kind = GateKind::H;
    g.qubits = {q, 0};
    add(std::move(g));
    return *this;
}

Circuit &Circuit::rx(std::size_t q, Angle a) {
    add(Gate{GateKind::RX, {q, 0}, a, {}, {}});
    return *this;
}

Circuit &Circuit::ry(std::size_t q, Angle a) {
    add(Gate{GateKind::RY, {q, 0}, a, {}, {}});
    return *this;
}

Circuit &Circuit::rz(std::size_t q, Angle a) {
    add(Gate{GateKind::RZ, {q, 0}, a, {}, {}});
    return *this;
}

Circuit &Circuit::u3(std::size_t q, double theta, double phi, double lambda) {
    add(Gate{GateKind::U3, {q, 0}, Angle::fixed(theta), {phi, lambda}, {}});
    return *this;
}

Circuit &Circuit::cx(std::size_t control, std::size_t target) {
    add(Gate{GateKind::CX, {control, target}, Angle::fixed(0.0), {}, {}});
    return *this;
}

Circuit &Circuit::pauli_rotation(const PauliString &p, Angle a) {
    add(Gate{GateKind::PauliRotation, {0, 0}, a, {}, p});
    return *this;
}

std::vector<std::size_t> Circuit::gates_using(std::size_t slot) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < gates_.size(); ++i) {
        if (gates_[i].angle.slot == slot) {
            out.push_back(i);
        }
    }
    return out;
}

void Circuit::validate() const {
    for (std::size_t j = 0; j < slot_uses_.size(); ++j) {
        if (slot_uses_[j] == 0) {
            throw InvalidArgument("parameter slot " + std::to_string(j) +
                                  " is not referenced by any gate");
        }
    }
}

std::string Circuit::dump() const {
    std::ostringstream out;
    out.precision(17);
    for (const auto &g : gates_) {
        out << gate_name(g.kind) << ' ';
        switch (g.kind) {
        case GateKind::PauliRotation:
            out << g.pauli.label();
            break;
        case GateKind::CX:
            out << g.qubits[0] << ',' << g.qubits[1];
            break;
        default:
            out << g.qubits[0];
            break;
        }
        if (g.angle.slot) {
            out << ' ' << *g.angle.slot << ' ' << g.angle.value;
        } else if (g.kind == GateKind::H || g.kind == GateKind::CX) {
            out << " - -";
        } else {
            out << " - " << g.angle.value;
        }
        out << '\n';
    }
    return out.str();
}

Circuit build_efficient_su2(std::size_t n_qubits, std::size_t reps) {
    if (n_qubits < 2) {
        throw InvalidArgument("EfficientSU2 needs at least 2 qubits");
    }
    if (reps < 1) {
        throw InvalidArgument("EfficientSU2 needs reps >= 1");
    }
    Circuit c(n_qubits);
    std::size_t slot = 0;
    for (std::size_t block = 0; block <= reps; ++block) {
        for (std::size_t q = 0; q < n_qubits; ++q) {
            c.ry(q, Angle::bound(slot++));
        }
        for (std::size_t q = 0; q < n_qubits; ++q) {
            c.rz(q, Angle::bound(slot++));
        }
        if (block < reps) {
            for (std::size_t q = 0; q + 1 < n_qubits; ++q) {
                c.cx(q, q + 1);
            }
        }
    }
    return c;
}

Circuit build_qaoa_ansatz(const Observable &h, std::size_t p, CostTermOrder order) {
    if (p < 1) {
        throw InvalidArgument("QAOA level p must be >= 1");
    }
    if (h.empty() || h.is_identity_only()) {
        throw InvalidArgument("QAOA needs an observable with a non-identity term");
    }
    std::vector<PauliTerm> cost;
    for (const auto &t : h.terms()) {
        if (!t.string.is_identity()) {
            cost.push_back(t);
        }
    }
    if (order == CostTermOrder::PauliType) {
        const auto lead = [](const PauliString &s) {
            const auto q = static_cast<std::size_t>(std::countr_zero(s.support()));
            return s.at(q);
        };
        const auto rank = [](char op) { return op == 'X' ? 0 : op == 'Y' ? 1 : 2; };
        std::stable_sort(cost.begin(), cost.end(), [&](const auto &a, const auto &b) {
            return rank(lead(a.string)) < rank(lead(b.string));
        });
    }
    const std::size_t n = h.n_qubits();
    Circuit c(n);
    for (std::size_t q = 0; q < n; ++q) {
        c.h(q);
    }
    for (std::size_t layer = 0; layer < p; ++layer) {
        const std::size_t gamma = 2 * layer;
        const std::size_t beta = gamma + 1;
        for (const auto &t : cost) {
            c.pauli_rotation(t.string, Angle::bound(gamma, 2.0 * t.coefficient));
        }
        for (std::size_t q = 0; q < n; ++q) {
            c.rx(q, Angle::bound(beta, 2.0));
        }
    }
    return c;
}

Circuit build_pauli_cluster_ansatz(const std::vector<PauliString> &strings,
                                   std::size_t reps) {
    if (strings.empty()) {
        throw InvalidArgument("cluster ansatz needs at least one Pauli string");
    }
    if (reps < 1) {
        throw InvalidArgument("cluster ansatz needs reps >= 1");
    }
    Circuit c(strings.front().n_qubits());
    std::size_t slot = 0;
    for (std::size_t r = 0; r < reps; ++r) {
        for (const auto &s : strings) {
            c.pauli_rotation(s, Angle::bound(slot++));
        }
    }
    return c;
}

std::size_t circuit_depth(const Circuit &c, DepthMode mode) {
    Layering layers(c.n_qubits());
    for (const auto &g : c.gates()) {
        if (mode == DepthMode::Native && g.kind == GateKind::PauliRotation) {
            place_native_rotation(layers, g.pauli);
        } else {
            layers.place(g.qubit_mask());
        }
    }
    return layers.depth();
}

void execute(const Circuit &c, std::span<const double> theta, StateVector &state,
             const NoiseConfig &noise, Rng *rng) {
    if (theta.size() != c.n_params()) {
        throw InvalidArgument("parameter vector has " + std::to_string(theta.size()) +
                              " entries but the circuit expects " +
                              std::to_string(c.n_params()));
    }
    if (state.n_qubits() != c.n_qubits()) {
        throw InvalidArgument("state width does not match circuit width");
    }
    if (noise.enabled && rng == nullptr) {
        throw InvalidArgument("noisy execution needs a random generator");
    }
    for (const auto &g : c.gates()) {
        const double angle = g.angle.resolve(theta);
        switch (g.kind) {
        case GateKind::H:
            state.apply_1q_unchecked(gates::hadamard(), g.qubits[0]);
            break;
        case GateKind::RX:
            state.apply_1q_unchecked(gates::rx(angle), g.qubits[0]);
            break;
        case GateKind::RY:
            state.apply_1q_unchecked(gates::ry(angle), g.qubits[0]);
            break;
        case GateKind::RZ:
            state.apply_1q_unchecked(gates::rz(angle), g.qubits[0]);
            break;
        case GateKind::U3:
            state.apply_1q_unchecked(gates::u3(angle, g.phases[0], g.phases[1]),
                                     g.qubits[0]);
            break;
        case GateKind::CX:
            state.apply_cx(g.qubits[0], g.qubits[1]);
            break;
        case GateKind::PauliRotation:
            apply_pauli_rotation(state, g.pauli, angle);
            break;
        }
        if (noise.enabled) {
            const std::uint64_t mask = g.qubit_mask();
            const double p = std::popcount(mask) == 1 ? noise.p1 : noise.p2;
            if (rng->uniform() < p) {
                insert_pauli_error(state, mask, *rng);
            }
        }
    }
}

StateVector run_circuit(const Circuit &c, std::span<const double> theta,
                        const StateVector &s0, const NoiseConfig &noise, Rng *rng) {
    c.validate();
    for (const double t : theta) {
        if (!std::isfinite(t)) {
            throw InvalidArgument("non-finite parameter value");
        }
    }
    StateVector out = s0;
    execute(c, theta, out, noise, rng);
    return out;
}

std::size_t noisy_trajectory_count(std::size_t shots) noexcept {
    return std::min<std::size_t>(shots, 256);
}

SampledEnergy estimate_circuit_energy(const Circuit &c, std::span<const double> theta,
                                      const Observable &o, std::size_t shots,
                                      const NoiseConfig &noise, Rng &rng) {
    if (o.n_qubits() != c.n_qubits()) {
        throw InvalidArgument("observable width does not match circuit width");
    }
    if (!noise.enabled) {
        StateVector s(c.n_qubits());
        execute(c, theta, s);
        SampledEstimator est(o, shots, 1);
        est.accumulate(s, 0, rng, 0.0);
        return {est.value(), 1};
    }
    const std::size_t trajectories = noisy_trajectory_count(shots);
    SampledEstimator est(o, shots, trajectories);
    for (std::size_t t = 0; t < trajectories; ++t) {
        Rng traj = rng.split(t);
        StateVector s(c.n_qubits());
        execute(c, theta, s, noise, &traj);
        est.accumulate(s, t, traj, noise.p_readout);
    }
    return {est.value(), trajectories};
}

} // namespace spinvar
