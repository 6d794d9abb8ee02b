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
#include "spinvar/measurement.hpp"

#include <bit>

#include "spinvar/error.hpp"

namespace spinvar {
namespace {

void rotate_to_z_basis(StateVector &s, const PauliString &basis) {
    static const Matrix2 h = gates::hadamard();
    static const Matrix2 sdg = gates::sdg();
    for (std::size_t q = 0; q < basis.n_qubits(); ++q) {
        switch (basis.at(q)) {
        case 'X':
            s.apply_1q_unchecked(h, q);
            break;
        case 'Y':
            s.apply_1q_unchecked(sdg, q);
            s.apply_1q_unchecked(h, q);
            break;
        default:
            break;
        }
    }
}

} // namespace

std::vector<MeasurementGroup> group_qubitwise_commuting(const Observable &o,
                                                        std::size_t shots) {
    std::vector<MeasurementGroup> groups;
    const auto &terms = o.terms();
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const PauliString &p = terms[k].string;
        if (p.is_identity()) {
            continue;
        }
        bool placed = false;
        for (auto &g : groups) {
            if (g.basis.qubitwise_commutes(p)) {
                g.basis = PauliString(o.n_qubits(), g.basis.x_mask() | p.x_mask(),
                                      g.basis.z_mask() | p.z_mask());
                g.terms.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) {
            groups.push_back({p, {k}, 0});
        }
    }
    if (!groups.empty()) {
        const std::size_t base = shots / groups.size();
        const std::size_t rem = shots % groups.size();
        for (std::size_t g = 0; g < groups.size(); ++g) {
            groups[g].shots = std::max<std::size_t>(1, base + (g < rem ? 1 : 0));
        }
    }
    return groups;
}

SampledEstimator::SampledEstimator(const Observable &o, std::size_t shots,
                                   std::size_t trajectories)
    : obs_(&o), groups_(group_qubitwise_commuting(o, shots)),
      trajectories_(trajectories), parity_sums_(o.size(), 0.0),
      counts_(groups_.size(), 0) {
    if (shots == 0) {
        throw InvalidArgument("shots must be positive");
    }
    if (trajectories == 0) {
        throw InvalidArgument("trajectory count must be positive");
    }
}

std::size_t SampledEstimator::shots_for(std::size_t g,
                                        std::size_t t) const noexcept {
    const std::size_t total = groups_[g].shots;
    return total / trajectories_ + (t < total % trajectories_ ? 1 : 0);
}

void SampledEstimator::accumulate(const StateVector &s, std::size_t t, Rng &rng,
                                  double p_readout) {
    if (s.n_qubits() != obs_->n_qubits()) {
        throw InvalidArgument("state/observable qubit count mismatch");
    }
    const auto &terms = obs_->terms();
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        const std::size_t shots = shots_for(g, t);
        if (shots == 0) {
            continue;
        }
        StateVector rotated = s;
        rotate_to_z_basis(rotated, groups_[g].basis);
        for (const auto idx : sample_indices(rotated, shots, rng, p_readout)) {
            for (const auto k : groups_[g].terms) {
                const auto odd = std::popcount(idx & terms[k].string.support()) & 1;
                parity_sums_[k] += odd != 0 ? -1.0 : 1.0;
            }
        }
        counts_[g] += shots;
    }
}

double SampledEstimator::value() const {
    const auto &terms = obs_->terms();
    double v = obs_->constant();
    for (std::size_t g = 0; g < groups_.size(); ++g) {
        if (counts_[g] == 0) {
            throw Error("measurement group " + std::to_string(g) +
                        " received no samples");
        }
        for (const auto k : groups_[g].terms) {
            v += terms[k].coefficient * parity_sums_[k] /
                 static_cast<double>(counts_[g]);
        }
    }
    return v;
}

double estimate_expectation_sampled(const Observable &o, const StateVector &s,
                                    std::size_t shots, Rng &rng,
                                    double p_readout) {
    SampledEstimator est(o, shots, 1);
    est.accumulate(s, 0, rng, p_readout);
    return est.value();
}

} // namespace spinvar
