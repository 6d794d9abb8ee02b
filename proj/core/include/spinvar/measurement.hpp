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
 * @file measurement.hpp
 * Shot-based estimation of observable expectations.
 *
 * Terms are grouped into qubit-wise commuting cliques by greedy colouring
 * in term order. Each clique is measured in its own rotated basis; shots
 * are split equally between cliques (remainder to the earliest ones, and
 * at least one shot per clique). With several noise trajectories, each
 * clique's shots are further split equally between trajectories.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "spinvar/pauli.hpp"
#include "spinvar/rng.hpp"
#include "spinvar/statevector.hpp"

namespace spinvar {

struct MeasurementGroup {
    /// Per-qubit measurement basis (union of the member strings).
    PauliString basis;
    /// Indices into Observable::terms().
    std::vector<std::size_t> terms;
    std::size_t shots = 0;
};

/// Greedy qubit-wise-commuting grouping of the non-identity terms of `o`.
[[nodiscard]] std::vector<MeasurementGroup>
group_qubitwise_commuting(const Observable &o, std::size_t shots);

/// Accumulates samples from one or more (trajectory) states and returns the
/// weighted estimator of <O>. Unbiased when p_readout = 0.
class SampledEstimator {
  public:
    SampledEstimator(const Observable &o, std::size_t shots,
                     std::size_t trajectories = 1);

    [[nodiscard]] std::size_t trajectories() const noexcept { return trajectories_; }
    [[nodiscard]] const std::vector<MeasurementGroup> &groups() const noexcept {
        return groups_;
    }

    /// Shots group `g` draws in trajectory `t`.
    [[nodiscard]] std::size_t shots_for(std::size_t g, std::size_t t) const noexcept;

    /// Samples trajectory `t`'s share of every group from `s`.
    void accumulate(const StateVector &s, std::size_t t, Rng &rng,
                    double p_readout);

    [[nodiscard]] double value() const;

  private:
    const Observable *obs_;
    std::vector<MeasurementGroup> groups_;
    std::size_t trajectories_;
    std::vector<double> parity_sums_; // per term
    std::vector<std::size_t> counts_; // per group
};

/// Single-state shot estimate of <s|O|s>.
[[nodiscard]] double estimate_expectation_sampled(const Observable &o,
                                                  const StateVector &s,
                                                  std::size_t shots, Rng &rng,
                                                  double p_readout = 0.0);

} // namespace spinvar
