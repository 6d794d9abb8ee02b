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
 * @file exact.hpp
 * Classical eigenvalue oracles for observables.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "spinvar/pauli.hpp"

namespace spinvar {

/// Full ascending spectrum from the dense Hermitian matrix (n <= 12).
[[nodiscard]] std::vector<double> dense_spectrum(const Observable &h);

struct LanczosOptions {
    /// Ritz-value drift allowed over the last 5 steps.
    double tolerance = 1e-9;
    /// Residual norm |beta_j s_j| required alongside the drift test.
    double residual_tolerance = 1e-6;
    std::size_t max_iterations = 500;
    std::uint64_t seed = 0x5EEDULL;
};

/// k (<= 4) lowest eigenvalues, with multiplicity, by matrix-free Lanczos
/// with full reorthogonalization. Level j restarts from a seeded random
/// vector deflated against the Ritz vectors of levels < j, so degenerate
/// eigenvalues are reported once per copy. Throws ConvergenceError with
/// the best estimates when a level does not converge.
[[nodiscard]] std::vector<double> lanczos_lowest(const Observable &h, std::size_t k,
                                                 const LanczosOptions &options = {});

} // namespace spinvar
