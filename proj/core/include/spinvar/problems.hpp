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
 * @file problems.hpp
 * Hamiltonians studied by the workbench: the periodic Majumdar-Ghosh
 * chain and the Max-cut Ising cost, plus the classical brute-force cut
 * oracle and the edge-list graph format.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "spinvar/pauli.hpp"

namespace spinvar {

struct Edge {
    std::size_t u = 0;
    std::size_t v = 0;
    double weight = 1.0;
};

/// Weighted undirected simple graph.
class Graph {
  public:
    /// Throws InvalidArgument on self-loops, out-of-range endpoints,
    /// duplicate undirected edges or non-finite weights.
    Graph(std::size_t n_nodes, std::vector<Edge> edges);

    [[nodiscard]] std::size_t n_nodes() const noexcept { return n_nodes_; }
    [[nodiscard]] const std::vector<Edge> &edges() const noexcept { return edges_; }
    [[nodiscard]] double total_weight() const noexcept;

    /// Total weight of edges crossing the partition; bit i of `partition`
    /// is node i's side.
    [[nodiscard]] double cut_value(std::uint64_t partition) const noexcept;
    [[nodiscard]] double cut_value(const std::string &bitstring) const;

    /// Edge-list text, see parse_graph.
    [[nodiscard]] std::string to_text() const;

  private:
    std::size_t n_nodes_;
    std::vector<Edge> edges_;
};

/// Parses the edge-list format: the first non-comment line holds
/// `n_nodes`, each later line `u v [w]` (w defaults to 1). `#` starts a
/// comment. Errors carry the 1-based line number.
[[nodiscard]] Graph parse_graph(std::string_view text);

enum class WeightMode { Unit, Mixed };

/// Connected random graph: a random spanning tree plus every other pair
/// independently with probability `edge_probability`. Mixed weights are
/// drawn from {0.5, 1, 1.5, 2, 2.5, 3}.
[[nodiscard]] Graph random_graph(std::size_t n_nodes, double edge_probability,
                                 std::uint64_t seed,
                                 WeightMode weights = WeightMode::Unit);

struct MgmParams {
    std::size_t n_spins = 4;
    double J = 1.0;
    double alpha = -0.1;
    /// Include the overall 1/2 (actual energies). false doubles everything.
    bool half_prefactor = true;

    /// Throws InvalidArgument unless n_spins >= 4 and J, alpha are finite.
    void validate() const;
};

/// Periodic Majumdar-Ghosh chain: XX, YY and ZZ on every nearest-neighbour
/// bond (i, i+1 mod n) with coefficient J(/2), then on every distinct
/// next-nearest-neighbour pair {i, i+2 mod n} with alpha*J(/2). NNN pairs
/// are unordered and deduplicated, so n = 4 has two of them and n >= 5 has n.
[[nodiscard]] Observable build_mgm(const MgmParams &p);

/// H_C = sum_{(u,v,w)} (w/2)(Z_u Z_v - I). Every basis state |x> has
/// energy -cut(x); the ground energy is minus the maximum cut.
[[nodiscard]] Observable build_maxcut(const Graph &g);

struct MaxcutSolution {
    double value = 0.0;
    /// Character i = side of node i; node 0 is always on side '0'.
    std::string partition;
};

/// Exhaustive search over the 2^(n-1) partitions with node 0 fixed.
/// Ties resolve to the smallest partition integer. Throws InvalidArgument
/// when n_nodes > 26.
[[nodiscard]] MaxcutSolution brute_force_maxcut(const Graph &g);

} // namespace spinvar
