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
#include "spinvar/problems.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "spinvar/error.hpp"
#include "spinvar/rng.hpp"

namespace spinvar {

Graph::Graph(std::size_t n_nodes, std::vector<Edge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
    if (n_nodes == 0 || n_nodes > PauliString::max_qubits) {
        throw InvalidArgument("graph must have between 1 and 64 nodes");
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto &e : edges_) {
        if (e.u >= n_nodes || e.v >= n_nodes) {
            throw InvalidArgument("edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ") references a node "
                                  "outside [0, " + std::to_string(n_nodes) + ")");
        }
        if (e.u == e.v) {
            throw InvalidArgument("self-loop on node " + std::to_string(e.u));
        }
        if (!std::isfinite(e.weight)) {
            throw InvalidArgument("non-finite edge weight");
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw InvalidArgument("duplicate edge (" + std::to_string(e.u) + ", " +
                                  std::to_string(e.v) + ")");
        }
    }
}

double Graph::total_weight() const noexcept {
    return std::accumulate(edges_.begin(), edges_.end(), 0.0,
                           [](double acc, const Edge &e) { return acc + e.weight; });
}

double Graph::cut_value(std::uint64_t partition) const noexcept {
    double cut = 0.0;
    for (const auto &e : edges_) {
        if ((((partition >> e.u) ^ (partition >> e.v)) & 1U) != 0) {
            cut += e.weight;
        }
    }
    return cut;
}

double Graph::cut_value(const std::string &bitstring) const {
    if (bitstring.size() != n_nodes_) {
        throw InvalidArgument("bitstring length does not match node count");
    }
    return cut_value(bitstring_to_index(bitstring));
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out.precision(17);
    out << n_nodes_ << '\n';
    for (const auto &e : edges_) {
        out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
    }
    return out.str();
}

Graph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    std::size_t n_nodes = 0;
    bool have_header = false;
    std::vector<Edge> edges;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    const auto fail = [&](const std::string &msg) {
        throw ParseError(line_no, "line " + std::to_string(line_no) + ": " + msg);
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = raw.substr(0, hash);
        std::istringstream fields(line);
        std::vector<std::string> tok;
        for (std::string t; fields >> t;) {
            tok.push_back(t);
        }
        if (tok.empty()) {
            continue;
        }
        const auto to_index = [&](const std::string &s) -> std::size_t {
            std::size_t pos = 0;
            long long v = 0;
            try {
                v = std::stoll(s, &pos);
            } catch (const std::exception &) {
                fail("'" + s + "' is not an integer");
            }
            if (pos != s.size() || v < 0) {
                fail("'" + s + "' is not a non-negative integer");
            }
            return static_cast<std::size_t>(v);
        };
        if (!have_header) {
            if (tok.size() != 1) {
                fail("expected the node count on its own line");
            }
            n_nodes = to_index(tok[0]);
            if (n_nodes == 0 || n_nodes > PauliString::max_qubits) {
                fail("node count must lie in [1, 64]");
            }
            have_header = true;
            continue;
        }
        if (tok.size() < 2 || tok.size() > 3) {
            fail("expected 'u v [w]'");
        }
        Edge e{to_index(tok[0]), to_index(tok[1]), 1.0};
        if (tok.size() == 3) {
            std::size_t pos = 0;
            try {
                e.weight = std::stod(tok[2], &pos);
            } catch (const std::exception &) {
                fail("'" + tok[2] + "' is not a number");
            }
            if (pos != tok[2].size() || !std::isfinite(e.weight)) {
                fail("'" + tok[2] + "' is not a finite number");
            }
        }
        if (e.u >= n_nodes || e.v >= n_nodes) {
            fail("node index out of range [0, " + std::to_string(n_nodes) + ")");
        }
        if (e.u == e.v) {
            fail("self-loop on node " + std::to_string(e.u));
        }
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            fail("duplicate edge (" + std::to_string(e.u) + ", " +
                 std::to_string(e.v) + ")");
        }
        edges.push_back(e);
    }
    if (!have_header) {
        throw ParseError(line_no, "graph text has no node-count line");
    }
    return {n_nodes, std::move(edges)};
}

Graph random_graph(std::size_t n_nodes, double edge_probability,
                   std::uint64_t seed, WeightMode weights) {
    if (n_nodes < 2) {
        throw InvalidArgument("random graph needs at least 2 nodes");
    }
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
        throw InvalidArgument("edge probability must lie in [0, 1]");
    }
    Rng rng(seed);
    const auto draw_weight = [&]() {
        if (weights == WeightMode::Unit) {
            return 1.0;
        }
        return 0.5 * static_cast<double>(1 + rng.below(6));
    };
    std::vector<std::size_t> order(n_nodes);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = n_nodes - 1; i > 0; --i) {
        std::swap(order[i], order[rng.below(i + 1)]);
    }
    std::set<std::pair<std::size_t, std::size_t>> present;
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n_nodes; ++i) {
        const std::size_t a = order[i];
        const std::size_t b = order[rng.below(i)];
        present.emplace(std::min(a, b), std::max(a, b));
    }
    for (std::size_t u = 0; u < n_nodes; ++u) {
        for (std::size_t v = u + 1; v < n_nodes; ++v) {
            const bool tree = present.count({u, v}) != 0;
            if (tree || rng.uniform() < edge_probability) {
                edges.push_back({u, v, draw_weight()});
            }
        }
    }
    return {n_nodes, std::move(edges)};
}

void MgmParams::validate() const {
    if (n_spins < 4) {
        throw InvalidArgument("n must be >= 4 (smallest ring with a distinct "
                              "next-nearest-neighbour bond)");
    }
    if (n_spins > PauliString::max_qubits) {
        throw InvalidArgument("n must be <= 64");
    }
    if (!std::isfinite(J) || !std::isfinite(alpha)) {
        throw InvalidArgument("J and alpha must be finite");
    }
}

Observable build_mgm(const MgmParams &p) {
    p.validate();
    const std::size_t n = p.n_spins;
    const double scale = p.half_prefactor ? 0.5 : 1.0;
    std::vector<PauliTerm> terms;
    const auto add_bond = [&](std::size_t i, std::size_t j, double c) {
        for (const char op : {'X', 'Y', 'Z'}) {
            const PauliString a = PauliString::single(n, i, op);
            const PauliString b = PauliString::single(n, j, op);
            terms.push_back({c, PauliString(n, a.x_mask() | b.x_mask(),
                                             a.z_mask() | b.z_mask())});
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        add_bond(i, (i + 1) % n, scale * p.J);
    }
    std::set<std::pair<std::size_t, std::size_t>> nnn;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = (i + 2) % n;
        if (nnn.emplace(std::min(i, j), std::max(i, j)).second) {
            add_bond(i, j, scale * p.alpha * p.J);
        }
    }
    return {n, terms};
}

Observable build_maxcut(const Graph &g) {
    const std::size_t n = g.n_nodes();
    std::vector<PauliTerm> terms;
    double constant = 0.0;
    for (const auto &e : g.edges()) {
        const std::uint64_t z = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
        terms.push_back({e.weight / 2, PauliString(n, 0, z)});
        constant -= e.weight / 2;
    }
    terms.push_back({constant, PauliString::identity(n)});
    return {n, terms};
}

MaxcutSolution brute_force_maxcut(const Graph &g) {
    const std::size_t n = g.n_nodes();
    if (n > 26) {
        throw InvalidArgument("brute-force Max-cut is limited to 26 nodes");
    }
    if (n == 1) {
        return {0.0, "0"};
    }
    std::vector<std::vector<std::pair<std::size_t, double>>> adj(n);
    for (const auto &e : g.edges()) {
        adj[e.u].emplace_back(e.v, e.weight);
        adj[e.v].emplace_back(e.u, e.weight);
    }
    // Gray-code walk over nodes 1..n-1; one node flips per step.
    const double eps = 1e-9 * std::max(1.0, g.total_weight());
    std::uint64_t x = 0;
    double cut = 0.0;
    double best = 0.0;
    std::uint64_t best_x = 0;
    const std::uint64_t count = std::uint64_t{1} << (n - 1);
    for (std::uint64_t k = 1; k < count; ++k) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(k)) + 1;
        const bool side = ((x >> flip) & 1U) != 0;
        for (const auto &[v, w] : adj[flip]) {
            const bool other = ((x >> v) & 1U) != 0;
            cut += (side == other) ? w : -w;
        }
        x ^= std::uint64_t{1} << flip;
        if (cut > best + eps) {
            best = cut;
            best_x = x;
        } else if (cut >= best - eps && x < best_x) {
            best_x = x;
        }
    }
    return {g.cut_value(best_x), index_to_bitstring(best_x, n)};
}

} // namespace spinvar
