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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <numeric>

#include "spinvar/error.hpp"
#include "spinvar/exact.hpp"
#include "spinvar/problems.hpp"
#include "test_support.hpp"

using namespace spinvar;
using Catch::Approx;

namespace {

double dense_ground(const Observable &h) {
    Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::dense(h));
    return es.eigenvalues()(0);
}

std::map<std::string, double> term_map(const Observable &o) {
    std::map<std::string, double> m;
    for (const auto &t : o.terms()) {
        m[t.string.label()] = t.coefficient;
    }
    return m;
}

} // namespace

TEST_CASE("MGM term counts and coefficients", "[problems]") {
    const auto h4 = build_mgm({4, 1.0, -0.1, true});
    CHECK(h4.size() == 18);
    const auto t = term_map(h4);
    CHECK(t.at("XXII") == 0.5);
    CHECK(t.at("ZIIZ") == 0.5);
    CHECK(t.at("YIYI") == Approx(-0.05));
    CHECK(t.at("IZIZ") == Approx(-0.05));

    CHECK(build_mgm({15, 1.0, -0.1, true}).size() == 90);
    CHECK(build_mgm({5, 1.0, -0.1, true}).size() == 30);
    CHECK_THROWS_AS(build_mgm({3, 1.0, -0.1, true}), InvalidArgument);
}

TEST_CASE("MGM ground energies from the dense oracle", "[problems]") {
    CHECK(dense_ground(build_mgm({4, 1.0, -0.1, true})) == Approx(-4.1).margin(1e-10));
    // Heisenberg ring: E0 = -2 J in S.S units, times 4 for Paulis, times 1/2.
    CHECK(dense_ground(build_mgm({4, 1.0, 0.0, true})) == Approx(-4.0).margin(1e-10));
    // Reference value from an independent sparse Kronecker build.
    CHECK(dense_ground(build_mgm({8, 1.0, -0.1, true})) == Approx(-7.6205156484).margin(1e-9));
}

TEST_CASE("MGM is translation invariant", "[problems][property]") {
    for (std::size_t n = 4; n <= 9; ++n) {
        const auto h = build_mgm({n, 1.0, -0.1, true});
        std::map<std::string, double> shifted;
        for (const auto &t : h.terms()) {
            const auto label = t.string.label();
            std::string moved(n, 'I');
            for (std::size_t q = 0; q < n; ++q) {
                moved[(q + 1) % n] = label[q];
            }
            shifted[moved] = t.coefficient;
        }
        CHECK(shifted == term_map(h));
    }
}

TEST_CASE("doubling J or dropping the half prefactor doubles the spectrum", "[problems][property]") {
    for (std::size_t n = 4; n <= 8; ++n) {
        const auto base = dense_spectrum(build_mgm({n, 1.0, -0.1, true}));
        const auto twice_j = dense_spectrum(build_mgm({n, 2.0, -0.1, true}));
        const auto doubled = dense_spectrum(build_mgm({n, 1.0, -0.1, false}));
        REQUIRE(base.size() == twice_j.size());
        for (std::size_t i = 0; i < base.size(); ++i) {
            CHECK(twice_j[i] == Approx(2 * base[i]).margin(1e-9));
            CHECK(doubled[i] == Approx(2 * base[i]).margin(1e-9));
        }
    }
}

TEST_CASE("Max-cut Hamiltonians on small graphs", "[problems]") {
    const Graph edge(2, {{0, 1, 1.0}});
    const auto h = build_maxcut(edge);
    const auto d = oracle::dense(h);
    CHECK(d(0, 0).real() == Approx(0.0).margin(1e-15));
    CHECK(d(1, 1).real() == Approx(-1.0));
    CHECK(d(2, 2).real() == Approx(-1.0));
    CHECK(d(3, 3).real() == Approx(0.0).margin(1e-15));

    const Graph triangle(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
    CHECK(dense_ground(build_maxcut(triangle)) == Approx(-2.0));
}

TEST_CASE("brute-force Max-cut", "[problems]") {
    const auto one = brute_force_maxcut(Graph(2, {{0, 1, 1.0}}));
    CHECK(one.value == 1.0);
    CHECK(one.partition == "01");

    const Graph square(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {3, 0, 1.0}});
    const auto sq = brute_force_maxcut(square);
    CHECK(sq.value == 4.0);
    CHECK(sq.partition == "0101");
    CHECK(square.cut_value(sq.partition) == 4.0);

    CHECK_THROWS_AS(brute_force_maxcut(Graph(27, {{0, 1, 1.0}})), InvalidArgument);
}

TEST_CASE("every basis state has energy minus its cut", "[problems][property]") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto g = random_graph(5 + seed % 3, 0.5, seed, WeightMode::Mixed);
        const auto d = oracle::dense(build_maxcut(g));
        for (Eigen::Index x = 0; x < d.rows(); ++x) {
            CHECK(d(x, x).real() ==
                  Approx(-g.cut_value(static_cast<std::uint64_t>(x))).margin(1e-12));
        }
    }
}

TEST_CASE("ground energy equals minus the brute-force cut", "[problems][property]") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        const std::size_t n = 4 + seed;
        const auto g = random_graph(n, 0.4, 100 + seed,
                                    seed % 2 == 0 ? WeightMode::Unit : WeightMode::Mixed);
        const auto bf = brute_force_maxcut(g);
        const auto e0 = lanczos_lowest(build_maxcut(g), 1)[0];
        CHECK(-e0 == Approx(bf.value).margin(1e-9));
        CHECK(g.cut_value(bf.partition) == bf.value);
    }
}

TEST_CASE("17-node unit-weight instance", "[problems]") {
    const auto g = random_graph(17, 0.25, 2024, WeightMode::Unit);
    const auto bf = brute_force_maxcut(g);
    const auto e0 = lanczos_lowest(build_maxcut(g), 1)[0];
    CHECK(-e0 == Approx(bf.value).margin(1e-9));
}

TEST_CASE("random graphs are connected, simple and reproducible", "[problems]") {
    const auto a = random_graph(12, 0.3, 5, WeightMode::Mixed);
    const auto b = random_graph(12, 0.3, 5, WeightMode::Mixed);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.edges().size() >= 11);
    for (const auto &e : a.edges()) {
        const double twice = 2 * e.weight;
        CHECK(twice == std::round(twice));
        CHECK(e.weight >= 0.5);
        CHECK(e.weight <= 3.0);
    }
    // Union-find connectivity.
    std::vector<std::size_t> parent(12);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            x = parent[x];
        }
        return x;
    };
    for (const auto &e : a.edges()) {
        parent[find(e.u)] = find(e.v);
    }
    for (std::size_t v = 1; v < 12; ++v) {
        CHECK(find(v) == find(0));
    }
}

TEST_CASE("edge-list parsing", "[problems]") {
    const auto g = parse_graph("2\n0 1");
    CHECK(g.n_nodes() == 2);
    REQUIRE(g.edges().size() == 1);
    CHECK(g.edges()[0].weight == 1.0);

    const auto path = parse_graph("# weighted path\n3\n0 1 2.5\n\n1 2 1.0  # tail\n");
    REQUIRE(path.edges().size() == 2);
    CHECK(path.edges()[0].weight == 2.5);
    CHECK(path.total_weight() == 3.5);

    CHECK_THROWS_AS(parse_graph("3\n0 0 1"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("3\n0 5"), ParseError);
    try {
        (void)parse_graph("3\n0 1\n1 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
    CHECK(parse_graph(path.to_text()).to_text() == path.to_text());
}
