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

#include <limits>
#include <numbers>

#include "spinvar/circuits.hpp"
#include "spinvar/error.hpp"
#include "spinvar/problems.hpp"
#include "test_support.hpp"

using namespace spinvar;
using Catch::Approx;

namespace {

std::vector<double> random_theta(std::size_t p, Rng &rng) {
    std::vector<double> t(p);
    for (auto &x : t) {
        x = (rng.uniform() - 0.5) * 2 * std::numbers::pi;
    }
    return t;
}

double uniform_energy(const Observable &h) {
    const auto n = h.n_qubits();
    const auto dim = Eigen::Index{1} << n;
    const oracle::Vec plus = oracle::Vec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    return (plus.adjoint() * oracle::dense(h) * plus)(0).real();
}

} // namespace

TEST_CASE("EfficientSU2 parameter counts", "[circuits]") {
    CHECK(build_efficient_su2(15, 1).n_params() == 60);
    CHECK(build_efficient_su2(15, 5).n_params() == 180);
    CHECK(build_efficient_su2(3, 1).n_params() == 12);
    for (std::size_t n = 2; n <= 16; ++n) {
        for (std::size_t r = 1; r <= 8; ++r) {
            REQUIRE(build_efficient_su2(n, r).n_params() == 2 * n * (r + 1));
        }
    }
    CHECK_THROWS_AS(build_efficient_su2(1, 1), InvalidArgument);
}

TEST_CASE("EfficientSU2 gate layout", "[circuits]") {
    const auto c = build_efficient_su2(3, 1);
    const std::string expected = "RY 0 0 1\nRY 1 1 1\nRY 2 2 1\n"
                                 "RZ 0 3 1\nRZ 1 4 1\nRZ 2 5 1\n"
                                 "CX 0,1 - -\nCX 1,2 - -\n"
                                 "RY 0 6 1\nRY 1 7 1\nRY 2 8 1\n"
                                 "RZ 0 9 1\nRZ 1 10 1\nRZ 2 11 1\n";
    CHECK(c.dump() == expected);
}

TEST_CASE("QAOA parameter counts and slot order", "[circuits]") {
    const auto h15 = build_mgm({15, 1.0, -0.1, true});
    CHECK(build_qaoa_ansatz(h15, 1).n_params() == 2);
    CHECK(build_qaoa_ansatz(h15, 5).n_params() == 10);
    for (std::size_t n = 4; n <= 16; n += 3) {
        const auto h = build_mgm({n, 1.0, -0.1, true});
        for (std::size_t p = 1; p <= 8; ++p) {
            REQUIRE(build_qaoa_ansatz(h, p).n_params() == 2 * p);
        }
    }
    const auto c = build_qaoa_ansatz(build_mgm({4, 1.0, -0.1, true}), 2);
    // 4 H, then per level 18 cost rotations and 4 mixers.
    REQUIRE(c.gates().size() == 4 + 2 * 22);
    CHECK(*c.gates()[4].angle.slot == 0);
    CHECK(c.gates()[4].angle.value == 1.0); // 2 * 0.5
    CHECK(*c.gates()[22].angle.slot == 1);
    CHECK(c.gates()[22].kind == GateKind::RX);
    CHECK(c.gates()[22].angle.value == 2.0);
    CHECK(*c.gates()[26].angle.slot == 2);
    CHECK(*c.gates().back().angle.slot == 3);

    CHECK_THROWS_AS(build_qaoa_ansatz(Observable(2, {{1.0, pauli_from_label("II")}}), 1),
                    InvalidArgument);
    CHECK_THROWS_AS(build_qaoa_ansatz(Observable(2), 1), InvalidArgument);
}

TEST_CASE("QAOA cost-term orders", "[circuits]") {
    const auto h = build_mgm({4, 1.0, -0.1, true});
    const auto by_type = build_qaoa_ansatz(h, 1, CostTermOrder::PauliType);
    const auto literal = build_qaoa_ansatz(h, 1, CostTermOrder::Construction);
    CHECK(literal.gates()[4].pauli.label() == "XXII");
    CHECK(literal.gates()[5].pauli.label() == "YYII");
    CHECK(by_type.gates()[4].pauli.label() == "XXII");
    CHECK(by_type.gates()[5].pauli.label() == "IXXI");
    CHECK(by_type.gates()[10].pauli.label() == "YYII");
    CHECK(by_type.gates()[16].pauli.label() == "ZZII");

    // Bond-by-bond order keeps the SU(2)-symmetric MGM frozen at the
    // uniform-superposition energy; the type-grouped order does not.
    Rng rng(3);
    const auto theta = random_theta(2, rng);
    const double frozen = expectation(h, run_circuit(literal, theta, StateVector(4)));
    CHECK(frozen == Approx(uniform_energy(h)).margin(1e-12));
    const double moved = expectation(h, run_circuit(by_type, theta, StateVector(4)));
    CHECK(std::abs(moved - frozen) > 1e-3);
}

TEST_CASE("QAOA at zero angles prepares the uniform superposition", "[circuits]") {
    for (std::size_t p = 1; p <= 3; ++p) {
        const auto h = build_maxcut(random_graph(5, 0.5, p, WeightMode::Mixed));
        const auto c = build_qaoa_ansatz(h, p);
        const std::vector<double> zero(c.n_params(), 0.0);
        const auto s = run_circuit(c, zero, StateVector(5));
        for (const auto &a : s.amplitudes()) {
            CHECK(std::abs(a - Complex(1.0 / std::sqrt(32.0), 0)) < 1e-12);
        }
        CHECK(expectation(h, s) == Approx(uniform_energy(h)).margin(1e-12));
    }
}

TEST_CASE("cluster ansatz", "[circuits]") {
    const auto z = build_pauli_cluster_ansatz({pauli_from_label("Z")}, 1);
    const Observable oz(1, {{1.0, pauli_from_label("Z")}});
    for (const double t : {0.0, 0.4, 2.0, -3.0}) {
        CHECK(expectation(oz, run_circuit(z, std::vector<double>{t}, StateVector(1))) ==
              Approx(1.0));
    }
    const auto yx = build_pauli_cluster_ansatz({pauli_from_label("YX")}, 1);
    const auto s = run_circuit(yx, std::vector<double>{std::numbers::pi / 2}, StateVector(2));
    CHECK(fidelity(s, StateVector(2)) == Approx(0.5).margin(1e-12));

    std::vector<PauliString> strings;
    const auto mgm = build_mgm({4, 1.0, -0.1, true});
    for (const auto &t : mgm.terms()) {
        strings.push_back(t.string);
    }
    CHECK(build_pauli_cluster_ansatz(strings, 2).n_params() == 36);
    for (std::size_t r = 1; r <= 8; ++r) {
        REQUIRE(build_pauli_cluster_ansatz(strings, r).n_params() == 18 * r);
    }
    CHECK_THROWS_AS(build_pauli_cluster_ansatz({}, 1), InvalidArgument);
    CHECK_THROWS_AS(build_pauli_cluster_ansatz({PauliString::identity(2)}, 1),
                    InvalidArgument);
}

TEST_CASE("circuit depth", "[circuits]") {
    Circuit one(2);
    one.h(0);
    CHECK(circuit_depth(one) == 1);
    Circuit two(2);
    two.h(0).rx(0, Angle::fixed(0.3));
    CHECK(circuit_depth(two) == 2);
    Circuit chain(4);
    chain.cx(0, 1).cx(1, 2).cx(2, 3);
    CHECK(circuit_depth(chain) == 3);
    Circuit parallel(4);
    parallel.h(0).h(1).h(2).h(3).cx(0, 1).cx(2, 3);
    CHECK(circuit_depth(parallel) == 2);

    // A weight-2 rotation expands to basis change, CX, RZ, CX, basis change.
    Circuit rot(2);
    rot.pauli_rotation(pauli_from_label("XX"), Angle::fixed(0.2));
    CHECK(circuit_depth(rot, DepthMode::Logical) == 1);
    CHECK(circuit_depth(rot, DepthMode::Native) == 5);
    Circuit zz(2);
    zz.pauli_rotation(pauli_from_label("ZZ"), Angle::fixed(0.2));
    CHECK(circuit_depth(zz, DepthMode::Native) == 3);
}

TEST_CASE("QAOA depth is affine in p and dwarfs EfficientSU2", "[circuits]") {
    const auto h = build_mgm({15, 1.0, -0.1, true});
    std::vector<std::size_t> d;
    for (std::size_t p = 1; p <= 5; ++p) {
        d.push_back(circuit_depth(build_qaoa_ansatz(h, p)));
    }
    for (std::size_t i = 2; i < d.size(); ++i) {
        CHECK(d[i] - d[i - 1] == d[1] - d[0]);
    }
    const std::size_t su2 = circuit_depth(build_efficient_su2(15, 5));
    CHECK(d[0] >= 5 * su2);
    CHECK(circuit_depth(build_efficient_su2(15, 1)) == 18);
}

TEST_CASE("execution matches the dense unitary", "[circuits][property]") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + rng.below(3);
        Circuit c = trial % 2 == 0
                        ? build_efficient_su2(n, 1 + rng.below(2))
                        : build_qaoa_ansatz(build_mgm({4, 1.0, -0.1, true}), 1 + rng.below(2));
        if (trial % 2 == 1) {
            c.u3(1, 0.3, -0.2, 0.9).cx(3, 0);
        }
        const auto theta = random_theta(c.n_params(), rng);
        const auto v = oracle::random_state(c.n_qubits(), rng());
        const auto out = run_circuit(c, theta, oracle::state(c.n_qubits(), v));
        const oracle::Vec ref = oracle::unitary(c, theta) * v;
        CHECK((oracle::vec(out) - ref).norm() < 1e-10);
        CHECK(std::abs(out.norm() - 1.0) < 1e-9);
    }
}

TEST_CASE("EfficientSU2 at zero angles leaves |00> unchanged", "[circuits]") {
    const auto c = build_efficient_su2(2, 1);
    const auto s = run_circuit(c, std::vector<double>(8, 0.0), StateVector(2));
    CHECK(std::abs(s.amplitudes()[0] - Complex(1, 0)) < 1e-15);
}

TEST_CASE("binding errors", "[circuits]") {
    const auto c = build_efficient_su2(2, 1);
    CHECK_THROWS_AS(run_circuit(c, std::vector<double>(7, 0.0), StateVector(2)),
                    InvalidArgument);
    CHECK_THROWS_AS(run_circuit(c, std::vector<double>(8, 0.0), StateVector(3)),
                    InvalidArgument);
    std::vector<double> nan(8, 0.0);
    nan[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(run_circuit(c, nan, StateVector(2)), InvalidArgument);
    Circuit gap(1);
    gap.rx(0, Angle::bound(1));
    CHECK_THROWS_AS(gap.validate(), InvalidArgument);
    Circuit bad(2);
    CHECK_THROWS_AS(bad.cx(1, 1), InvalidArgument);
    CHECK_THROWS_AS(bad.h(2), InvalidArgument);
}

TEST_CASE("noise with zero probabilities reproduces the noiseless state", "[circuits]") {
    const auto c = build_efficient_su2(3, 2);
    Rng rng(61);
    const auto theta = random_theta(c.n_params(), rng);
    NoiseConfig zero;
    zero.enabled = true;
    zero.p1 = 0.0;
    zero.p2 = 0.0;
    const auto clean = run_circuit(c, theta, StateVector(3));
    const auto traj = run_circuit(c, theta, StateVector(3), zero, &rng);
    for (std::size_t i = 0; i < clean.dimension(); ++i) {
        CHECK(clean.amplitudes()[i] == traj.amplitudes()[i]);
    }
    CHECK_THROWS_AS(run_circuit(c, theta, StateVector(3), NoiseConfig::nisq_defaults()),
                    InvalidArgument);
}

TEST_CASE("noisy trajectories stay normalized and average to a mixed state", "[circuits]") {
    Circuit c(1);
    c.rx(0, Angle::fixed(0.0));
    NoiseConfig always;
    always.enabled = true;
    always.p1 = 1.0;
    // Every trajectory gets X, Y or Z with equal odds: <Z> averages to -1/3.
    Rng rng(62);
    const Observable z(1, {{1.0, pauli_from_label("Z")}});
    double sum = 0.0;
    const int trials = 30000;
    for (int t = 0; t < trials; ++t) {
        const auto s = run_circuit(c, {}, StateVector(1), always, &rng);
        REQUIRE(std::abs(s.norm() - 1.0) < 1e-12);
        sum += expectation(z, s);
    }
    CHECK(sum / trials == Approx(-1.0 / 3).margin(0.02));
}

TEST_CASE("sampled circuit energies", "[circuits]") {
    const auto h = build_mgm({4, 1.0, -0.1, true});
    const auto c = build_efficient_su2(4, 1);
    Rng theta_rng(71);
    const auto theta = random_theta(c.n_params(), theta_rng);
    const double exact = expectation(h, run_circuit(c, theta, StateVector(4)));

    Rng a(5);
    Rng b(5);
    const auto e1 = estimate_circuit_energy(c, theta, h, 1024, NoiseConfig::nisq_defaults(), a);
    const auto e2 = estimate_circuit_energy(c, theta, h, 1024, NoiseConfig::nisq_defaults(), b);
    CHECK(e1.value == e2.value);
    CHECK(e1.trajectories == 256);
    CHECK(noisy_trajectory_count(100) == 100);

    Rng big(6);
    const auto clean = estimate_circuit_energy(c, theta, h, 200000, NoiseConfig::off(), big);
    CHECK(clean.trajectories == 1);
    CHECK(clean.value == Approx(exact).margin(0.03));
}
