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

#include "spinvar/error.hpp"
#include "spinvar/pauli.hpp"
#include "spinvar/problems.hpp"
#include "test_support.hpp"

using namespace spinvar;
using Catch::Approx;

namespace {

PauliString random_string(std::size_t n, Rng &rng) {
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    return {n, rng() & mask, rng() & mask};
}

Observable random_observable(std::size_t n, std::size_t terms, Rng &rng) {
    std::vector<PauliTerm> t;
    for (std::size_t k = 0; k < terms; ++k) {
        t.push_back({rng.uniform() * 4.0 - 2.0, random_string(n, rng)});
    }
    return {n, t};
}

} // namespace

TEST_CASE("labels encode into x and z masks", "[pauli]") {
    const auto ii = pauli_from_label("II");
    CHECK(ii.x_mask() == 0);
    CHECK(ii.z_mask() == 0);
    CHECK(ii.is_identity());

    const auto zz = pauli_from_label("ZZ");
    CHECK(zz.x_mask() == 0b00);
    CHECK(zz.z_mask() == 0b11);

    // Character 0 is qubit 0, the lowest bit.
    const auto xy = pauli_from_label("XY");
    CHECK(xy.x_mask() == 0b11);
    CHECK(xy.z_mask() == 0b10);
    CHECK(xy.n_qubits() == 2);
    CHECK(xy.y_count() == 1);
    CHECK(xy.weight() == 2);
}

TEST_CASE("label round trip is bijective", "[pauli]") {
    const std::string ops = "IXYZ";
    for (std::uint64_t code = 0; code < 256; ++code) {
        std::string label;
        for (int q = 0; q < 4; ++q) {
            label += ops[(code >> (2 * q)) & 3U];
        }
        CHECK(pauli_from_label(label).label() == label);
    }
}

TEST_CASE("invalid labels name the offending position", "[pauli]") {
    try {
        (void)pauli_from_label("XZQI");
        FAIL("expected a parse error");
    } catch (const ParseError &e) {
        CHECK(e.position() == 3);
    }
    CHECK_THROWS_AS(pauli_from_label(""), ParseError);
    CHECK_THROWS_AS(PauliString(2, 0b100, 0), InvalidArgument);
}

TEST_CASE("single-qubit strings act as the textbook Paulis", "[pauli]") {
    const StateVector zero(1);
    const auto z = apply_string(pauli_from_label("Z"), zero);
    CHECK(z.amplitudes()[0] == Complex(1, 0));
    CHECK(std::abs(z.amplitudes()[1]) == 0.0);

    const auto x = apply_string(pauli_from_label("X"), zero);
    CHECK(std::abs(x.amplitudes()[0]) == 0.0);
    CHECK(x.amplitudes()[1] == Complex(1, 0));

    const auto y = apply_string(pauli_from_label("Y"), zero);
    CHECK(std::abs(y.amplitudes()[0]) == 0.0);
    CHECK(y.amplitudes()[1] == Complex(0, 1));

    // Input is not modified.
    CHECK(zero.amplitudes()[0] == Complex(1, 0));
}

TEST_CASE("apply_string matches Kronecker matrices", "[pauli][property]") {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto p = random_string(n, rng);
        const auto v = oracle::random_state(n, rng());
        const auto out = oracle::vec(apply_string(p, oracle::state(n, v)));
        const oracle::Vec ref = oracle::pauli_matrix(p.label()) * v;
        CHECK((out - ref).norm() < 1e-12);
    }
}

TEST_CASE("every Pauli string squares to the identity", "[pauli][property]") {
    Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto p = random_string(n, rng);
        const auto v = oracle::random_state(n, rng());
        auto s = oracle::state(n, v);
        apply_string_inplace(p, s);
        apply_string_inplace(p, s);
        CHECK((oracle::vec(s) - v).norm() < 1e-12);
    }
}

TEST_CASE("observables merge duplicates and drop cancelled terms", "[pauli]") {
    const Observable o(2, {{1.0, pauli_from_label("XX")},
                           {0.5, pauli_from_label("ZI")},
                           {2.0, pauli_from_label("XX")},
                           {-0.5, pauli_from_label("ZI")},
                           {1.5, pauli_from_label("II")}});
    REQUIRE(o.size() == 2);
    CHECK(o.terms()[0].string.label() == "XX");
    CHECK(o.terms()[0].coefficient == 3.0);
    CHECK(o.terms()[1].string.label() == "II");
    CHECK(o.constant() == 1.5);
    CHECK_THROWS_AS(Observable(2, {{1.0, pauli_from_label("XXX")}}), InvalidArgument);
}

TEST_CASE("observable_matvec is linear and scales", "[pauli]") {
    const StateVector zero(1);
    const auto twice = observable_matvec(Observable(1, {{2.0, pauli_from_label("Z")}}), zero);
    CHECK(twice.amplitudes()[0] == Complex(2, 0));

    const auto sum = observable_matvec(
        Observable(1, {{1.0, pauli_from_label("X")}, {1.0, pauli_from_label("Z")}}), zero);
    CHECK(sum.amplitudes()[0] == Complex(1, 0));
    CHECK(sum.amplitudes()[1] == Complex(1, 0));
}

TEST_CASE("MGM matvec equals the dense product", "[pauli]") {
    const auto h = build_mgm({4, 1.0, -0.1, true});
    const auto v = oracle::random_state(4, 99);
    const auto out = oracle::vec(observable_matvec(h, oracle::state(4, v)));
    CHECK((out - oracle::dense(h) * v).norm() < 1e-12);
}

TEST_CASE("matvec agrees with dense matrices for random observables", "[pauli][property]") {
    Rng rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto o = random_observable(n, 1 + rng.below(8), rng);
        const auto v = oracle::random_state(n, rng());
        const auto out = oracle::vec(observable_matvec(o, oracle::state(n, v)));
        CHECK((out - oracle::dense(o) * v).norm() < 1e-10);
        CHECK(out.norm() <= spectral_bound(o) + 1e-12);
    }
}

TEST_CASE("expectations of eigenstates", "[pauli]") {
    CHECK(expectation(Observable(1, {{1.0, pauli_from_label("Z")}}), StateVector(1)) ==
          Approx(1.0));
    const double r = std::sqrt(0.5);
    const StateVector plus(1, {Complex(r, 0), Complex(r, 0)});
    CHECK(expectation(Observable(1, {{1.0, pauli_from_label("X")}}), plus) ==
          Approx(1.0));
}

TEST_CASE("Max-cut Hamiltonian on the uniform superposition is -W/2", "[pauli]") {
    const Graph g(4, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 3, 0.5}, {0, 3, 1.5}, {0, 2, 1.0}});
    const auto h = build_maxcut(g);
    const oracle::Vec plus = oracle::Vec::Constant(16, 0.25);
    const double dense = (plus.adjoint() * oracle::dense(h) * plus)(0).real();
    CHECK(dense == Approx(-g.total_weight() / 2).margin(1e-12));
    CHECK(expectation(h, oracle::state(4, plus)) == Approx(-g.total_weight() / 2).margin(1e-12));
}

TEST_CASE("expectation stays real and rejects unnormalized states", "[pauli][property]") {
    Rng rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(6);
        const auto o = random_observable(n, 1 + rng.below(8), rng);
        const auto v = oracle::random_state(n, rng());
        const oracle::C ref = (v.adjoint() * oracle::dense(o) * v)(0);
        CHECK(std::abs(ref.imag()) < 1e-10);
        CHECK(expectation(o, oracle::state(n, v)) == Approx(ref.real()).margin(1e-10));
    }
    const StateVector bad(1, {Complex(1, 0), Complex(1, 0)});
    CHECK_THROWS_AS(expectation(Observable(1, {{1.0, pauli_from_label("Z")}}), bad),
                    InvalidArgument);
}

TEST_CASE("spectral bound sums coefficient magnitudes", "[pauli]") {
    CHECK(spectral_bound(Observable(1, {{2.0, pauli_from_label("Z")}})) == 2.0);
    CHECK(spectral_bound(Observable(1, {{1.0, pauli_from_label("X")},
                                        {1.0, pauli_from_label("Z")}})) == 2.0);
    CHECK(spectral_bound(build_mgm({4, 1.0, -0.1, true})) == Approx(6.3).margin(1e-12));
}

TEST_CASE("Pauli rotation equals the dense exponential", "[pauli][property]") {
    Rng rng(15);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        auto p = random_string(n, rng);
        if (p.is_identity()) {
            p = PauliString::single(n, 0, 'Y');
        }
        const double angle = (rng.uniform() - 0.5) * 8.0;
        const auto v = oracle::random_state(n, rng());
        auto s = oracle::state(n, v);
        apply_pauli_rotation(s, p, angle);
        const oracle::Vec ref = oracle::rotation(p.label(), angle) * v;
        CHECK((oracle::vec(s) - ref).norm() < 1e-12);
    }
    StateVector s(2);
    CHECK_THROWS_AS(apply_pauli_rotation(s, PauliString::identity(2), 0.3), InvalidArgument);
}

TEST_CASE("qubit-wise commutation", "[pauli]") {
    CHECK(pauli_from_label("XIZ").qubitwise_commutes(pauli_from_label("XYI")));
    CHECK_FALSE(pauli_from_label("XIZ").qubitwise_commutes(pauli_from_label("ZII")));
}

TEST_CASE("text form round trips", "[pauli]") {
    const auto h = build_mgm({5, 1.0, -0.1, true});
    const auto back = Observable::from_text(h.to_text());
    REQUIRE(back.size() == h.size());
    for (std::size_t k = 0; k < h.size(); ++k) {
        CHECK(back.terms()[k].coefficient == h.terms()[k].coefficient);
        CHECK(back.terms()[k].string == h.terms()[k].string);
    }
    CHECK(h.to_text().substr(0, 9) == "0.5\tXXIII");
}
