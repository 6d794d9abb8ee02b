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
#include "spinvar/pauli.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <unordered_map>

#include "spinvar/error.hpp"

namespace spinvar {
namespace {

inline double parity_sign(std::uint64_t bits) noexcept {
    return (std::popcount(bits) & 1) != 0 ? -1.0 : 1.0;
}

void check_dims(const PauliString &p, std::size_t n_qubits) {
    if (p.n_qubits() != n_qubits) {
        throw InvalidArgument("Pauli string acts on " +
                              std::to_string(p.n_qubits()) +
                              " qubits but the state has " +
                              std::to_string(n_qubits));
    }
}

struct MaskKey {
    std::uint64_t x;
    std::uint64_t z;
    bool operator==(const MaskKey &) const = default;
};

struct MaskKeyHash {
    std::size_t operator()(const MaskKey &k) const noexcept {
        return std::hash<std::uint64_t>{}(k.x * 0x9E3779B97F4A7C15ULL ^ k.z);
    }
};

std::string format_double(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return {buf, end};
}

} // namespace

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
    if (n_qubits == 0 || n_qubits > max_qubits) {
        throw InvalidArgument("Pauli string qubit count must lie in [1, 64]");
    }
    if (n_qubits < 64) {
        const std::uint64_t outside = ~((std::uint64_t{1} << n_qubits) - 1);
        if (((x_mask | z_mask) & outside) != 0) {
            throw InvalidArgument("Pauli mask uses bits beyond qubit count");
        }
    }
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t q, char op) {
    if (q >= n_qubits) {
        throw InvalidArgument("qubit index out of range");
    }
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (op) {
    case 'X':
        return {n_qubits, bit, 0};
    case 'Y':
        return {n_qubits, bit, bit};
    case 'Z':
        return {n_qubits, 0, bit};
    case 'I':
        return identity(n_qubits);
    default:
        throw InvalidArgument(std::string("unknown Pauli '") + op + "'");
    }
}

std::size_t PauliString::weight() const noexcept {
    return static_cast<std::size_t>(std::popcount(x_ | z_));
}

std::size_t PauliString::y_count() const noexcept {
    return static_cast<std::size_t>(std::popcount(x_ & z_));
}

char PauliString::at(std::size_t q) const noexcept {
    const bool x = ((x_ >> q) & 1U) != 0;
    const bool z = ((z_ >> q) & 1U) != 0;
    if (x && z) {
        return 'Y';
    }
    if (x) {
        return 'X';
    }
    return z ? 'Z' : 'I';
}

std::string PauliString::label() const {
    std::string out(n_qubits_, 'I');
    for (std::size_t q = 0; q < n_qubits_; ++q) {
        out[q] = at(q);
    }
    return out;
}

bool PauliString::qubitwise_commutes(const PauliString &other) const noexcept {
    const std::uint64_t both = support() & other.support();
    return ((x_ ^ other.x_) & both) == 0 && ((z_ ^ other.z_) & both) == 0;
}

Complex PauliString::y_phase() const noexcept {
    // i^k for k = #Y mod 4
    switch (y_count() & 3U) {
    case 0:
        return {1.0, 0.0};
    case 1:
        return {0.0, 1.0};
    case 2:
        return {-1.0, 0.0};
    default:
        return {0.0, -1.0};
    }
}

PauliString pauli_from_label(std::string_view label) {
    if (label.empty()) {
        throw ParseError(0, "empty Pauli label");
    }
    if (label.size() > PauliString::max_qubits) {
        throw ParseError(label.size(), "Pauli label longer than 64 qubits");
    }
    std::uint64_t x = 0;
    std::uint64_t z = 0;
    for (std::size_t q = 0; q < label.size(); ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        switch (label[q]) {
        case 'I':
            break;
        case 'X':
            x |= bit;
            break;
        case 'Y':
            x |= bit;
            z |= bit;
            break;
        case 'Z':
            z |= bit;
            break;
        default:
            throw ParseError(q + 1, "invalid Pauli character '" +
                                        std::string(1, label[q]) +
                                        "' at position " + std::to_string(q + 1));
        }
    }
    return {label.size(), x, z};
}

Observable::Observable(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0 || n_qubits > PauliString::max_qubits) {
        throw InvalidArgument("observable qubit count must lie in [1, 64]");
    }
}

Observable::Observable(std::size_t n_qubits, const std::vector<PauliTerm> &terms)
    : Observable(n_qubits) {
    std::unordered_map<MaskKey, std::size_t, MaskKeyHash> index;
    std::vector<PauliTerm> merged;
    merged.reserve(terms.size());
    for (const auto &t : terms) {
        if (t.string.n_qubits() != n_qubits) {
            throw InvalidArgument("term '" + t.string.label() +
                                  "' does not match observable qubit count " +
                                  std::to_string(n_qubits));
        }
        if (!std::isfinite(t.coefficient)) {
            throw InvalidArgument("non-finite coefficient on term '" +
                                  t.string.label() + "'");
        }
        const MaskKey key{t.string.x_mask(), t.string.z_mask()};
        auto [it, inserted] = index.try_emplace(key, merged.size());
        if (inserted) {
            merged.push_back(t);
        } else {
            merged[it->second].coefficient += t.coefficient;
        }
    }
    for (auto &t : merged) {
        if (std::abs(t.coefficient) >= drop_threshold) {
            terms_.push_back(t);
        }
    }
}

double Observable::constant() const noexcept {
    double c = 0.0;
    for (const auto &t : terms_) {
        if (t.string.is_identity()) {
            c += t.coefficient;
        }
    }
    return c;
}

bool Observable::is_identity_only() const noexcept {
    for (const auto &t : terms_) {
        if (!t.string.is_identity()) {
            return false;
        }
    }
    return true;
}

Observable Observable::scaled(double factor) const {
    std::vector<PauliTerm> t = terms_;
    for (auto &term : t) {
        term.coefficient *= factor;
    }
    return {n_qubits_, t};
}

std::string Observable::to_text() const {
    std::string out;
    for (const auto &t : terms_) {
        out += format_double(t.coefficient);
        out += '\t';
        out += t.string.label();
        out += '\n';
    }
    return out;
}

Observable Observable::from_text(std::string_view text) {
    std::vector<PauliTerm> terms;
    std::size_t n_qubits = 0;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": expected 'coefficient<TAB>label'");
        }
        double c = 0.0;
        const char *first = line.data();
        auto [ptr, ec] = std::from_chars(first, first + tab, c);
        if (ec != std::errc{} || ptr != first + tab) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": bad coefficient");
        }
        PauliString p;
        try {
            p = pauli_from_label(std::string_view(line).substr(tab + 1));
        } catch (const ParseError &e) {
            throw ParseError(line_no, "line " + std::to_string(line_no) + ": " +
                                          e.what());
        }
        if (n_qubits == 0) {
            n_qubits = p.n_qubits();
        } else if (p.n_qubits() != n_qubits) {
            throw ParseError(line_no, "line " + std::to_string(line_no) +
                                          ": label length differs from earlier terms");
        }
        terms.push_back({c, p});
    }
    if (n_qubits == 0) {
        throw ParseError(line_no, "observable text contains no terms");
    }
    return {n_qubits, terms};
}

void apply_string_inplace(const PauliString &p, StateVector &s) {
    check_dims(p, s.n_qubits());
    auto a = s.amplitudes();
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    const Complex ph = p.y_phase();
    if (x == 0) {
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] *= ph * parity_sign(i & z);
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & pivot) != 0) {
            continue;
        }
        const std::size_t j = i ^ x;
        const Complex ai = a[i];
        const Complex aj = a[j];
        a[j] = ph * parity_sign(i & z) * ai;
        a[i] = ph * parity_sign(j & z) * aj;
    }
}

StateVector apply_string(const PauliString &p, const StateVector &s) {
    StateVector out = s;
    apply_string_inplace(p, out);
    return out;
}

void apply_pauli_rotation(StateVector &s, const PauliString &p, double angle) {
    check_dims(p, s.n_qubits());
    if (p.is_identity()) {
        throw InvalidArgument("rotation about the identity string is a global "
                              "phase and is rejected");
    }
    auto a = s.amplitudes();
    const double c = std::cos(angle / 2);
    const double sn = std::sin(angle / 2);
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    // -i * sin * phase
    const Complex k = Complex{0.0, -sn} * p.y_phase();
    if (x == 0) {
        const Complex plus = c + k;
        const Complex minus = c - k;
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] *= (std::popcount(i & z) & 1) != 0 ? minus : plus;
        }
        return;
    }
    const std::uint64_t pivot = x & (~x + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if ((i & pivot) != 0) {
            continue;
        }
        const std::size_t j = i ^ x;
        const Complex ai = a[i];
        const Complex aj = a[j];
        a[i] = c * ai + k * parity_sign(j & z) * aj;
        a[j] = c * aj + k * parity_sign(i & z) * ai;
    }
}

void observable_matvec(const Observable &o, std::span<const Complex> in,
                       std::span<Complex> out) {
    const std::size_t dim = std::size_t{1} << o.n_qubits();
    if (o.n_qubits() > StateVector::max_qubits || in.size() != dim ||
        out.size() != dim) {
        throw InvalidArgument("observable/vector dimension mismatch");
    }
    std::fill(out.begin(), out.end(), Complex{0.0, 0.0});
    for (const auto &t : o.terms()) {
        const std::uint64_t x = t.string.x_mask();
        const std::uint64_t z = t.string.z_mask();
        const Complex cph = t.coefficient * t.string.y_phase();
        for (std::size_t i = 0; i < dim; ++i) {
            out[i ^ x] += cph * parity_sign(i & z) * in[i];
        }
    }
}

StateVector observable_matvec(const Observable &o, const StateVector &s) {
    if (o.n_qubits() != s.n_qubits()) {
        throw InvalidArgument("observable acts on " + std::to_string(o.n_qubits()) +
                              " qubits but the state has " +
                              std::to_string(s.n_qubits()));
    }
    StateVector out(s.n_qubits(), std::vector<Complex>(s.dimension()));
    observable_matvec(o, s.amplitudes(), out.amplitudes());
    return out;
}

Complex string_expectation(const PauliString &p, std::span<const Complex> s) {
    const std::uint64_t x = p.x_mask();
    const std::uint64_t z = p.z_mask();
    Complex acc{0.0, 0.0};
    if (x == 0) {
        double re = 0.0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            re += parity_sign(i & z) * std::norm(s[i]);
        }
        return p.y_phase() * re;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        acc += std::conj(s[i ^ x]) * (parity_sign(i & z) * s[i]);
    }
    return p.y_phase() * acc;
}

double expectation(const Observable &o, const StateVector &s) {
    if (o.n_qubits() != s.n_qubits()) {
        throw InvalidArgument("observable/state qubit count mismatch");
    }
    const double nrm = s.norm();
    if (std::abs(nrm - 1.0) > 1e-8) {
        throw InvalidArgument("expectation requires a normalized state (norm " +
                              format_double(nrm) + ")");
    }
    Complex acc{0.0, 0.0};
    for (const auto &t : o.terms()) {
        acc += t.coefficient * string_expectation(t.string, s.amplitudes());
    }
    const double tol = 1e-10 * std::max(1.0, spectral_bound(o));
    if (std::abs(acc.imag()) > tol) {
        throw Error("expectation has imaginary residue " +
                    format_double(acc.imag()) + "; observable is not Hermitian");
    }
    return acc.real();
}

double spectral_bound(const Observable &o) noexcept {
    double b = 0.0;
    for (const auto &t : o.terms()) {
        b += std::abs(t.coefficient);
    }
    return b;
}

} // namespace spinvar
