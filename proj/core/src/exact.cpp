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
#include "spinvar/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include <Eigen/Dense>

#include "spinvar/error.hpp"
#include "spinvar/rng.hpp"

namespace spinvar {
namespace {

using CVec = std::vector<Complex>;

Complex dot(const CVec &a, const CVec &b) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc;
}

double vnorm(const CVec &a) { return std::sqrt(std::max(0.0, dot(a, a).real())); }

void axpy(Complex alpha, const CVec &x, CVec &y) {
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

void scale(CVec &x, double s) {
    for (auto &v : x) {
        v *= s;
    }
}

/// Two rounds of classical Gram-Schmidt against `basis`.
void orthogonalize(CVec &w, const std::vector<CVec> &basis) {
    for (int round = 0; round < 2; ++round) {
        for (const auto &q : basis) {
            axpy(-dot(q, w), q, w);
        }
    }
}

struct LevelResult {
    double value;
    CVec vector;
    bool converged;
};

LevelResult lowest_in_complement(const Observable &h, const std::vector<CVec> &found,
                                 const LanczosOptions &opt, Rng rng) {
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    const std::size_t available = dim - found.size();
    const std::size_t max_steps = std::min(opt.max_iterations, available);

    CVec v(dim);
    for (auto &x : v) {
        x = Complex{rng.uniform() - 0.5, rng.uniform() - 0.5};
    }
    orthogonalize(v, found);
    scale(v, 1.0 / vnorm(v));

    std::vector<CVec> basis{v};
    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> ritz_history;
    CVec w(dim);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    bool converged = false;

    for (std::size_t j = 0; j < max_steps; ++j) {
        observable_matvec(h, basis[j], w);
        const double a = dot(basis[j], w).real();
        alpha.push_back(a);
        axpy(-a, basis[j], w);
        if (j > 0) {
            axpy(-beta[j - 1], basis[j - 1], w);
        }
        orthogonalize(w, basis);
        orthogonalize(w, found);
        const double b = vnorm(w);

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
        Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(
                                          beta.data(), m - 1))
                                    : Eigen::VectorXd(0);
        tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
        const double ritz = tri.eigenvalues()(0);
        ritz_history.push_back(ritz);
        const double residual = b * std::abs(tri.eigenvectors()(m - 1, 0));

        const bool exhausted = b < 1e-12 || j + 1 == available;
        bool settled = false;
        if (ritz_history.size() > 5) {
            const double drift =
                std::abs(ritz - ritz_history[ritz_history.size() - 6]);
            settled = drift < opt.tolerance && residual < opt.residual_tolerance;
        }
        if (exhausted || settled) {
            converged = true;
            break;
        }
        beta.push_back(b);
        scale(w, 1.0 / b);
        basis.push_back(w);
    }

    const auto m = static_cast<Eigen::Index>(alpha.size());
    CVec ritz_vec(dim, Complex{0.0, 0.0});
    for (Eigen::Index i = 0; i < m; ++i) {
        axpy(tri.eigenvectors()(i, 0), basis[static_cast<std::size_t>(i)], ritz_vec);
    }
    orthogonalize(ritz_vec, found);
    scale(ritz_vec, 1.0 / vnorm(ritz_vec));
    return {tri.eigenvalues()(0), std::move(ritz_vec), converged};
}

} // namespace

std::vector<double> dense_spectrum(const Observable &h) {
    if (h.n_qubits() > 12) {
        throw InvalidArgument("dense spectrum is limited to 12 qubits");
    }
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    const auto d = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &t : h.terms()) {
        const std::uint64_t x = t.string.x_mask();
        const std::uint64_t z = t.string.z_mask();
        const Complex cph = t.coefficient * t.string.y_phase();
        for (std::size_t col = 0; col < dim; ++col) {
            const double sign = (std::popcount(col & z) & 1) != 0 ? -1.0 : 1.0;
            m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
                cph * sign;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw Error("dense Hermitian eigensolver failed");
    }
    const Eigen::VectorXd &ev = es.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
}

std::vector<double> lanczos_lowest(const Observable &h, std::size_t k,
                                   const LanczosOptions &options) {
    if (k < 1 || k > 4) {
        throw InvalidArgument("lanczos_lowest computes between 1 and 4 eigenvalues");
    }
    if (h.n_qubits() > StateVector::max_qubits) {
        throw InvalidArgument("lanczos_lowest is limited to 26 qubits");
    }
    const std::size_t dim = std::size_t{1} << h.n_qubits();
    if (k > dim) {
        throw InvalidArgument("more eigenvalues requested than the dimension");
    }
    std::vector<CVec> found;
    std::vector<double> values;
    for (std::size_t level = 0; level < k; ++level) {
        auto r = lowest_in_complement(h, found, options,
                                      Rng::derive(options.seed, level));
        values.push_back(r.value);
        if (!r.converged) {
            throw ConvergenceError("Lanczos level " + std::to_string(level) +
                                       " did not converge within " +
                                       std::to_string(options.max_iterations) +
                                       " iterations",
                                   values);
        }
        found.push_back(std::move(r.vector));
    }
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace spinvar
