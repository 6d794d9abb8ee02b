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
#include "spinvar/optimizers.hpp"

#include <chrono>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>

#include <Eigen/Dense>

namespace spinvar {
namespace {

using Clock = std::chrono::steady_clock;
using Vec = std::vector<double>;

double dot(const Vec &a, const Vec &b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double norm2(const Vec &a) { return std::sqrt(dot(a, a)); }

bool all_finite(const Vec &v) {
    return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

/// Collects per-iteration records and keeps the best-so-far point.
class Recorder {
  public:
    Recorder(const Objective &obj, bool snapshots)
        : obj_(obj), snapshots_(snapshots), start_(Clock::now()) {}

    void record(std::size_t iteration, double value, const Vec &theta) {
        if (value < trace_.best_value || trace_.best_theta.empty()) {
            trace_.best_value = std::min(value, trace_.best_value);
            trace_.best_theta = theta;
        }
        IterationRecord r;
        r.iteration = iteration;
        r.cumulative_evaluations = obj_.evaluations();
        r.objective_value = value;
        r.best_objective = trace_.best_value;
        if (snapshots_) {
            r.theta = theta;
        }
        trace_.records.push_back(std::move(r));
    }

    OptimizerTrace finish(const Vec &final_theta, std::string reason) {
        trace_.final_theta = final_theta;
        trace_.final_value =
            trace_.records.empty() ? trace_.final_value : trace_.records.back().objective_value;
        trace_.evaluations = obj_.evaluations();
        trace_.wall_time_s =
            std::chrono::duration<double>(Clock::now() - start_).count();
        trace_.stop_reason = std::move(reason);
        return trace_;
    }

    [[noreturn]] void abort(const Vec &theta, const std::string &message) {
        throw OptimizerAbort(message, finish(theta, "aborted: " + message));
    }

    OptimizerTrace &trace() { return trace_; }

  private:
    const Objective &obj_;
    bool snapshots_;
    Clock::time_point start_;
    OptimizerTrace trace_;
};

Vec rademacher(std::size_t n, Rng &rng) {
    Vec d(n);
    for (auto &x : d) {
        x = rng.rademacher();
    }
    return d;
}

Vec shifted(const Vec &theta, const Vec &dir, double step) {
    Vec out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        out[i] = theta[i] + step * dir[i];
    }
    return out;
}

Vec two_point_shift(const Vec &theta, const Vec &d1, double s1, const Vec &d2,
                    double s2) {
    Vec out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) {
        out[i] = theta[i] + s1 * d1[i] + s2 * d2[i];
    }
    return out;
}

/// L-BFGS two-loop recursion; returns -H g.
Vec lbfgs_direction(const Vec &g, const std::deque<Vec> &s_hist,
                    const std::deque<Vec> &y_hist) {
    Vec q = g;
    const std::size_t m = s_hist.size();
    std::vector<double> alpha(m);
    std::vector<double> rho(m);
    for (std::size_t i = m; i-- > 0;) {
        rho[i] = 1.0 / dot(y_hist[i], s_hist[i]);
        alpha[i] = rho[i] * dot(s_hist[i], q);
        for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] -= alpha[i] * y_hist[i][k];
        }
    }
    const double scale =
        dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
    for (auto &v : q) {
        v *= scale;
    }
    for (std::size_t i = 0; i < m; ++i) {
        const double b = rho[i] * dot(y_hist[i], q);
        for (std::size_t k = 0; k < q.size(); ++k) {
            q[k] += s_hist[i][k] * (alpha[i] - b);
        }
    }
    for (auto &v : q) {
        v = -v;
    }
    return q;
}

} // namespace

Objective::Objective(std::size_t n_params, Cost cost)
    : n_params_(n_params), cost_(std::move(cost)) {
    if (!cost_) {
        throw InvalidArgument("objective needs a cost function");
    }
}

Objective &Objective::set_fidelity(Fidelity f) {
    fidelity_ = std::move(f);
    return *this;
}

Objective &Objective::set_gradient(Gradient g) {
    gradient_ = std::move(g);
    return *this;
}

void Objective::check_size(std::span<const double> theta) const {
    if (theta.size() != n_params_) {
        throw InvalidArgument("parameter vector has " + std::to_string(theta.size()) +
                              " entries, objective expects " +
                              std::to_string(n_params_));
    }
}

double Objective::evaluate(std::span<const double> theta) {
    check_size(theta);
    ++evaluations_;
    return cost_(theta);
}

double Objective::fidelity(std::span<const double> a, std::span<const double> b) {
    if (!fidelity_) {
        throw InvalidArgument("objective has no fidelity probe");
    }
    check_size(a);
    check_size(b);
    ++evaluations_;
    return fidelity_(a, b);
}

std::vector<double> Objective::gradient(std::span<const double> theta) {
    check_size(theta);
    if (gradient_) {
        return gradient_(*this, theta);
    }
    const double h = finite_difference_step;
    Vec point(theta.begin(), theta.end());
    Vec g(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        point[j] = theta[j] + h;
        const double up = evaluate(point);
        point[j] = theta[j] - h;
        const double down = evaluate(point);
        point[j] = theta[j];
        g[j] = (up - down) / (2 * h);
    }
    return g;
}

OptimizerTrace spsa_minimize(Objective &obj, std::span<const double> theta0,
                             const SpsaConfig &cfg, Rng &rng) {
    if (cfg.iterations < 1) {
        throw InvalidArgument("SPSA needs at least one iteration");
    }
    if (cfg.c <= 0.0 || (cfg.a && *cfg.a <= 0.0)) {
        throw InvalidArgument("SPSA gains a and c must be positive");
    }
    const std::size_t n = obj.n_params();
    Vec theta(theta0.begin(), theta0.end());
    if (theta.size() != n) {
        throw InvalidArgument("theta0 length does not match the objective");
    }
    Recorder rec(obj, cfg.record_theta);
    const double A = cfg.A.value_or(0.05 * static_cast<double>(cfg.iterations));

    double a = 0.0;
    if (cfg.a) {
        a = *cfg.a;
    } else {
        double magnitude = 0.0;
        for (std::size_t s = 0; s < cfg.calibration_steps; ++s) {
            const Vec delta = rademacher(n, rng);
            const double up = obj.evaluate(shifted(theta, delta, cfg.c));
            const double down = obj.evaluate(shifted(theta, delta, -cfg.c));
            if (!std::isfinite(up) || !std::isfinite(down)) {
                rec.abort(theta, "non-finite objective during SPSA calibration");
            }
            magnitude += std::abs(up - down) / (2 * cfg.c);
        }
        magnitude /= static_cast<double>(std::max<std::size_t>(1, cfg.calibration_steps));
        const double gain = std::pow(A + 1.0, cfg.alpha);
        a = magnitude > 0.0 ? cfg.target_step * gain / magnitude : cfg.target_step * gain;
        rec.trace().calibration_evaluations = obj.evaluations();
    }

    for (std::size_t k = 0; k < cfg.iterations; ++k) {
        const double kk = static_cast<double>(k);
        const double ck = cfg.c / std::pow(kk + 1.0, cfg.gamma);
        const double ak = a / std::pow(kk + 1.0 + A, cfg.alpha);
        const Vec delta = rademacher(n, rng);
        const double up = obj.evaluate(shifted(theta, delta, ck));
        const double down = obj.evaluate(shifted(theta, delta, -ck));
        if (!std::isfinite(up) || !std::isfinite(down)) {
            rec.abort(theta, "non-finite objective at SPSA iteration " +
                                 std::to_string(k));
        }
        rec.record(k, 0.5 * (up + down), theta);
        const double diff = (up - down) / (2 * ck);
        for (std::size_t i = 0; i < n; ++i) {
            theta[i] -= ak * diff * delta[i];
        }
    }
    return rec.finish(theta, "iteration limit");
}

OptimizerTrace qnspsa_minimize(Objective &obj, std::span<const double> theta0,
                               const QnspsaConfig &cfg, Rng &rng) {
    if (!obj.has_fidelity()) {
        throw InvalidArgument("QN-SPSA needs an objective with a fidelity probe");
    }
    if (cfg.iterations < 1 || cfg.perturbation <= 0.0 || cfg.learning_rate <= 0.0) {
        throw InvalidArgument("QN-SPSA needs iterations >= 1 and positive gains");
    }
    const std::size_t n = obj.n_params();
    Vec theta(theta0.begin(), theta0.end());
    if (theta.size() != n) {
        throw InvalidArgument("theta0 length does not match the objective");
    }
    const auto dim = static_cast<Eigen::Index>(n);
    const double eps = cfg.perturbation;
    const double c = cfg.gradient_perturbation;
    if (c <= 0.0) {
        throw InvalidArgument("QN-SPSA gradient perturbation must be positive");
    }
    Recorder rec(obj, cfg.record_theta);
    Eigen::MatrixXd metric = Eigen::MatrixXd::Zero(dim, dim);

    double current = 0.0;
    double tolerance = 0.0;
    if (cfg.blocking) {
        Vec samples(10);
        for (auto &v : samples) {
            v = obj.evaluate(theta);
        }
        const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / 10.0;
        double var = 0.0;
        for (const double v : samples) {
            var += (v - mean) * (v - mean);
        }
        current = mean;
        tolerance = cfg.allowed_increase.value_or(2.0 * std::sqrt(var / 9.0));
        rec.trace().calibration_evaluations = obj.evaluations();
    }

    const double A = cfg.A.value_or(0.05 * static_cast<double>(cfg.iterations));
    for (std::size_t k = 0; k < cfg.iterations; ++k) {
        const double kk = static_cast<double>(k);
        const double ck = cfg.decay ? c / std::pow(kk + 1.0, cfg.gamma) : c;
        const double eta =
            cfg.decay ? cfg.learning_rate * std::pow((1.0 + A) / (kk + 1.0 + A), cfg.alpha)
                      : cfg.learning_rate;
        const Vec delta = rademacher(n, rng);
        const double up = obj.evaluate(shifted(theta, delta, ck));
        const double down = obj.evaluate(shifted(theta, delta, -ck));
        if (!std::isfinite(up) || !std::isfinite(down)) {
            rec.abort(theta, "non-finite objective at QN-SPSA iteration " +
                                 std::to_string(k));
        }
        rec.record(k, 0.5 * (up + down), theta);
        Eigen::VectorXd grad(dim);
        const double diff = (up - down) / (2 * ck);
        for (std::size_t i = 0; i < n; ++i) {
            grad(static_cast<Eigen::Index>(i)) = diff * delta[i];
        }

        const Vec d1 = rademacher(n, rng);
        const Vec d2 = rademacher(n, rng);
        const double f_pp = obj.fidelity(theta, two_point_shift(theta, d1, eps, d2, eps));
        const double f_p = obj.fidelity(theta, shifted(theta, d1, eps));
        const double f_mp = obj.fidelity(theta, two_point_shift(theta, d1, -eps, d2, eps));
        const double f_m = obj.fidelity(theta, shifted(theta, d1, -eps));
        const double delta_f = f_pp - f_p - f_mp + f_m;
        if (!std::isfinite(delta_f)) {
            rec.abort(theta, "non-finite fidelity at QN-SPSA iteration " +
                                 std::to_string(k));
        }
        const Eigen::Map<const Eigen::VectorXd> v1(d1.data(), dim);
        const Eigen::Map<const Eigen::VectorXd> v2(d2.data(), dim);
        const Eigen::MatrixXd sample =
            -(delta_f / (8 * eps * eps)) * (v1 * v2.transpose() + v2 * v1.transpose());
        if (cfg.average_metric) {
            metric = (kk / (kk + 1.0)) * metric + (1.0 / (kk + 1.0)) * sample;
        } else {
            metric = sample;
        }

        // |G| + lambda I, with |G| = sqrt(G G) through the eigenbasis.
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(metric);
        const Eigen::VectorXd shifted_ev =
            es.eigenvalues().cwiseAbs().array() + cfg.regularization;
        const double smallest = shifted_ev.minCoeff();
        const double largest = shifted_ev.maxCoeff();
        if (!(smallest > 1e-12 * std::max(1.0, largest))) {
            rec.abort(theta, "regularized metric is singular; increase the "
                             "regularization");
        }
        const Eigen::VectorXd step =
            es.eigenvectors() *
            (es.eigenvectors().transpose() * grad).cwiseQuotient(shifted_ev);
        Vec next = theta;
        for (std::size_t i = 0; i < n; ++i) {
            next[i] -= eta * step(static_cast<Eigen::Index>(i));
        }
        if (cfg.blocking) {
            const double candidate = obj.evaluate(next);
            if (!std::isfinite(candidate)) {
                rec.abort(theta, "non-finite objective at QN-SPSA iteration " +
                                     std::to_string(k));
            }
            if (candidate > current + tolerance) {
                continue;
            }
            current = candidate;
        }
        theta = std::move(next);
    }
    return rec.finish(theta, "iteration limit");
}

OptimizerTrace shift_gradient_minimize(Objective &obj, std::span<const double> theta0,
                                       const GradientConfig &cfg) {
    const std::size_t n = obj.n_params();
    Vec theta(theta0.begin(), theta0.end());
    if (theta.size() != n) {
        throw InvalidArgument("theta0 length does not match the objective");
    }
    if (cfg.iterations < 1) {
        throw InvalidArgument("gradient descent needs at least one iteration");
    }
    Recorder rec(obj, cfg.record_theta);
    double f = obj.evaluate(theta);
    if (!std::isfinite(f)) {
        rec.abort(theta, "non-finite objective at the initial point");
    }
    std::deque<Vec> s_hist;
    std::deque<Vec> y_hist;
    double step_length = cfg.initial_step;
    Vec g = obj.gradient(theta);
    std::string reason = "iteration limit";
    std::size_t stalled = 0;

    for (std::size_t k = 0; k < cfg.iterations; ++k) {
        if (!all_finite(g)) {
            rec.abort(theta, "non-finite gradient at iteration " + std::to_string(k));
        }
        const double gnorm = norm2(g);
        if (gnorm < cfg.gradient_tolerance) {
            if (k == 0) {
                rec.record(k, f, theta);
            }
            reason = "gradient norm below tolerance";
            break;
        }
        Vec dir;
        double t = 1.0;
        const bool quasi_newton =
            cfg.direction == DescentDirection::Lbfgs && !s_hist.empty();
        if (quasi_newton) {
            dir = lbfgs_direction(g, s_hist, y_hist);
            if (dot(dir, g) >= 0.0) {
                s_hist.clear();
                y_hist.clear();
            }
        }
        if (s_hist.empty() || !quasi_newton) {
            dir = g;
            for (auto &v : dir) {
                v = -v;
            }
            // Step measured as a length in parameter space keeps the iteration
            // invariant under rescaling of the objective.
            t = step_length / gnorm;
        }
        const double slope = dot(g, dir);
        Vec trial;
        double f_trial = f;
        bool accepted = false;
        for (std::size_t b = 0; b <= cfg.max_backtracks; ++b) {
            trial = shifted(theta, dir, t);
            f_trial = obj.evaluate(trial);
            if (std::isfinite(f_trial) && f_trial <= f + cfg.armijo * t * slope) {
                accepted = true;
                break;
            }
            t *= 0.5;
        }
        if (!accepted) {
            if (!s_hist.empty()) {
                // Retry from a steepest-descent direction next iteration.
                s_hist.clear();
                y_hist.clear();
                rec.record(k, f, theta);
                continue;
            }
            rec.record(k, f, theta);
            reason = "line search made no progress";
            break;
        }
        if (!quasi_newton) {
            step_length = 2.0 * t * gnorm;
        }
        Vec g_new = obj.gradient(trial);
        if (!all_finite(g_new)) {
            rec.abort(trial, "non-finite gradient at iteration " + std::to_string(k));
        }
        Vec s(n);
        Vec y(n);
        for (std::size_t i = 0; i < n; ++i) {
            s[i] = trial[i] - theta[i];
            y[i] = g_new[i] - g[i];
        }
        if (dot(s, y) > 1e-14 * norm2(s) * norm2(y)) {
            s_hist.push_back(std::move(s));
            y_hist.push_back(std::move(y));
            if (s_hist.size() > cfg.history) {
                s_hist.pop_front();
                y_hist.pop_front();
            }
        }
        const double gain = f - f_trial;
        theta = std::move(trial);
        f = f_trial;
        g = std::move(g_new);
        rec.record(k, f, theta);
        stalled = gain <= cfg.value_tolerance * std::max(1.0, std::abs(f)) ? stalled + 1 : 0;
        if (cfg.stall_iterations > 0 && stalled >= cfg.stall_iterations) {
            reason = "objective change below tolerance";
            break;
        }
    }
    return rec.finish(theta, reason);
}

bool supports_parameter_shift(const Circuit &c) {
    for (std::size_t j = 0; j < c.n_params(); ++j) {
        const auto users = c.gates_using(j);
        if (users.size() != 1) {
            return false;
        }
        const Gate &g = c.gates()[users.front()];
        const bool pauli_generated = g.kind == GateKind::RX || g.kind == GateKind::RY ||
                                     g.kind == GateKind::RZ ||
                                     g.kind == GateKind::PauliRotation;
        if (!pauli_generated || g.angle.value == 0.0) {
            return false;
        }
    }
    return true;
}

std::vector<double> parameter_shift_gradient(Objective &obj, const Circuit &c,
                                             std::span<const double> theta) {
    if (!supports_parameter_shift(c)) {
        throw UnsupportedGradient("a parameter slot drives a gate (or several) "
                                  "outside the two-term shift rule");
    }
    Vec point(theta.begin(), theta.end());
    Vec g(theta.size());
    for (std::size_t j = 0; j < theta.size(); ++j) {
        const double m = c.gates()[c.gates_using(j).front()].angle.value;
        const double shift = std::numbers::pi / (2.0 * m);
        point[j] = theta[j] + shift;
        const double up = obj.evaluate(point);
        point[j] = theta[j] - shift;
        const double down = obj.evaluate(point);
        point[j] = theta[j];
        g[j] = m * (up - down) / 2.0;
    }
    return g;
}

} // namespace spinvar
