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
 * @file optimizers.hpp
 * Classical outer loops driving a black-box objective: SPSA, QN-SPSA and a
 * deterministic line-search gradient method.
 */
#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "spinvar/circuits.hpp"
#include "spinvar/error.hpp"
#include "spinvar/rng.hpp"

namespace spinvar {

/// Cost function plus optional fidelity probe and gradient, with an
/// evaluation counter. Every cost evaluation and every fidelity probe
/// counts as one circuit evaluation.
class Objective {
  public:
    using Cost = std::function<double(std::span<const double>)>;
    using Fidelity =
        std::function<double(std::span<const double>, std::span<const double>)>;
    /// Receives the objective so that the evaluations it performs are counted.
    using Gradient =
        std::function<std::vector<double>(Objective &, std::span<const double>)>;

    static constexpr double finite_difference_step = 1e-4;

    Objective(std::size_t n_params, Cost cost);

    Objective &set_fidelity(Fidelity f);
    Objective &set_gradient(Gradient g);

    [[nodiscard]] std::size_t n_params() const noexcept { return n_params_; }
    [[nodiscard]] bool has_fidelity() const noexcept { return bool(fidelity_); }
    [[nodiscard]] bool has_gradient() const noexcept { return bool(gradient_); }
    [[nodiscard]] std::size_t evaluations() const noexcept { return evaluations_; }

    double evaluate(std::span<const double> theta);
    double fidelity(std::span<const double> a, std::span<const double> b);

    /// The attached gradient, or central finite differences with step 1e-4.
    std::vector<double> gradient(std::span<const double> theta);

  private:
    void check_size(std::span<const double> theta) const;

    std::size_t n_params_;
    Cost cost_;
    Fidelity fidelity_;
    Gradient gradient_;
    std::size_t evaluations_ = 0;
};

struct IterationRecord {
    std::size_t iteration = 0;
    std::size_t cumulative_evaluations = 0;
    double objective_value = 0.0;
    double best_objective = 0.0;
    std::vector<double> theta; ///< empty unless snapshots were requested
};

struct OptimizerTrace {
    std::vector<IterationRecord> records;
    std::vector<double> final_theta;
    std::vector<double> best_theta;
    double final_value = std::numeric_limits<double>::quiet_NaN();
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t evaluations = 0;
    std::size_t calibration_evaluations = 0;
    double wall_time_s = 0.0;
    std::string stop_reason;
};

/// Raised when the objective or gradient turns non-finite; carries the
/// trace recorded up to that point.
class OptimizerAbort : public Error {
  public:
    OptimizerAbort(const std::string &message, OptimizerTrace partial)
        : Error(message), partial_(std::move(partial)) {}

    [[nodiscard]] const OptimizerTrace &partial_trace() const noexcept {
        return partial_;
    }

  private:
    OptimizerTrace partial_;
};

struct SpsaConfig {
    std::size_t iterations = 800;
    /// Step gain; calibrated from the first gradient magnitudes when empty.
    std::optional<double> a;
    double c = 0.1;
    /// Stability constant; 0.05 * iterations when empty.
    std::optional<double> A;
    double alpha = 0.602;
    double gamma = 0.101;
    /// Per-component size of the first step targeted by calibration.
    double target_step = 0.1;
    /// Perturbation pairs spent on calibration (2 evaluations each).
    std::size_t calibration_steps = 5;
    bool record_theta = false;
};

struct QnspsaConfig {
    std::size_t iterations = 800;
    double learning_rate = 0.03;
    /// epsilon of the fidelity (metric) probes.
    double perturbation = 0.01;
    /// Perturbation of the two-point gradient estimate.
    double gradient_perturbation = 0.1;
    double regularization = 0.001;
    bool average_metric = true;
    /// Reject updates whose objective exceeds the current one by more than
    /// allowed_increase (one extra evaluation per iteration).
    bool blocking = true;
    /// Twice the objective's standard deviation over 10 evaluations at
    /// theta0 when empty.
    std::optional<double> allowed_increase;
    /// Decay the learning rate as ((1 + A) / (k + 1 + A))^alpha and the
    /// gradient perturbation as (k + 1)^-gamma; constant gains otherwise.
    bool decay = true;
    double alpha = 0.602;
    double gamma = 0.101;
    /// 0.05 * iterations when empty.
    std::optional<double> A;
    bool record_theta = false;
};

enum class DescentDirection { Steepest, Lbfgs };

struct GradientConfig {
    std::size_t iterations = 1300;
    double gradient_tolerance = 1e-8;
    /// Stop after `stall_iterations` consecutive steps that each lower the
    /// objective by at most value_tolerance * max(1, |f|).
    double value_tolerance = 1e-12;
    std::size_t stall_iterations = 5;
    DescentDirection direction = DescentDirection::Lbfgs;
    std::size_t history = 10;
    double armijo = 1e-4;
    /// Length in parameter space of the first trial step.
    double initial_step = 0.1;
    std::size_t max_backtracks = 40;
    bool record_theta = false;
};

/// Two-evaluation SPSA with Rademacher perturbations and gains
/// a_k = a/(k+1+A)^alpha, c_k = c/(k+1)^gamma.
OptimizerTrace spsa_minimize(Objective &obj, std::span<const double> theta0,
                             const SpsaConfig &cfg, Rng &rng);

/// SPSA gradient preconditioned by a running average of rank-2 estimates
/// of the Fubini-Study metric built from four fidelity probes.
OptimizerTrace qnspsa_minimize(Objective &obj, std::span<const double> theta0,
                               const QnspsaConfig &cfg, Rng &rng);

/// Backtracking (Armijo) line-search descent on the objective's gradient.
OptimizerTrace shift_gradient_minimize(Objective &obj, std::span<const double> theta0,
                                       const GradientConfig &cfg);

/// True when every parameter slot drives exactly one RX/RY/RZ/Pauli
/// rotation gate, so the two-term shift rule is exact.
[[nodiscard]] bool supports_parameter_shift(const Circuit &c);

/// d f / d theta_j = m [f(theta + pi/(2m) e_j) - f(theta - pi/(2m) e_j)] / 2
/// through `obj`, 2P evaluations. Throws UnsupportedGradient when
/// supports_parameter_shift(c) is false.
[[nodiscard]] std::vector<double> parameter_shift_gradient(Objective &obj,
                                                           const Circuit &c,
                                                           std::span<const double> theta);

} // namespace spinvar
