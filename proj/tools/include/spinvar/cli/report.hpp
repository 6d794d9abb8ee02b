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
 * @file report.hpp
 * Run artifacts: trace CSV, JSON summaries and standalone SVG line charts.
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinvar/vqa.hpp"

namespace spinvar::cli {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that reads back to the same double.
[[nodiscard]] std::string format_number(double x);

/// `iteration,cumulative_evaluations,objective_value,best_objective`, one
/// row per optimizer iteration.
[[nodiscard]] std::string trace_csv(const OptimizerTrace &trace);

[[nodiscard]] Json optimizer_json(const OptimizerConfig &cfg);
[[nodiscard]] Json simulation_json(const SimulationConfig &sim);

/// Relative error below 1% against the exact energy; null without one.
[[nodiscard]] Json converged_json(double best, std::optional<double> exact);

/// Summary of a variational run. `method` is "vqe" or "qaoa".
[[nodiscard]] Json run_summary(const VqaResult &r, const std::string &method);

/// Summary skeleton for classical solves (exact diagonalization, brute force).
struct ClassicalSummary {
    std::string problem;
    std::string method;
    std::size_t n_qubits = 0;
    std::uint64_t seed = 0;
    double energy = 0.0;
    std::optional<double> cut_value;
    std::optional<std::string> bitstring;
    EnergyConvention convention = EnergyConvention::Actual;
    double wall_time_s = 0.0;
};
[[nodiscard]] Json classical_summary(const ClassicalSummary &s);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
    bool markers = false;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<Series> series;
    /// Dashed horizontal reference line.
    std::optional<double> reference;
    std::string reference_label = "exact";
};

[[nodiscard]] std::string render_svg(const Chart &chart);

/// Objective and best-so-far against cumulative evaluations.
[[nodiscard]] Chart convergence_chart(const VqaResult &r, const std::string &title);

/// Creates parent directories as needed; throws spinvar::Error on I/O failure.
void write_text(const std::filesystem::path &path, const std::string &content);

} // namespace spinvar::cli
