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
 * @file scenarios.hpp
 * Named benchmark scenarios run over a range of seeds.
 */
#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "spinvar/cli/report.hpp"

namespace spinvar::cli {

/// One optimization within a scenario, e.g. VQE-SPSA on the noisy chain.
struct Variant {
    std::string name;
    std::string method; ///< "vqe" or "qaoa"
    std::function<VqaResult(std::uint64_t seed)> run;
};

/// Comparison evaluated on the per-variant medians.
struct Check {
    std::string description;
    std::function<bool(const Json &variants)> holds;
};

struct Scenario {
    std::string name;
    std::string description;
    std::optional<double> exact_energy;
    std::vector<Variant> variants;
    std::vector<Check> checks;
};

[[nodiscard]] const std::vector<Scenario> &scenario_registry();
[[nodiscard]] const Scenario *find_scenario(const std::string &name);

struct BenchmarkOptions {
    std::size_t seeds = 5;
    std::uint64_t first_seed = 1;
    std::filesystem::path out;
    bool plots = true;
};

/// Runs every variant for seeds first_seed .. first_seed + seeds - 1 on the
/// worker pool, writes <out>/seed-<s>/<variant>/{trace.csv,summary.json}
/// and <out>/aggregate.json, and returns the aggregate document.
Json run_benchmark(const Scenario &scenario, const BenchmarkOptions &options);

} // namespace spinvar::cli
