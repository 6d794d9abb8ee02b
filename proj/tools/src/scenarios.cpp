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
#include "spinvar/cli/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "spinvar/cli/pool.hpp"
#include "spinvar/problems.hpp"
#include "spinvar/version.hpp"

namespace spinvar::cli {
namespace {

constexpr double mgm4_exact = -4.1;

const Observable &chain(std::size_t n) {
    static const Observable four = build_mgm({4, 1.0, -0.1, true});
    static const Observable eight = build_mgm({8, 1.0, -0.1, true});
    return n == 4 ? four : eight;
}

ProblemInfo mgm_info(double exact) {
    ProblemInfo info;
    info.name = "mgm";
    info.exact_energy = exact;
    return info;
}

SimulationConfig noisy() {
    return SimulationConfig::sampled(1024, NoiseConfig::nisq_defaults());
}

SpsaConfig spsa(std::size_t iterations) {
    SpsaConfig c;
    c.iterations = iterations;
    return c;
}

QnspsaConfig qnspsa(std::size_t iterations) {
    QnspsaConfig c;
    c.iterations = iterations;
    return c;
}

GradientConfig grad(std::size_t iterations) {
    GradientConfig c;
    c.iterations = iterations;
    return c;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 == 1 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

Check lower_median(const std::string &a, const std::string &b, const std::string &field) {
    return {"median " + field + " of " + a + " < " + b,
            [a, b, field](const Json &v) {
                return v.at(a).at("median_" + field).get<double>() <
                       v.at(b).at("median_" + field).get<double>();
            }};
}

const Graph &maxcut10() {
    static const Graph g = random_graph(10, 0.5, 7, WeightMode::Unit);
    return g;
}

std::vector<Scenario> build_registry() {
    std::vector<Scenario> r;

    r.push_back({"noisy-4spin-spsa",
                 "4-spin chain under shot and depolarizing noise: VQE (EfficientSU2, r=7) vs "
                 "QAOA (p=5), both with SPSA, 800 iterations, 1024 shots",
                 mgm4_exact,
                 {{"vqe-spsa", "vqe",
                   [](std::uint64_t s) {
                       return vqe_run(chain(4), make_efficient_su2(4, 7), spsa(800), noisy(), s,
                                      mgm_info(mgm4_exact));
                   }},
                  {"qaoa-spsa", "qaoa",
                   [](std::uint64_t s) {
                       return qaoa_run(chain(4), 5, spsa(800), noisy(), s, mgm_info(mgm4_exact));
                   }}},
                 {lower_median("vqe-spsa", "qaoa-spsa", "error")}});

    r.push_back({"noisy-4spin-qnspsa",
                 "4-spin chain under noise: QAOA (p=5) with QN-SPSA vs SPSA, plus VQE with "
                 "QN-SPSA for reference; 800 iterations, 1024 shots",
                 mgm4_exact,
                 {{"qaoa-spsa", "qaoa",
                   [](std::uint64_t s) {
                       return qaoa_run(chain(4), 5, spsa(800), noisy(), s, mgm_info(mgm4_exact));
                   }},
                  {"qaoa-qnspsa", "qaoa",
                   [](std::uint64_t s) {
                       return qaoa_run(chain(4), 5, qnspsa(800), noisy(), s,
                                       mgm_info(mgm4_exact));
                   }},
                  {"vqe-qnspsa", "vqe",
                   [](std::uint64_t s) {
                       return vqe_run(chain(4), make_efficient_su2(4, 7), qnspsa(800), noisy(),
                                      s, mgm_info(mgm4_exact));
                   }}},
                 {lower_median("qaoa-qnspsa", "qaoa-spsa", "best_energy")}});

    r.push_back({"noiseless-4spin",
                 "Noiseless 4-spin chain: VQE (EfficientSU2, r=5) and QAOA (p=5) with the "
                 "gradient optimizer",
                 mgm4_exact,
                 {{"vqe-grad", "vqe",
                   [](std::uint64_t s) {
                       return vqe_run(chain(4), make_efficient_su2(4, 5), grad(1300),
                                      SimulationConfig::exact(), s, mgm_info(mgm4_exact));
                   }},
                  {"qaoa-grad", "qaoa",
                   [](std::uint64_t s) {
                       return qaoa_run(chain(4), 5, grad(1300), SimulationConfig::exact(), s,
                                       mgm_info(mgm4_exact));
                   }}},
                 {{"median error of vqe-grad below 1e-3",
                   [](const Json &v) { return v.at("vqe-grad").at("median_error") < 1e-3; }},
                  {"median error of qaoa-grad below 1e-3",
                   [](const Json &v) { return v.at("qaoa-grad").at("median_error") < 1e-3; }}}});

    const double mgm8_exact = -7.6205156484;
    r.push_back({"8spin-qaoa-p16",
                 "Noiseless 8-spin chain: QAOA p=16 (32 parameters), gradient optimizer, "
                 "1300 iterations",
                 mgm8_exact,
                 {{"qaoa-grad", "qaoa",
                   [mgm8_exact](std::uint64_t s) {
                       return qaoa_run(chain(8), 16, grad(1300), SimulationConfig::exact(), s,
                                       mgm_info(mgm8_exact));
                   }}},
                 {{"some seed reaches -7.55",
                   [](const Json &v) { return v.at("qaoa-grad").at("min_best_energy") <= -7.55; }}}});

    r.push_back({"8spin-vqe",
                 "Noiseless 8-spin chain: VQE with EfficientSU2 r=11 (192 parameters), "
                 "gradient optimizer, 1300 iterations",
                 mgm8_exact,
                 {{"vqe-grad", "vqe",
                   [mgm8_exact](std::uint64_t s) {
                       return vqe_run(chain(8), make_efficient_su2(8, 11), grad(1300),
                                      SimulationConfig::exact(), s, mgm_info(mgm8_exact));
                   }}},
                 {{"median best energy <= -7.0",
                   [](const Json &v) { return v.at("vqe-grad").at("median_best_energy") <= -7.0; }}}});

    const double cut10 = brute_force_maxcut(maxcut10()).value;
    r.push_back({"maxcut-10node",
                 "Unit-weight random 10-node graph (edge probability 0.5, seed 7): VQE "
                 "(EfficientSU2, r=5) vs QAOA (p=3), gradient optimizer",
                 -cut10,
                 {{"vqe-grad", "vqe",
                   [](std::uint64_t s) {
                       ProblemInfo info;
                       info.name = "maxcut";
                       info.graph = maxcut10();
                       const auto h = build_maxcut(maxcut10());
                       info.exact_energy = -brute_force_maxcut(maxcut10()).value;
                       const auto ansatz = make_efficient_su2(10, 5);
                       auto res = vqe_run(h, ansatz, grad(1300), SimulationConfig::exact(), s,
                                          info);
                       read_out_bitstring(res, ansatz, 4096, info);
                       return res;
                   }},
                  {"qaoa-grad", "qaoa",
                   [](std::uint64_t s) {
                       ProblemInfo info;
                       info.name = "maxcut";
                       info.graph = maxcut10();
                       info.exact_energy = -brute_force_maxcut(maxcut10()).value;
                       return qaoa_run(build_maxcut(maxcut10()), 3, grad(1300),
                                       SimulationConfig::exact(), s, info);
                   }}},
                 {{"median QAOA cut >= 0.9 x optimum",
                   [cut10](const Json &v) {
                       return v.at("qaoa-grad").at("median_cut_value").get<double>() >=
                              0.9 * cut10;
                   }}}});
    return r;
}

} // namespace

const std::vector<Scenario> &scenario_registry() {
    static const std::vector<Scenario> registry = build_registry();
    return registry;
}

const Scenario *find_scenario(const std::string &name) {
    for (const auto &s : scenario_registry()) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

Json run_benchmark(const Scenario &scenario, const BenchmarkOptions &options) {
    const auto start = std::chrono::steady_clock::now();
    const std::size_t nv = scenario.variants.size();
    std::vector<std::vector<VqaResult>> results(nv, std::vector<VqaResult>(options.seeds));
    std::vector<std::function<void()>> tasks;
    for (std::size_t k = 0; k < options.seeds; ++k) {
        for (std::size_t v = 0; v < nv; ++v) {
            tasks.emplace_back([&, k, v] {
                const std::uint64_t seed = options.first_seed + k;
                const auto &variant = scenario.variants[v];
                VqaResult r = variant.run(seed);
                const auto dir =
                    options.out / ("seed-" + std::to_string(seed)) / variant.name;
                write_text(dir / "trace.csv", trace_csv(r.trace));
                write_text(dir / "summary.json", run_summary(r, variant.method).dump(2) + "\n");
                if (options.plots) {
                    write_text(dir / "convergence.svg",
                               render_svg(convergence_chart(
                                   r, scenario.name + ": " + variant.name + ", seed " +
                                          std::to_string(seed))));
                }
                results[v][k] = std::move(r);
            });
        }
    }
    run_parallel(tasks, worker_count(tasks.size()));

    Json seeds = Json::array();
    for (std::size_t k = 0; k < options.seeds; ++k) {
        seeds.push_back(options.first_seed + k);
    }
    Json variants;
    for (std::size_t v = 0; v < nv; ++v) {
        std::vector<double> best;
        std::vector<double> errors;
        std::vector<double> cuts;
        for (const auto &r : results[v]) {
            best.push_back(r.best_energy);
            if (scenario.exact_energy) {
                errors.push_back(std::abs(r.best_energy - *scenario.exact_energy));
            }
            if (r.cut_value) {
                cuts.push_back(*r.cut_value);
            }
        }
        Json j;
        j["method"] = scenario.variants[v].method;
        j["optimizer"] = optimizer_name(results[v].front().optimizer);
        j["best_energies"] = best;
        j["median_best_energy"] = median(best);
        j["min_best_energy"] = *std::min_element(best.begin(), best.end());
        if (!errors.empty()) {
            j["errors"] = errors;
            j["median_error"] = median(errors);
        }
        if (!cuts.empty()) {
            j["cut_values"] = cuts;
            j["median_cut_value"] = median(cuts);
        }
        variants[scenario.variants[v].name] = j;
    }
    Json checks = Json::array();
    bool all = true;
    for (const auto &c : scenario.checks) {
        const bool ok = c.holds(variants);
        all = all && ok;
        checks.push_back({{"description", c.description}, {"passed", ok}});
    }

    if (options.plots) {
        Chart chart;
        chart.title = scenario.name + ", seed " + std::to_string(options.first_seed);
        chart.x_label = "circuit evaluations";
        chart.y_label = "best energy so far";
        chart.reference = scenario.exact_energy;
        for (std::size_t v = 0; v < nv; ++v) {
            Series s{scenario.variants[v].name, {}, {}, false};
            for (const auto &rec : results[v].front().trace.records) {
                s.x.push_back(static_cast<double>(rec.cumulative_evaluations));
                s.y.push_back(rec.best_objective);
            }
            chart.series.push_back(std::move(s));
        }
        write_text(options.out / "comparison.svg", render_svg(chart));
    }

    Json agg;
    agg["scenario"] = scenario.name;
    agg["description"] = scenario.description;
    agg["seeds"] = seeds;
    agg["exact_energy"] = scenario.exact_energy ? Json(*scenario.exact_energy) : Json(nullptr);
    agg["variants"] = variants;
    agg["checks"] = checks;
    agg["all_checks_passed"] = all;
    agg["wall_time_s"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    agg["tool_version"] = spinvar::version;
    write_text(options.out / "aggregate.json", agg.dump(2) + "\n");
    return agg;
}

} // namespace spinvar::cli
