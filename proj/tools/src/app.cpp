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
#include "spinvar/cli/app.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "spinvar/cli/pool.hpp"
#include "spinvar/cli/report.hpp"
#include "spinvar/cli/scenarios.hpp"
#include "spinvar/error.hpp"
#include "spinvar/exact.hpp"
#include "spinvar/problems.hpp"
#include "spinvar/version.hpp"
#include "spinvar/vqa.hpp"

namespace spinvar::cli {
namespace {

namespace fs = std::filesystem;

/// Bad flag combinations found after parsing; maps to exit code 2.
class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Largest chains for which an exact reference energy is computed alongside
// a variational run.
constexpr std::size_t exact_reference_limit = 16;

double seconds_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

void add_config_option(CLI::App *sub) {
    // Expanded into flags by expand_config before parsing.
    sub->add_option("--config", "Flat key = value file; flags given on the command line win");
}

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool given_on_command_line(const std::vector<std::string> &args, const std::string &flag) {
    for (const auto &a : args) {
        if (a == flag || a.rfind(flag + "=", 0) == 0) {
            return true;
        }
    }
    return false;
}

/// Replaces `--config FILE` after the subcommand with one flag per
/// `key = value` line, skipping keys the command line already sets. Blank
/// lines and lines starting with '#' are ignored; '_' in keys reads as '-'.
std::vector<std::string> expand_config(const std::vector<std::string> &args, CLI::App &app) {
    std::size_t cfg_at = args.size();
    std::string file;
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            cfg_at = i;
            file = args[i + 1];
            break;
        }
        if (args[i].rfind("--config=", 0) == 0) {
            cfg_at = i;
            file = args[i].substr(9);
            break;
        }
    }
    if (cfg_at == args.size()) {
        return args;
    }
    CLI::App *sub = nullptr;
    for (std::size_t i = 1; i < cfg_at && sub == nullptr; ++i) {
        try {
            sub = app.get_subcommand(args[i]);
        } catch (const CLI::OptionNotFound &) {
        }
    }
    if (sub == nullptr) {
        throw UsageError("--config must follow a subcommand");
    }
    std::ifstream in(file, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read config file " + file);
    }
    std::vector<std::string> out(args.begin(), args.begin() + static_cast<std::ptrdiff_t>(cfg_at));
    const std::vector<std::string> rest(
        args.begin() + static_cast<std::ptrdiff_t>(cfg_at) + (args[cfg_at] == "--config" ? 2 : 1),
        args.end());
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw UsageError(file + " line " + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
            value = value.substr(1, value.size() - 2);
        }
        std::replace(key.begin(), key.end(), '_', '-');
        const std::string flag = key.size() == 1 ? "-" + key : "--" + key;
        const CLI::Option *opt = nullptr;
        try {
            opt = sub->get_option(flag);
        } catch (const CLI::OptionNotFound &) {
        }
        if (opt == nullptr && key.size() == 1) {
            try {
                opt = sub->get_option("--" + key);
            } catch (const CLI::OptionNotFound &) {
            }
        }
        if (opt == nullptr || key == "config") {
            throw UsageError(file + " line " + std::to_string(lineno) + ": unknown key '" + key +
                             "'");
        }
        const std::string canonical = "--" + opt->get_single_name();
        if (given_on_command_line(rest, canonical) ||
            (!opt->get_snames().empty() &&
             given_on_command_line(rest, "-" + opt->get_snames().front()))) {
            continue;
        }
        if (opt->get_expected_max() == 0) {
            if (value == "true" || value == "1" || value == "on" || value == "yes") {
                out.push_back(canonical);
            } else if (!(value == "false" || value == "0" || value == "off" || value == "no")) {
                throw UsageError(file + " line " + std::to_string(lineno) + ": '" + key +
                                 "' expects true or false");
            }
            continue;
        }
        out.push_back(canonical);
        std::istringstream words(value);
        for (std::string w; words >> w;) {
            out.push_back(w);
        }
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

struct OutputFlags {
    std::string out = "spinvar-out";
    std::uint64_t seed = 1;
    bool no_plot = false;
};

void add_output_flags(CLI::App *sub, OutputFlags &f) {
    sub->add_option("--out", f.out, "Output directory")->capture_default_str();
    sub->add_option("--seed", f.seed, "Run seed")->capture_default_str();
    sub->add_flag("--no-plot", f.no_plot, "Skip SVG charts");
    add_config_option(sub);
}

struct VariationalFlags {
    std::size_t reps = 0;
    std::string optimizer;
    std::size_t iters = 0;
    std::string noise = "off";
    std::size_t shots = 1024;
    std::size_t readout_shots = 4096;
    std::size_t restarts = 1;
    NoiseConfig noise_model = NoiseConfig::nisq_defaults();
};

void add_variational_flags(CLI::App *sub, VariationalFlags &f, const std::string &reps_help) {
    sub->add_option("-p,--reps", f.reps, reps_help)->check(CLI::PositiveNumber);
    sub->add_option("--optimizer", f.optimizer,
                    "spsa, qnspsa or grad (default grad without noise, spsa with noise)")
        ->check(CLI::IsMember({"spsa", "qnspsa", "grad"}));
    sub->add_option("--iters", f.iters, "Optimizer iterations (default 800 spsa/qnspsa, 1300 grad)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--noise", f.noise, "off: exact expectations; on: shots plus depolarizing noise")
        ->check(CLI::IsMember({"off", "on"}))
        ->capture_default_str();
    sub->add_option("--shots", f.shots, "Shots per energy estimate with noise on")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--readout-shots", f.readout_shots, "Shots used to pick the reported bitstring")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--restarts", f.restarts, "Independent starts; the lowest energy is kept")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--p1", f.noise_model.p1, "Single-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--p2", f.noise_model.p2, "Multi-qubit depolarizing probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    sub->add_option("--p-readout", f.noise_model.p_readout, "Readout bit-flip probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
}

SimulationConfig make_simulation(const VariationalFlags &f) {
    if (f.noise == "off") {
        return SimulationConfig::exact();
    }
    NoiseConfig n = f.noise_model;
    n.enabled = true;
    return SimulationConfig::sampled(f.shots, n);
}

OptimizerConfig make_optimizer(const VariationalFlags &f) {
    const std::string name = f.optimizer.empty() ? (f.noise == "on" ? "spsa" : "grad") : f.optimizer;
    if (name == "grad" && f.noise == "on") {
        throw UsageError("the grad optimizer needs --noise off");
    }
    if (name == "spsa") {
        SpsaConfig c;
        c.iterations = f.iters > 0 ? f.iters : c.iterations;
        return c;
    }
    if (name == "qnspsa") {
        QnspsaConfig c;
        c.iterations = f.iters > 0 ? f.iters : c.iterations;
        return c;
    }
    GradientConfig c;
    c.iterations = f.iters > 0 ? f.iters : c.iterations;
    return c;
}

void write_run(const fs::path &out, const VqaResult &r, const std::string &method,
               const std::string &title, bool plots) {
    write_text(out / "trace.csv", trace_csv(r.trace));
    write_text(out / "summary.json", run_summary(r, method).dump(2) + "\n");
    if (plots) {
        write_text(out / "convergence.svg", render_svg(convergence_chart(r, title)));
    }
}

void report_run(std::ostream &os, const VqaResult &r) {
    os << "best_energy " << format_number(r.best_energy);
    if (r.exact_energy) {
        os << " exact " << format_number(*r.exact_energy);
    }
    if (r.bitstring) {
        os << " bitstring " << *r.bitstring;
    }
    if (r.cut_value) {
        os << " cut " << format_number(*r.cut_value);
    }
    os << " evaluations " << r.trace.evaluations << '\n';
}

// --------------------------------------------------------------------------
// mgm-ground

struct GroundFlags {
    std::size_t n = 0;
    double alpha = -0.1;
    double J = 1.0;
    std::string method = "vqe";
    bool doubled = false;
    VariationalFlags var;
    OutputFlags io;
};

void cmd_mgm_ground(const GroundFlags &f, std::ostream &os) {
    if (f.n < 4) {
        throw UsageError("n must be >= 4");
    }
    const MgmParams params{f.n, f.J, f.alpha, !f.doubled};
    params.validate();
    const Observable h = build_mgm(params);
    const fs::path out(f.io.out);
    ProblemInfo info;
    info.name = "mgm";
    info.convention = f.doubled ? EnergyConvention::Doubled : EnergyConvention::Actual;

    if (f.method == "exact") {
        if (f.n > 20) {
            throw UsageError("exact method supports n <= 20");
        }
        const auto start = std::chrono::steady_clock::now();
        const double e0 = lanczos_lowest(h, 1).front();
        ClassicalSummary s;
        s.problem = "mgm";
        s.method = "exact";
        s.n_qubits = f.n;
        s.seed = f.io.seed;
        s.energy = e0;
        s.convention = info.convention;
        s.wall_time_s = seconds_since(start);
        write_text(out / "summary.json", classical_summary(s).dump(2) + "\n");
        os << "exact_energy " << format_number(e0) << '\n';
        return;
    }
    if (f.n > StateVector::max_qubits) {
        throw UsageError("variational methods support n <= 26");
    }
    if (f.n <= exact_reference_limit) {
        info.exact_energy = lanczos_lowest(h, 1).front();
    }
    const SimulationConfig sim = make_simulation(f.var);
    const OptimizerConfig opt = make_optimizer(f.var);
    VqaResult r;
    if (f.method == "vqe") {
        const std::size_t reps = f.var.reps > 0 ? f.var.reps : default_gap_reps(f.n);
        const Ansatz ansatz = make_efficient_su2(f.n, reps);
        r = best_of_restarts(f.var.restarts, f.io.seed, [&](std::uint64_t s) {
            return vqe_run(h, ansatz, opt, sim, s, info);
        });
    } else {
        const std::size_t p = f.var.reps > 0 ? f.var.reps : 5;
        r = best_of_restarts(f.var.restarts, f.io.seed, [&](std::uint64_t s) {
            return qaoa_run(h, p, opt, sim, s, info, f.var.readout_shots);
        });
    }
    write_run(out, r, f.method,
              "MGM n=" + std::to_string(f.n) + ", " + f.method + " with " + optimizer_name(opt),
              !f.io.no_plot);
    report_run(os, r);
}

// --------------------------------------------------------------------------
// mgm-gap

struct GapFlags {
    std::size_t n_min = 4;
    std::size_t n_max = 0;
    std::string method = "exact";
    std::string parity = "all";
    double alpha = -0.1;
    double J = 1.0;
    std::size_t reps = 0;
    std::size_t restarts = 3;
    std::size_t iters = 0;
    bool allow_large = false;
    OutputFlags io;
};

void cmd_mgm_gap(const GapFlags &f, std::ostream &os) {
    const bool vqd = f.method == "vqd";
    const std::size_t n_max = f.n_max > 0 ? f.n_max : (vqd ? 9 : 14);
    const std::size_t limit = vqd ? (f.allow_large ? 14 : 9) : (f.allow_large ? 20 : 15);
    if (f.n_min < 4) {
        throw UsageError("n-min must be >= 4");
    }
    if (n_max < f.n_min) {
        throw UsageError("n-max must be >= n-min");
    }
    if (n_max > limit) {
        throw UsageError("n-max " + std::to_string(n_max) + " exceeds the " + f.method +
                         " limit " + std::to_string(limit) +
                         (f.allow_large ? "" : " (use --allow-large to raise it)"));
    }
    std::vector<std::size_t> ns;
    for (std::size_t n = f.n_min; n <= n_max; ++n) {
        if (f.parity == "all" || (f.parity == "even") == (n % 2 == 0)) {
            ns.push_back(n);
        }
    }
    if (ns.empty()) {
        throw UsageError("no chain length in range matches the requested parity");
    }

    GapScanConfig cfg;
    cfg.method = vqd ? GapMethod::Vqd : GapMethod::Exact;
    cfg.params = {4, f.J, f.alpha, true};
    cfg.params.validate();
    cfg.restarts = f.restarts;
    cfg.seed = f.io.seed;
    if (f.reps > 0) {
        const std::size_t reps = f.reps;
        cfg.reps_for_n = [reps](std::size_t) { return reps; };
    }
    if (f.iters > 0) {
        GradientConfig g;
        g.iterations = f.iters;
        cfg.optimizer = g;
    }

    std::vector<GapRow> rows(ns.size());
    std::vector<GapRow> exact_rows(ns.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        tasks.emplace_back([&, i] { rows[i] = energy_gap_scan({ns[i]}, cfg).front(); });
        if (vqd) {
            GapScanConfig exact = cfg;
            exact.method = GapMethod::Exact;
            tasks.emplace_back(
                [&, i, exact] { exact_rows[i] = energy_gap_scan({ns[i]}, exact).front(); });
        }
    }
    run_parallel(tasks, worker_count(tasks.size()));

    std::string csv = "n,E0,E1,gap,parity\n";
    for (const auto &r : rows) {
        csv += std::to_string(r.n) + "," + format_number(r.e0) + "," + format_number(r.e1) + "," +
               format_number(r.gap) + "," + (r.even ? "even" : "odd") + "\n";
        os << "n " << r.n << " E0 " << format_number(r.e0) << " E1 " << format_number(r.e1)
           << " gap " << format_number(r.gap) << '\n';
    }
    const fs::path out(f.io.out);
    write_text(out / "gaps.csv", csv);
    if (!f.io.no_plot) {
        Chart chart;
        chart.title = "MGM gap E1 - E0 (" + f.method + ")";
        chart.x_label = "chain length n";
        chart.y_label = "gap";
        const auto add = [&](const std::vector<GapRow> &src, const std::string &label) {
            Series even{label + " even n", {}, {}, true};
            Series odd{label + " odd n", {}, {}, true};
            for (const auto &r : src) {
                auto &s = r.even ? even : odd;
                s.x.push_back(static_cast<double>(r.n));
                s.y.push_back(r.gap);
            }
            for (auto *s : {&even, &odd}) {
                if (!s->x.empty()) {
                    chart.series.push_back(std::move(*s));
                }
            }
        };
        add(rows, f.method);
        if (vqd) {
            add(exact_rows, "exact");
        }
        write_text(out / "gaps.svg", render_svg(chart));
    }
}

// --------------------------------------------------------------------------
// maxcut

struct MaxcutFlags {
    std::string graph_file;
    std::vector<std::string> random;
    std::string weights = "unit";
    std::string method = "qaoa";
    VariationalFlags var;
    OutputFlags io;
};

Graph load_graph(const MaxcutFlags &f) {
    if (!f.graph_file.empty()) {
        std::ifstream in(f.graph_file, std::ios::binary);
        if (!in) {
            throw UsageError("cannot read graph file " + f.graph_file);
        }
        std::ostringstream text;
        text << in.rdbuf();
        return parse_graph(text.str());
    }
    std::size_t n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    try {
        std::size_t used = 0;
        n = std::stoul(f.random[0], &used);
        if (used != f.random[0].size()) {
            throw std::invalid_argument("n");
        }
        p = std::stod(f.random[1], &used);
        if (used != f.random[1].size()) {
            throw std::invalid_argument("p");
        }
        seed = std::stoull(f.random[2], &used);
        if (used != f.random[2].size()) {
            throw std::invalid_argument("seed");
        }
    } catch (const std::logic_error &) {
        throw UsageError("--random expects N P SEED (integer, probability, integer)");
    }
    return random_graph(n, p, seed, f.weights == "mixed" ? WeightMode::Mixed : WeightMode::Unit);
}

void cmd_maxcut(const MaxcutFlags &f, std::ostream &os) {
    const Graph g = load_graph(f);
    const fs::path out(f.io.out);
    write_text(out / "graph.txt", g.to_text());
    const Observable h = build_maxcut(g);
    ProblemInfo info;
    info.name = "maxcut";
    info.graph = g;

    if (f.method == "bruteforce") {
        const auto start = std::chrono::steady_clock::now();
        const MaxcutSolution sol = brute_force_maxcut(g);
        ClassicalSummary s;
        s.problem = "maxcut";
        s.method = "bruteforce";
        s.n_qubits = g.n_nodes();
        s.seed = f.io.seed;
        s.energy = -sol.value;
        s.cut_value = sol.value;
        s.bitstring = sol.partition;
        s.wall_time_s = seconds_since(start);
        write_text(out / "summary.json", classical_summary(s).dump(2) + "\n");
        os << "cut " << format_number(sol.value) << " partition " << sol.partition << '\n';
        return;
    }
    if (g.n_nodes() > StateVector::max_qubits) {
        throw UsageError("variational methods support at most 26 nodes");
    }
    if (g.n_nodes() <= 22) {
        info.exact_energy = -brute_force_maxcut(g).value;
    }
    const SimulationConfig sim = make_simulation(f.var);
    const OptimizerConfig opt = make_optimizer(f.var);
    VqaResult r;
    if (f.method == "vqe") {
        const std::size_t reps = f.var.reps > 0 ? f.var.reps : default_gap_reps(g.n_nodes());
        const Ansatz ansatz = make_efficient_su2(g.n_nodes(), reps);
        r = best_of_restarts(f.var.restarts, f.io.seed, [&](std::uint64_t s) {
            VqaResult res = vqe_run(h, ansatz, opt, sim, s, info);
            read_out_bitstring(res, ansatz, f.var.readout_shots, info);
            return res;
        });
    } else {
        const std::size_t p = f.var.reps > 0 ? f.var.reps : 3;
        r = best_of_restarts(f.var.restarts, f.io.seed, [&](std::uint64_t s) {
            return qaoa_run(h, p, opt, sim, s, info, f.var.readout_shots);
        });
    }
    write_run(out, r, f.method,
              "Max-cut, " + std::to_string(g.n_nodes()) + " nodes, " + f.method + " with " +
                  optimizer_name(opt),
              !f.io.no_plot);
    report_run(os, r);
}

// --------------------------------------------------------------------------
// benchmark

struct BenchFlags {
    std::string scenario;
    std::size_t seeds = 5;
    std::uint64_t first_seed = 1;
    bool list = false;
    std::string out = "spinvar-out";
    bool no_plot = false;
};

std::string registry_listing() {
    std::string s;
    for (const auto &sc : scenario_registry()) {
        s += "  " + sc.name + ": " + sc.description + "\n";
    }
    return s;
}

void cmd_benchmark(const BenchFlags &f, std::ostream &os) {
    if (f.list) {
        os << registry_listing();
        return;
    }
    if (f.scenario.empty()) {
        throw UsageError("a scenario name is required; available scenarios:\n" +
                         registry_listing());
    }
    const Scenario *sc = find_scenario(f.scenario);
    if (sc == nullptr) {
        throw UsageError("unknown scenario '" + f.scenario + "'; available scenarios:\n" +
                         registry_listing());
    }
    BenchmarkOptions opts;
    opts.seeds = f.seeds;
    opts.first_seed = f.first_seed;
    opts.out = f.out;
    opts.plots = !f.no_plot;
    const Json agg = run_benchmark(*sc, opts);
    for (const auto &[name, v] : agg.at("variants").items()) {
        os << name << " median best_energy " << format_number(v.at("median_best_energy").get<double>());
        if (v.contains("median_error")) {
            os << " median error " << format_number(v.at("median_error").get<double>());
        }
        os << '\n';
    }
    for (const auto &c : agg.at("checks")) {
        os << (c.at("passed").get<bool>() ? "holds: " : "fails: ")
           << c.at("description").get<std::string>() << '\n';
    }
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Variational ground-state and Max-cut experiments on a state-vector simulator",
                 "spinvar"};
    app.set_version_flag("--version", std::string(spinvar::version));
    app.require_subcommand(1);

    GroundFlags ground;
    auto *g = app.add_subcommand("mgm-ground", "Ground energy of the Majumdar-Ghosh chain");
    g->add_option("--n", ground.n, "Number of spins (>= 4)")->required();
    g->add_option("--alpha", ground.alpha, "Next-nearest-neighbour ratio")->capture_default_str();
    g->add_option("--J", ground.J, "Coupling")->capture_default_str();
    g->add_option("--method", ground.method, "vqe, qaoa or exact")
        ->check(CLI::IsMember({"vqe", "qaoa", "exact"}))
        ->capture_default_str();
    g->add_flag("--doubled-energies", ground.doubled,
                "Drop the overall 1/2 prefactor (all energies doubled)");
    add_variational_flags(g, ground.var,
                          "EfficientSU2 repetitions (default max(5, ceil(n/2))) or QAOA p "
                          "(default 5)");
    add_output_flags(g, ground.io);

    GapFlags gap;
    auto *gp = app.add_subcommand("mgm-gap", "Ground and first excited energies over chain lengths");
    gp->add_option("--n-min", gap.n_min, "Shortest chain")->capture_default_str();
    gp->add_option("--n-max", gap.n_max, "Longest chain (default 14 exact, 9 vqd)");
    gp->add_option("--method", gap.method, "exact or vqd")
        ->check(CLI::IsMember({"exact", "vqd"}))
        ->capture_default_str();
    gp->add_option("--parity", gap.parity, "all, even or odd chain lengths")
        ->check(CLI::IsMember({"all", "even", "odd"}))
        ->capture_default_str();
    gp->add_option("--alpha", gap.alpha, "Next-nearest-neighbour ratio")->capture_default_str();
    gp->add_option("--J", gap.J, "Coupling")->capture_default_str();
    gp->add_option("-p,--reps", gap.reps, "EfficientSU2 repetitions for every n (vqd)")
        ->check(CLI::PositiveNumber);
    gp->add_option("--restarts", gap.restarts, "Starts per VQD level")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    gp->add_option("--iters", gap.iters, "Gradient iterations per VQD level (default 1300)")
        ->check(CLI::PositiveNumber);
    gp->add_flag("--allow-large", gap.allow_large, "Raise the chain-length limits (20 exact, 14 vqd)");
    add_output_flags(gp, gap.io);

    MaxcutFlags mc;
    auto *m = app.add_subcommand("maxcut", "Max-cut by brute force, VQE or QAOA");
    auto *graph_opt = m->add_option("--graph", mc.graph_file, "Edge-list file");
    auto *random_opt =
        m->add_option("--random", mc.random, "Random connected graph: N P SEED")->expected(3);
    graph_opt->excludes(random_opt);
    random_opt->excludes(graph_opt);
    m->add_option("--weights", mc.weights, "unit or mixed (random graphs)")
        ->check(CLI::IsMember({"unit", "mixed"}))
        ->capture_default_str();
    m->add_option("--method", mc.method, "bruteforce, vqe or qaoa")
        ->check(CLI::IsMember({"bruteforce", "vqe", "qaoa"}))
        ->capture_default_str();
    add_variational_flags(m, mc.var,
                          "EfficientSU2 repetitions (default max(5, ceil(n/2))) or QAOA p "
                          "(default 3)");
    add_output_flags(m, mc.io);

    BenchFlags bench;
    auto *b = app.add_subcommand("benchmark", "Run a named scenario over several seeds");
    b->add_option("scenario", bench.scenario, "Scenario name (see --list)");
    b->add_option("--seeds", bench.seeds, "Number of seeds")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    b->add_option("--first-seed", bench.first_seed, "First seed")->capture_default_str();
    b->add_flag("--list", bench.list, "List scenarios and exit");
    b->add_option("--out", bench.out, "Output directory")->capture_default_str();
    b->add_flag("--no-plot", bench.no_plot, "Skip SVG charts");
    add_config_option(b);

    std::vector<std::string> args(argv, argv + argc);
    try {
        args = expand_config(args, app);
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    try {
        // CLI11 consumes the vector form back to front.
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (g->parsed()) {
            cmd_mgm_ground(ground, out);
        } else if (gp->parsed()) {
            cmd_mgm_gap(gap, out);
        } else if (m->parsed()) {
            if (mc.graph_file.empty() && mc.random.empty()) {
                throw UsageError("maxcut needs --graph FILE or --random N P SEED");
            }
            cmd_maxcut(mc, out);
        } else if (b->parsed()) {
            cmd_benchmark(bench, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const spinvar::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        err << "runtime failure: " << e.what() << '\n';
        return exit_runtime;
    }
    return exit_ok;
}

} // namespace spinvar::cli
