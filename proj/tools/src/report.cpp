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
#include "spinvar/cli/report.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <variant>

#include "spinvar/error.hpp"
#include "spinvar/version.hpp"

namespace spinvar::cli {
namespace {

template <class T> Json optional_number(const std::optional<T> &v) {
    return v ? Json(*v) : Json(nullptr);
}

std::string escape_xml(const std::string &s) {
    std::string out;
    out.reserve(s.size());
    for (const char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fixed2(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.2f", v);
    return buf.data();
}

std::string tick_label(double v) {
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%g", std::abs(v) < 1e-12 ? 0.0 : v);
    return buf.data();
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void finalize() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12) {
            const double pad = std::max(std::abs(lo) * 0.05, 0.5);
            lo -= pad;
            hi += pad;
        }
    }
};

// Round step from {1, 2, 5} x 10^k giving about five intervals.
double nice_step(double span) {
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (const double m : {1.0, 2.0, 5.0}) {
        if (raw <= m * mag) {
            return m * mag;
        }
    }
    return 10.0 * mag;
}

constexpr std::array<const char *, 6> palette{"#1f77b4", "#d62728", "#2ca02c",
                                              "#9467bd", "#ff7f0e", "#8c564b"};

} // namespace

std::string format_number(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return {buf.data(), res.ptr};
}

std::string trace_csv(const OptimizerTrace &trace) {
    std::string out = "iteration,cumulative_evaluations,objective_value,best_objective\n";
    for (const auto &r : trace.records) {
        out += std::to_string(r.iteration);
        out += ',';
        out += std::to_string(r.cumulative_evaluations);
        out += ',';
        out += format_number(r.objective_value);
        out += ',';
        out += format_number(r.best_objective);
        out += '\n';
    }
    return out;
}

Json optimizer_json(const OptimizerConfig &cfg) {
    return std::visit(
        [](const auto &c) -> Json {
            using T = std::decay_t<decltype(c)>;
            Json j;
            j["iterations"] = c.iterations;
            if constexpr (std::is_same_v<T, SpsaConfig>) {
                j["a"] = optional_number(c.a);
                j["c"] = c.c;
                j["A"] = optional_number(c.A);
                j["alpha"] = c.alpha;
                j["gamma"] = c.gamma;
                j["target_step"] = c.target_step;
                j["calibration_steps"] = c.calibration_steps;
            } else if constexpr (std::is_same_v<T, QnspsaConfig>) {
                j["learning_rate"] = c.learning_rate;
                j["perturbation"] = c.perturbation;
                j["gradient_perturbation"] = c.gradient_perturbation;
                j["regularization"] = c.regularization;
                j["average_metric"] = c.average_metric;
                j["blocking"] = c.blocking;
                j["allowed_increase"] = optional_number(c.allowed_increase);
                j["decay"] = c.decay;
                j["alpha"] = c.alpha;
                j["gamma"] = c.gamma;
                j["A"] = optional_number(c.A);
            } else {
                j["direction"] = c.direction == DescentDirection::Lbfgs ? "lbfgs" : "steepest";
                j["history"] = c.history;
                j["gradient_tolerance"] = c.gradient_tolerance;
                j["value_tolerance"] = c.value_tolerance;
                j["stall_iterations"] = c.stall_iterations;
                j["armijo"] = c.armijo;
                j["initial_step"] = c.initial_step;
                j["max_backtracks"] = c.max_backtracks;
            }
            return j;
        },
        cfg);
}

Json simulation_json(const SimulationConfig &sim) {
    Json j;
    j["enabled"] = sim.noisy();
    j["p1"] = sim.noisy() ? sim.noise.p1 : 0.0;
    j["p2"] = sim.noisy() ? sim.noise.p2 : 0.0;
    j["p_readout"] = sim.noisy() ? sim.noise.p_readout : 0.0;
    return j;
}

Json converged_json(double best, std::optional<double> exact) {
    if (!exact || *exact == 0.0) {
        return nullptr;
    }
    return std::abs(best - *exact) / std::abs(*exact) < 0.01;
}

Json run_summary(const VqaResult &r, const std::string &method) {
    const bool sampled = r.simulation.mode == SimulationConfig::Mode::Sampled;
    Json j;
    j["problem"] = r.problem;
    j["method"] = method;
    j["n_qubits"] = r.n_qubits;
    j["ansatz"] = {{"family", r.ansatz.family},
                   {"reps", r.ansatz.reps},
                   {"n_params", r.ansatz.n_params},
                   {"depth", r.ansatz.depth}};
    j["optimizer"] = {{"name", optimizer_name(r.optimizer)},
                      {"config", optimizer_json(r.optimizer)}};
    j["iters"] = optimizer_iterations(r.optimizer);
    j["iterations_run"] = r.trace.records.size();
    j["evaluations"] = r.trace.evaluations;
    j["seed"] = r.seed;
    j["simulation"] = sampled ? "sampled" : "exact";
    j["shots"] = sampled ? Json(r.simulation.shots) : Json(nullptr);
    j["trajectories"] = r.trajectories;
    j["noise"] = simulation_json(r.simulation);
    j["final_energy"] = r.final_energy;
    j["best_energy"] = r.best_energy;
    j["best_state_energy"] = r.best_state_energy;
    j["exact_energy"] = optional_number(r.exact_energy);
    j["cut_value"] = optional_number(r.cut_value);
    j["bitstring"] = r.bitstring ? Json(*r.bitstring) : Json(nullptr);
    j["energy_convention"] = convention_name(r.convention);
    j["converged"] = converged_json(r.best_energy, r.exact_energy);
    j["stop_reason"] = r.trace.stop_reason;
    j["warnings"] = r.warnings;
    j["wall_time_s"] = r.trace.wall_time_s;
    j["tool_version"] = spinvar::version;
    return j;
}

Json classical_summary(const ClassicalSummary &s) {
    Json j;
    j["problem"] = s.problem;
    j["method"] = s.method;
    j["n_qubits"] = s.n_qubits;
    j["ansatz"] = nullptr;
    j["optimizer"] = nullptr;
    j["iters"] = 0;
    j["iterations_run"] = 0;
    j["evaluations"] = 0;
    j["seed"] = s.seed;
    j["simulation"] = "exact";
    j["shots"] = nullptr;
    j["trajectories"] = 0;
    j["noise"] = simulation_json(SimulationConfig::exact());
    j["final_energy"] = s.energy;
    j["best_energy"] = s.energy;
    j["best_state_energy"] = s.energy;
    j["exact_energy"] = s.energy;
    j["cut_value"] = optional_number(s.cut_value);
    j["bitstring"] = s.bitstring ? Json(*s.bitstring) : Json(nullptr);
    j["energy_convention"] = convention_name(s.convention);
    j["converged"] = true;
    j["stop_reason"] = "solved";
    j["warnings"] = Json::array();
    j["wall_time_s"] = s.wall_time_s;
    j["tool_version"] = spinvar::version;
    return j;
}

std::string render_svg(const Chart &chart) {
    constexpr double width = 720;
    constexpr double height = 440;
    constexpr double left = 80;
    constexpr double right = 180;
    constexpr double top = 40;
    constexpr double bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    Range xr;
    Range yr;
    for (const auto &s : chart.series) {
        for (const double v : s.x) {
            xr.add(v);
        }
        for (const double v : s.y) {
            yr.add(v);
        }
    }
    if (chart.reference) {
        yr.add(*chart.reference);
    }
    xr.finalize();
    yr.finalize();
    const double ystep = nice_step(yr.hi - yr.lo);
    yr.lo = std::floor(yr.lo / ystep) * ystep;
    yr.hi = std::ceil(yr.hi / ystep) * ystep;
    const double xstep = nice_step(xr.hi - xr.lo);

    const auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * plot_w; };
    const auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * plot_h; };

    std::ostringstream o;
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    o << "<text x=\"" << fixed2(left + plot_w / 2) << "\" y=\"24\" text-anchor=\"middle\" "
      << "font-size=\"15\">" << escape_xml(chart.title) << "</text>\n";

    // Grid and tick labels.
    for (double y = yr.lo; y <= yr.hi + 1e-9 * ystep; y += ystep) {
        const std::string yy = fixed2(py(y));
        o << "<line x1=\"" << fixed2(left) << "\" y1=\"" << yy << "\" x2=\""
          << fixed2(left + plot_w) << "\" y2=\"" << yy << "\" stroke=\"#e0e0e0\"/>\n";
        o << "<text x=\"" << fixed2(left - 6) << "\" y=\"" << fixed2(py(y) + 4)
          << "\" text-anchor=\"end\">" << tick_label(y) << "</text>\n";
    }
    for (double x = std::ceil(xr.lo / xstep) * xstep; x <= xr.hi + 1e-9 * xstep; x += xstep) {
        const std::string xx = fixed2(px(x));
        o << "<line x1=\"" << xx << "\" y1=\"" << fixed2(top) << "\" x2=\"" << xx
          << "\" y2=\"" << fixed2(top + plot_h) << "\" stroke=\"#f0f0f0\"/>\n";
        o << "<text x=\"" << xx << "\" y=\"" << fixed2(top + plot_h + 18)
          << "\" text-anchor=\"middle\">" << tick_label(x) << "</text>\n";
    }
    o << "<rect x=\"" << fixed2(left) << "\" y=\"" << fixed2(top) << "\" width=\""
      << fixed2(plot_w) << "\" height=\"" << fixed2(plot_h)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    o << "<text x=\"" << fixed2(left + plot_w / 2) << "\" y=\"" << fixed2(height - 16)
      << "\" text-anchor=\"middle\">" << escape_xml(chart.x_label) << "</text>\n";
    o << "<text transform=\"translate(20," << fixed2(top + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape_xml(chart.y_label)
      << "</text>\n";

    double legend_y = top + 10;
    const double legend_x = left + plot_w + 16;
    for (std::size_t i = 0; i < chart.series.size(); ++i) {
        const auto &s = chart.series[i];
        const char *color = palette[i % palette.size()];
        o << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        const std::size_t count = std::min(s.x.size(), s.y.size());
        for (std::size_t k = 0; k < count; ++k) {
            if (std::isfinite(s.x[k]) && std::isfinite(s.y[k])) {
                o << fixed2(px(s.x[k])) << ',' << fixed2(py(s.y[k])) << (k + 1 < count ? " " : "");
            }
        }
        o << "\"/>\n";
        if (s.markers) {
            for (std::size_t k = 0; k < count; ++k) {
                if (std::isfinite(s.x[k]) && std::isfinite(s.y[k])) {
                    o << "<circle cx=\"" << fixed2(px(s.x[k])) << "\" cy=\""
                      << fixed2(py(s.y[k])) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
                }
            }
        }
        o << "<line x1=\"" << fixed2(legend_x) << "\" y1=\"" << fixed2(legend_y) << "\" x2=\""
          << fixed2(legend_x + 24) << "\" y2=\"" << fixed2(legend_y) << "\" stroke=\"" << color
          << "\" stroke-width=\"2\"/>\n";
        o << "<text x=\"" << fixed2(legend_x + 30) << "\" y=\"" << fixed2(legend_y + 4) << "\">"
          << escape_xml(s.label) << "</text>\n";
        legend_y += 20;
    }
    if (chart.reference) {
        const std::string yy = fixed2(py(*chart.reference));
        o << "<line x1=\"" << fixed2(left) << "\" y1=\"" << yy << "\" x2=\""
          << fixed2(left + plot_w) << "\" y2=\"" << yy
          << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
        o << "<line x1=\"" << fixed2(legend_x) << "\" y1=\"" << fixed2(legend_y) << "\" x2=\""
          << fixed2(legend_x + 24) << "\" y2=\"" << fixed2(legend_y)
          << "\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n";
        o << "<text x=\"" << fixed2(legend_x + 30) << "\" y=\"" << fixed2(legend_y + 4) << "\">"
          << escape_xml(chart.reference_label + " " + tick_label(*chart.reference))
          << "</text>\n";
    }
    o << "</svg>\n";
    return o.str();
}

Chart convergence_chart(const VqaResult &r, const std::string &title) {
    Series value{"objective", {}, {}, false};
    Series best{"best so far", {}, {}, false};
    for (const auto &rec : r.trace.records) {
        const auto x = static_cast<double>(rec.cumulative_evaluations);
        value.x.push_back(x);
        value.y.push_back(rec.objective_value);
        best.x.push_back(x);
        best.y.push_back(rec.best_objective);
    }
    Chart c;
    c.title = title;
    c.x_label = "circuit evaluations";
    c.y_label = "energy";
    c.series = {value, best};
    c.reference = r.exact_energy;
    return c;
}

void write_text(const std::filesystem::path &path, const std::string &content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw Error("cannot create directory " + path.parent_path().string() + ": " +
                        ec.message());
        }
    }
    std::ofstream f(path, std::ios::binary);
    f << content;
    f.close();
    if (!f) {
        throw Error("cannot write " + path.string());
    }
}

} // namespace spinvar::cli
