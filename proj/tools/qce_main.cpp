// Command-line front end: correlation reports, figure sweeps as CSV,
// transition scans, and the property-suite runner.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qce/analytic_s2.hpp"
#include "qce/bloch.hpp"
#include "qce/conditional.hpp"
#include "qce/correlations.hpp"
#include "qce/io.hpp"
#include "qce/parallel.hpp"
#include "qce/validate.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qce;

struct StateSelection {
    std::string state_file;
    std::string family;
    std::string params;
};

nlohmann::json params_to_json(const std::string& params) {
    nlohmann::json out = nlohmann::json::object();
    if (params.empty()) {
        return out;
    }
    std::stringstream stream(params);
    std::string item;
    while (std::getline(stream, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw domain_error("params must be comma-separated key=value pairs");
        }
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        try {
            std::size_t used = 0;
            const double number = std::stod(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument(value);
            }
            if (key == "sites" || key == "i" || key == "j" || key == "dA" || key == "dB") {
                out[key] = static_cast<int>(std::llround(number));
            } else {
                out[key] = number;
            }
        } catch (const std::invalid_argument&) {
            throw domain_error("param " + key + " has non-numeric value \"" + value + "\"");
        }
    }
    return out;
}

BipartiteState resolve_state(const StateSelection& selection) {
    if (!selection.state_file.empty()) {
        return load_state(selection.state_file);
    }
    if (!selection.family.empty()) {
        return build_family(selection.family, params_to_json(selection.params));
    }
    throw domain_error("provide either --state FILE or --family NAME");
}

EntropicFunction parse_entropy(const std::string& spec, int dim_a) {
    if (spec == "vn2") return EntropicFunction::von_neumann(2.0);
    if (spec == "vne") return EntropicFunction::von_neumann(M_E);
    if (spec == "linear") {
        // Two-qubit reporting uses the rescaled convention 2(1 - Tr rho^2).
        return EntropicFunction::linear(dim_a == 2 ? 2.0 : 1.0);
    }
    if (spec.rfind("tsallis:", 0) == 0) {
        return EntropicFunction::tsallis(std::stod(spec.substr(8)));
    }
    throw domain_error("unknown entropy \"" + spec + "\" (use vn2|vne|linear|tsallis:q)");
}

MinimizeOptions parse_mode(const std::string& mode, std::uint64_t seed) {
    MinimizeOptions options;
    options.seed = seed;
    if (mode == "projective") {
        return options;
    }
    if (mode.rfind("povm:", 0) == 0) {
        options.mode = MinimizeOptions::Mode::Povm;
        options.povm_outcomes = std::stoi(mode.substr(5));
        return options;
    }
    throw domain_error("unknown mode \"" + mode + "\" (use projective|povm:m)");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw domain_error("cannot open output file " + out_path);
    }
    out << text;
}

int cmd_report(const StateSelection& selection, const std::vector<std::string>& entropy_specs,
               const std::string& mode, const std::string& measurement_file,
               const std::string& out_path, std::uint64_t seed) {
    const BipartiteState state = resolve_state(selection);
    const int da = state.dim_a();
    const int db = state.dim_b();
    const double alpha = da == 2 && db == 2 ? 2.0 : 1.0;

    ordered_json doc;
    doc["seed"] = seed;
    doc["dA"] = da;
    doc["dB"] = db;
    doc["conventions"] = {
        {"linear_entropy", alpha == 2.0 ? "rescaled 2(1 - Tr rho^2)" : "1 - Tr rho^2"},
        {"log_base", 2}};

    std::vector<std::string> specs = entropy_specs;
    if (specs.empty()) {
        specs = {"vn2", "linear"};
    }
    MinimizeOptions options = parse_mode(mode, seed);

    doc["min_conditional"] = ordered_json::array();
    for (const std::string& spec : specs) {
        const EntropicFunction f = parse_entropy(spec, da);
        if (db != 2 && options.mode == MinimizeOptions::Mode::Projective) {
            throw domain_error("projective mode needs a qubit B; use --mode povm:m");
        }
        const MinimizationOutcome outcome = minimize_conditional_entropy(state, f, options);
        ordered_json entry;
        entry["entropy"] = f.label();
        entry["value"] = outcome.best_value;
        entry["gain"] = entropy(partial_trace(state, Subsystem::A), f) - outcome.best_value;
        if (outcome.best_direction) {
            entry["direction"] = {(*outcome.best_direction)(0), (*outcome.best_direction)(1),
                                  (*outcome.best_direction)(2)};
        }
        entry["mode"] = options.mode == MinimizeOptions::Mode::Projective ? "projective" : "povm";
        doc["min_conditional"].push_back(entry);
    }

    if (!measurement_file.empty()) {
        const Rank1Povm fixed = load_measurement(measurement_file);
        doc["fixed_measurement"] = ordered_json::array();
        for (const std::string& spec : specs) {
            const EntropicFunction f = parse_entropy(spec, da);
            const ConditionalResult result = conditional_entropy(state, fixed, f);
            doc["fixed_measurement"].push_back(
                {{"entropy", f.label()}, {"value", result.value}, {"gain", result.gain}});
        }
    }

    if (db == 2) {
        const BlochForm bloch = to_bloch(state);
        const S2MinResult s2 = s2_minimize_qudit_qubit(bloch, alpha);
        doc["analytic_s2"] = {{"lambda_max", s2.lambda_max},
                              {"s2_min", s2.s2_min},
                              {"i2_max", s2.i2_max},
                              {"alpha", s2.alpha},
                              {"degenerate", s2.degenerate}};
        if (s2.k_defined) {
            doc["analytic_s2"]["k_star"] = {s2.k_star(0), s2.k_star(1), s2.k_star(2)};
        }
        const GeometricDiscordResult gd = geometric_discord_full(bloch, alpha);
        doc["geometric_discord"] = {{"value", gd.value},
                                    {"alpha", alpha},
                                    {"k_star", {gd.k_star(0), gd.k_star(1), gd.k_star(2)}},
                                    {"degenerate", gd.degenerate}};

        MinimizeOptions discord_options = options;
        discord_options.mode = MinimizeOptions::Mode::Projective;
        doc["quantum_discord"] = {{"value", quantum_discord(state, 2.0, discord_options)},
                                  {"log_base", 2},
                                  {"minimization", "projective"}};
        if (s2.k_defined) {
            doc["purity_gain_ratio"] = {
                {"value",
                 purity_gain_ratio(state, projective_from_direction(QubitDirection(s2.k_star)))},
                {"measurement", "s2-optimal projective"}};
        }
    } else {
        doc["quantum_discord"] = {{"value", quantum_discord(state, 2.0, options)},
                                  {"log_base", 2},
                                  {"minimization", "povm"}};
    }
    doc["negativity"] = negativity(state);
    if (da == 2 && db == 2) {
        doc["concurrence"] = concurrence(state);
    }

    emit(doc.dump(2) + "\n", out_path);
    return 0;
}

int cmd_figure(const std::string& which, int resolution, const std::string& out_path,
               std::uint64_t seed) {
    if (resolution < 2) {
        throw domain_error("resolution must be at least 2");
    }
    const EntropicFunction vn = EntropicFunction::von_neumann(2.0);
    const EntropicFunction s2 = EntropicFunction::linear(2.0);

    if (which == "fig1") {
        CsvWriter csv({"w", "S2_cond_q05", "I2_q05", "S2_cond_q0", "I2_q0", "S_cond_q05",
                       "I_q05", "S_cond_q0", "I_q0"},
                      seed);
        struct Row {
            double values[9];
        };
        const auto rows = parallel_map<Row>(resolution, [&](int i) {
            const double w = static_cast<double>(i) / (resolution - 1);
            Row row{};
            row.values[0] = w;
            int slot = 1;
            for (double q : {0.5, 0.0}) {
                const std::vector<double> schmidt = {q, 1.0 - q};
                const double s2_cond = pure_plus_mixed_minimum(w, schmidt, 2, 2, s2);
                const double s2_a =
                    entropy(partial_trace(pure_plus_mixed(w, schmidt, 2, 2), Subsystem::A), s2);
                row.values[slot++] = s2_cond;
                row.values[slot++] = s2_a - s2_cond;
            }
            for (double q : {0.5, 0.0}) {
                const std::vector<double> schmidt = {q, 1.0 - q};
                const double s_cond = pure_plus_mixed_minimum(w, schmidt, 2, 2, vn);
                const double s_a =
                    entropy(partial_trace(pure_plus_mixed(w, schmidt, 2, 2), Subsystem::A), vn);
                row.values[slot++] = s_cond;
                row.values[slot++] = s_a - s_cond;
            }
            return row;
        });
        for (const Row& row : rows) {
            std::vector<std::string> cells;
            for (double v : row.values) {
                cells.push_back(format_number(v));
            }
            csv.add_row(cells);
        }
        emit(csv.str(), out_path);
        return 0;
    }

    if (which == "fig2") {
        CsvWriter csv({"theta", "S2_cond", "I2", "S_cond", "I"}, seed);
        struct Row {
            double values[5];
        };
        const auto rows = parallel_map<Row>(resolution, [&](int i) {
            const double theta = (M_PI / 2.0) * i / (resolution - 1);
            const BipartiteState state = aligned_mixture(theta);
            const BlochForm bloch = to_bloch(state);
            const S2MinResult analytic = s2_minimize_qudit_qubit(bloch, 2.0);

            MinimizeOptions options;
            options.seed = seed;
            const MinimizationOutcome vn_min = minimize_conditional_entropy(state, vn, options);
            const double s_a = entropy(partial_trace(state, Subsystem::A), vn);
            return Row{{theta, analytic.s2_min, analytic.i2_max, vn_min.best_value,
                        s_a - vn_min.best_value}};
        });
        for (const Row& row : rows) {
            std::vector<std::string> cells;
            for (double v : row.values) {
                cells.push_back(format_number(v));
            }
            csv.add_row(cells);
        }
        emit(csv.str(), out_path);
        return 0;
    }

    throw domain_error("unknown figure \"" + which + "\" (use fig1|fig2)");
}

int cmd_scan(const std::string& family, const std::string& params, const std::string& sweep_key,
             double lo, double hi, int resolution, const std::string& out_path,
             std::uint64_t seed) {
    if (resolution < 2) {
        throw domain_error("resolution must be at least 2");
    }
    nlohmann::json base = params_to_json(params);
    std::string key = sweep_key;
    if (key.empty()) {
        const std::map<std::string, std::string> defaults = {{"aligned", "theta"},
                                                             {"pure_plus_mixed", "w"},
                                                             {"x_state", "jx"},
                                                             {"xy_pair", "b"}};
        const auto it = defaults.find(family);
        if (it == defaults.end()) {
            throw domain_error("no default sweep parameter for family " + family);
        }
        key = it->second;
    }

    auto state_at = [&](double t) {
        nlohmann::json p = base;
        p[key] = t;
        return build_family(family, p);
    };
    auto x_params_at = [&](double t) {
        const BlochForm bloch = to_bloch(state_at(t));
        XStateParams xp;
        xp.r_a = bloch.r_a(2);
        xp.r_b = bloch.r_b(2);
        xp.j_x = bloch.j(0, 0);
        xp.j_y = bloch.j(1, 1);
        xp.j_z = bloch.j(2, 2);
        return xp;
    };

    struct Row {
        double param;
        XStateI2 i2;
        double discord;
    };
    const auto rows = parallel_map<Row>(resolution, [&](int i) {
        const double t = lo + (hi - lo) * i / (resolution - 1);
        const BipartiteState state = state_at(t);
        MinimizeOptions options;
        options.seed = seed;
        return Row{t, x_state_i2(x_params_at(t)), quantum_discord(state, 2.0, options)};
    });

    CsvWriter csv({"param", "axis", "i2", "discord"}, seed);
    for (const Row& row : rows) {
        std::string axis(1, axis_name(row.i2.axis));
        if (row.i2.degenerate) {
            axis += "*";
        }
        csv.add_row({format_number(row.param), axis, format_number(row.i2.i2),
                     format_number(row.discord)});
    }

    const TransitionMap s2_map =
        s2_transition_map([&](double t) { return x_params_at(t); }, lo, hi, resolution);
    for (double t : s2_map.transitions) {
        csv.add_comment("s2_axis_transition=" + format_number(t));
    }
    const TransitionMap gd_map = transition_map(
        [&](double t) {
            const GeometricDiscordResult gd = geometric_discord_full(to_bloch(state_at(t)), 2.0);
            const Eigen::Vector3d k = gd.k_star.cwiseAbs();
            if (k(0) >= k(1) && k(0) >= k(2)) return Axis::X;
            if (k(1) >= k(2)) return Axis::Y;
            return Axis::Z;
        },
        lo, hi, resolution);
    for (double t : gd_map.transitions) {
        csv.add_comment("gd_axis_transition=" + format_number(t));
    }

    emit(csv.str(), out_path);
    return 0;
}

int cmd_validate(std::uint64_t seed, int samples, double tol_scale,
                 const std::string& out_path) {
    ValidateConfig config;
    config.seed = seed;
    config.samples = samples;
    config.tolerance_scale = tol_scale;
    const auto suites = run_validation_suites(config);

    std::ostringstream out;
    out << "# seed=" << seed << " samples=" << samples << "\n";
    bool all_passed = true;
    for (const SuiteResult& suite : suites) {
        out << suite.name << ": " << suite.checks << " checks, " << suite.failures
            << " failures\n";
        for (const std::string& message : suite.messages) {
            out << "  FAIL " << message << "\n";
        }
        all_passed = all_passed && suite.passed();
    }
    out << (all_passed ? "all suites passed" : "validation FAILED") << "\n";
    emit(out.str(), out_path);
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conditional-entropy and quantum-correlation calculator for bipartite states"};
    app.require_subcommand(1);

    StateSelection selection;
    std::vector<std::string> entropy_specs;
    std::string mode = "projective";
    std::string out_path;
    std::uint64_t seed = 20240901;
    int resolution = 129;

    std::string measurement_file;
    CLI::App* report = app.add_subcommand("report", "full correlation report for one state");
    report->add_option("--state", selection.state_file, "state JSON file");
    report->add_option("--family", selection.family, "named state family");
    report->add_option("--params", selection.params, "family parameters k=v,...");
    report->add_option("--entropy", entropy_specs, "entropies: vn2|vne|linear|tsallis:q");
    report->add_option("--mode", mode, "minimization mode: projective|povm:m");
    report->add_option("--measurement", measurement_file,
                       "also evaluate this fixed measurement (JSON file)");
    report->add_option("--out", out_path, "output file (default stdout)");
    report->add_option("--seed", seed, "seed recorded in the output");

    std::string figure_name;
    CLI::App* figure = app.add_subcommand("figure", "reference sweep as CSV");
    figure->add_option("name", figure_name, "fig1|fig2")->required();
    figure->add_option("--resolution", resolution, "number of samples");
    figure->add_option("--out", out_path, "output file (default stdout)");
    figure->add_option("--seed", seed, "seed recorded in the output");

    std::string sweep_key;
    double range_lo = 0.0;
    double range_hi = 1.0;
    bool have_range = false;
    CLI::App* scan = app.add_subcommand("scan", "axis/transition scan over a family parameter");
    scan->add_option("--family", selection.family, "named state family")->required();
    scan->add_option("--params", selection.params, "fixed family parameters k=v,...");
    scan->add_option("--sweep", sweep_key, "parameter to sweep (family default otherwise)");
    auto* lo_opt = scan->add_option("--lo", range_lo, "sweep start");
    auto* hi_opt = scan->add_option("--hi", range_hi, "sweep end");
    scan->add_option("--resolution", resolution, "number of samples");
    scan->add_option("--out", out_path, "output file (default stdout)");
    scan->add_option("--seed", seed, "seed recorded in the output");

    int samples = 100;
    double tol_scale = 1.0;
    CLI::App* validate = app.add_subcommand("validate", "run the module property suites");
    validate->add_option("--seed", seed, "suite seed");
    validate->add_option("--samples", samples, "sample count per suite");
    validate->add_option("--tol-scale", tol_scale, "scale factor on pass thresholds");
    validate->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints help/diagnostic
        return code == 0 ? 0 : 2;      // malformed arguments are input errors
    }

    try {
        if (report->parsed()) {
            return cmd_report(selection, entropy_specs, mode, measurement_file, out_path, seed);
        }
        if (figure->parsed()) {
            return cmd_figure(figure_name, resolution, out_path, seed);
        }
        if (scan->parsed()) {
            have_range = lo_opt->count() > 0 || hi_opt->count() > 0;
            if (!have_range) {
                if (selection.family == "aligned") {
                    range_lo = 0.0;
                    range_hi = M_PI / 2.0;
                } else if (selection.family == "xy_pair") {
                    range_lo = 5.0;
                    range_hi = 50.0;
                }
            }
            return cmd_scan(selection.family, selection.params, sweep_key, range_lo, range_hi,
                            resolution, out_path, seed);
        }
        if (validate->parsed()) {
            return cmd_validate(seed, samples, tol_scale, out_path);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 0;
}
