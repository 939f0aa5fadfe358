// Command-line front end: solve solitary-wave profiles, run analyticity
// diagnostics, and drive the exact-solution verification battery.

#include <CLI11.hpp>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "sectorwave/errors.hpp"
#include "sectorwave/pade.hpp"
#include "sectorwave/report.hpp"
#include "sectorwave/verify.hpp"

namespace sw = sectorwave;
namespace fs = std::filesystem;

namespace {

enum class LogLevel { error = 0, info = 1, debug = 2 };

LogLevel log_level() {
    const char* env = std::getenv("SECTORWAVE_LOG");
    if (!env) return LogLevel::info;
    std::string v(env);
    if (v == "error") return LogLevel::error;
    if (v == "debug") return LogLevel::debug;
    return LogLevel::info;
}

void log_info(const std::string& msg) {
    if (log_level() >= LogLevel::info) std::cerr << "[info] " << msg << "\n";
}

void log_debug(const std::string& msg) {
    if (log_level() >= LogLevel::debug) std::cerr << "[debug] " << msg << "\n";
}

int fail(const std::string& msg, int code) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

sw::RunConfig load_config_or_default(const std::string& path) {
    if (path.empty()) return sw::RunConfig{};
    return sw::load_run_config(path);
}

sw::Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sw::ConfigError("cannot open config file: " + path);
    return sw::Json::parse(in);
}

sw::SolveReport run_solve(const sw::ProblemSetup& setup) {
    sw::SpectralField guess =
        sw::default_initial_guess(setup.problem, setup.grid);
    if (setup.solver.method == "picard")
        return sw::damped_picard_solve(setup.problem, guess, setup.solver.damping,
                                       setup.solver.tol, setup.solver.max_iter);
    return sw::petviashvili_solve(setup.problem, guess, setup.solver.tol,
                                  setup.solver.max_iter);
}

int cmd_solve(const std::string& config_path, const std::string& out_dir,
              long seed_override) {
    sw::Json raw;
    sw::RunConfig cfg;
    try {
        raw = read_json_file(config_path);
        cfg = sw::parse_run_config(raw);
    } catch (const sw::Error& e) {
        return fail(e.what(), 1);
    }
    if (!cfg.problem) return fail("solve requires a \"problem\" block", 1);
    if (seed_override >= 0) cfg.seed = seed_override;
    fs::path out = out_dir.empty() ? fs::path(cfg.output_dir) : fs::path(out_dir);
    fs::create_directories(out);

    sw::SolveReport rep = [&] {
        try {
            return run_solve(*cfg.problem);
        } catch (const sw::Error& e) {
            throw sw::ConfigError(e.what());
        }
    }();

    rep.solution.write_csv((out / "solution.csv").string());
    rep.solution.write_binary((out / "solution.sfb").string());
    sw::Json report = sw::solve_report_json(rep, raw, cfg.seed);
    sw::write_text_file((out / "report.json").string(), sw::dump_json_17g(report));
    log_info("solve: " + sw::status_to_string(rep.status) + " after " +
             std::to_string(rep.iterations) + " iterations, residual " +
             std::to_string(rep.final_residual));
    return rep.converged ? 0 : 2;
}

int cmd_diagnose(const std::string& config_path, const std::string& field_path,
                 const std::string& out_dir, long seed_override) {
    sw::RunConfig cfg;
    sw::SpectralField field = [&] {
        try {
            cfg = load_config_or_default(config_path);
            return sw::SpectralField::read(field_path);
        } catch (const sw::Error& e) {
            throw sw::ConfigError(e.what());
        }
    }();
    if (seed_override >= 0) cfg.seed = seed_override;
    fs::path out = out_dir.empty() ? fs::path(cfg.output_dir) : fs::path(out_dir);
    fs::create_directories(out);

    sw::DiagnosticsResult result = sw::run_diagnostics(field, cfg);
    sw::write_text_file((out / "diagnostics.json").string(),
                        sw::dump_json_17g(result.report));
    if (cfg.diagnostics.ledger) {
        sw::NormLedger ledger = sw::build_norm_ledger(
            field, cfg.ledger.s, cfg.ledger.N_max, cfg.ledger.epsilons);
        sw::write_ledger_csv(ledger, (out / "ledger.csv").string());
    }
    log_info("diagnose: report written to " + (out / "diagnostics.json").string());
    return result.inconclusive ? 3 : 0;
}

int cmd_poles(const std::string& field_path, double center, int degree,
              const std::string& out_dir) {
    sw::SpectralField field = sw::SpectralField::read(field_path);
    sw::PoleSet poles = sw::pade_poles(field, center, degree);
    sw::Json j;
    sw::Json list = sw::Json::array();
    for (sw::Complex z : poles.poles) list.push_back({z.real(), z.imag()});
    j["poles"] = list;
    j["spurious_rejected"] = poles.spurious_rejected;
    sw::Json clusters = sw::Json::array();
    for (const sw::PoleCluster& c : poles.clusters)
        clusters.push_back({{"re", c.centroid.real()},
                            {"im", c.centroid.imag()},
                            {"multiplicity", c.multiplicity},
                            {"diameter", c.diameter}});
    j["clusters"] = clusters;
    std::string text = sw::dump_json_17g(j);
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        sw::write_text_file((fs::path(out_dir) / "poles.json").string(), text);
    }
    std::cout << text;
    return 0;
}

int cmd_verify(const std::string& case_name) {
    std::vector<sw::VerifyCheck> checks = sw::run_verify_case(case_name);
    bool all = true;
    for (const auto& c : checks) {
        std::printf("%-24s %s  %s\n", c.name.c_str(), c.passed ? "pass" : "FAIL",
                    c.detail.c_str());
        all = all && c.passed;
    }
    std::printf("%s: %s\n", case_name.c_str(), all ? "pass" : "FAIL");
    return all ? 0 : 2;
}

int cmd_oracle_list() {
    for (const std::string& name : sw::oracle_names()) {
        sw::ClosedFormSolution sol = sw::oracle_by_name(name);
        std::printf("%-24s u(0) = %-10.6g decay = %-8.4g strip = %-8.4g %s\n",
                    name.c_str(), sol.amplitude_at_zero, sol.decay_rate_exact,
                    sol.strip_width_exact,
                    sol.lattice.kind == sw::SingularityKind::pole ? "poles"
                                                                  : "branch points");
    }
    return 0;
}

int cmd_sweep(const std::string& config_path, const std::string& out_dir,
              int jobs) {
    sw::Json raw = read_json_file(config_path);
    for (const auto& [key, _] : raw.items())
        if (key != "base" && key != "V_values" && key != "l_values")
            throw sw::ConfigError("unknown key \"" + key + "\" in sweep config");
    if (!raw.contains("base")) throw sw::ConfigError("sweep config needs \"base\"");
    sw::ProblemSetup base = sw::parse_problem_setup(raw.at("base"));

    std::vector<double> v_values = raw.contains("V_values")
                                       ? raw.at("V_values").get<std::vector<double>>()
                                       : std::vector<double>{base.problem.V};
    std::vector<int> l_values;
    if (raw.contains("l_values"))
        l_values = raw.at("l_values").get<std::vector<int>>();

    struct Task {
        sw::ProblemSetup setup;
        sw::Json label;
    };
    std::vector<Task> tasks;
    for (double v : v_values) {
        if (l_values.empty()) {
            sw::ProblemSetup s = base;
            s.problem.V = v;
            tasks.push_back({s, sw::Json{{"V", v}}});
        } else {
            for (int l : l_values) {
                sw::ProblemSetup s = base;
                s.problem = sw::make_gkdv_problem(l, v);
                tasks.push_back({s, sw::Json{{"V", v}, {"l", l}}});
            }
        }
    }

    fs::path out(out_dir.empty() ? "." : out_dir);
    fs::create_directories(out);

    std::vector<sw::Json> rows(tasks.size());
    std::vector<int> codes(tasks.size(), 0);
    std::atomic<std::size_t> cursor{0};
    int n_workers = std::max(1, jobs);
    std::vector<std::thread> workers;
    // Results land in slots indexed by task, so the merge order is the input
    // order regardless of scheduling.
    for (int w = 0; w < n_workers; ++w) {
        workers.emplace_back([&] {
            for (;;) {
                std::size_t i = cursor.fetch_add(1);
                if (i >= tasks.size()) return;
                sw::SolveReport rep = run_solve(tasks[i].setup);
                char name[64];
                std::snprintf(name, sizeof name, "solution_%03zu.csv", i);
                rep.solution.write_csv((out / name).string());
                sw::Json row = tasks[i].label;
                row["converged"] = rep.converged;
                row["status"] = sw::status_to_string(rep.status);
                row["iterations"] = rep.iterations;
                row["final_residual"] = rep.final_residual;
                row["amplitude_at_zero"] =
                    rep.solution.values()[rep.solution.grid().size() / 2].real();
                row["solution_file"] = name;
                rows[i] = std::move(row);
                codes[i] = rep.converged ? 0 : 2;
            }
        });
    }
    for (auto& t : workers) t.join();

    sw::Json doc = sw::Json::array();
    for (auto& r : rows) doc.push_back(std::move(r));
    sw::write_text_file((out / "sweep_results.json").string(),
                        sw::dump_json_17g(doc));
    for (int c : codes)
        if (c != 0) return 2;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pseudospectral solitary-wave solver and analyticity certifier"};
    app.require_subcommand(1);

    std::string config_path, out_dir, field_path, case_name;
    long seed = -1;
    int jobs = 1;
    double pade_center = 0.0;
    int pade_degree = 8;

    CLI::App* solve = app.add_subcommand("solve", "solve a profile equation");
    solve->add_option("--config", config_path, "run config JSON")->required();
    solve->add_option("--out", out_dir, "output directory");
    solve->add_option("--seed", seed, "seed echoed into reports");

    CLI::App* diagnose =
        app.add_subcommand("diagnose", "run analyticity diagnostics on a field");
    diagnose->add_option("field", field_path, "solution file (.csv or .sfb)")
        ->required();
    diagnose->add_option("--config", config_path, "run config JSON");
    diagnose->add_option("--out", out_dir, "output directory");
    diagnose->add_option("--seed", seed, "seed echoed into reports");

    CLI::App* poles = app.add_subcommand("poles", "locate complex singularities");
    poles->add_option("field", field_path, "solution file (.csv or .sfb)")->required();
    poles->add_option("--center", pade_center, "expansion center");
    poles->add_option("--degree", pade_degree, "diagonal approximant degree");
    poles->add_option("--out", out_dir, "output directory");

    CLI::App* verify =
        app.add_subcommand("verify", "check a closed-form case end to end");
    verify->add_option("case", case_name, "oracle case name")->required();

    CLI::App* oracle = app.add_subcommand("oracle", "exact-solution registry");
    CLI::App* oracle_list = oracle->add_subcommand("list", "list registered cases");
    oracle->require_subcommand(1);

    CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep of solves");
    sweep->add_option("--config", config_path, "sweep config JSON")->required();
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--seed", seed, "seed echoed into reports");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return cmd_solve(config_path, out_dir, seed);
        if (diagnose->parsed())
            return cmd_diagnose(config_path, field_path, out_dir, seed);
        if (poles->parsed())
            return cmd_poles(field_path, pade_center, pade_degree, out_dir);
        if (verify->parsed()) return cmd_verify(case_name);
        if (oracle->parsed() && oracle_list->parsed()) return cmd_oracle_list();
        if (sweep->parsed()) return cmd_sweep(config_path, out_dir, jobs);
    } catch (const sw::UnknownCase& e) {
        return fail(e.what(), 1);
    } catch (const sw::ConfigError& e) {
        return fail(e.what(), 1);
    } catch (const sw::IoError& e) {
        return fail(e.what(), 1);
    } catch (const sw::Error& e) {
        log_debug("unhandled domain error");
        return fail(e.what(), 1);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    return 0;
}
