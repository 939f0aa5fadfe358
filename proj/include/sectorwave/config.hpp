#ifndef SECTORWAVE_CONFIG_HPP
#define SECTORWAVE_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "sectorwave/problem.hpp"

namespace sectorwave {

struct SolverParams {
    std::string method = "petviashvili";  // or "picard"
    Real tol = 1e-10;
    int max_iter = 1000;
    Real damping = 0.5;
};

struct ProblemSetup {
    SolitaryWaveProblem problem;
    Grid1D grid{40.0 * M_PI, 4096};
    SolverParams solver;
};

struct LedgerParams {
    Real s = 1.0;
    int N_max = 15;
    std::vector<Real> epsilons = {0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0};
};

struct DiagnosticsFlags {
    bool decay = true;
    bool strip = true;
    bool ledger = true;
    bool poles = true;
    bool sector = true;
};

struct PadeParams {
    Real center = 0.0;
    int max_degree = 8;
};

/// Full run description. Parsing is strict: unknown keys anywhere are a
/// ConfigError, so typos cannot silently fall back to defaults.
struct RunConfig {
    std::optional<ProblemSetup> problem;
    DiagnosticsFlags diagnostics;
    LedgerParams ledger;
    PadeParams pade;
    Real decay_window_fraction = 0.05;
    std::string output_dir = ".";
    long seed = 0;
};

ProblemSetup parse_problem_setup(const Json& cfg);
RunConfig parse_run_config(const Json& cfg);
RunConfig load_run_config(const std::string& path);

}  // namespace sectorwave

#endif
