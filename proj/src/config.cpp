#include "sectorwave/config.hpp"

#include <fstream>
#include <set>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

void require_keys(const Json& obj, const std::string& where,
                  const std::set<std::string>& allowed) {
    if (!obj.is_object()) throw ConfigError(where + " must be a JSON object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key))
            throw ConfigError("unknown key \"" + key + "\" in " + where);
}

template <typename T>
T get_or(const Json& obj, const std::string& key, T fallback) {
    if (!obj.contains(key)) return fallback;
    return obj.at(key).get<T>();
}

}  // namespace

ProblemSetup parse_problem_setup(const Json& cfg) {
    require_keys(cfg, "problem config",
                 {"family", "symbol", "V", "nonlinearity", "grid", "solver"});

    ProblemSetup setup;
    setup.problem.family = family_from_string(get_or<std::string>(cfg, "family", "kdv_type"));
    if (!cfg.contains("symbol")) throw ConfigError("problem config needs \"symbol\"");
    setup.problem.symbol = symbol_from_config(cfg.at("symbol"));
    if (!cfg.contains("V")) throw ConfigError("problem config needs \"V\"");
    setup.problem.V = cfg.at("V").get<Real>();

    if (setup.problem.family != EquationFamily::direct && !(setup.problem.V > 1.0))
        throw ConfigError("travelling-wave reductions require V > 1 (got V = " +
                          std::to_string(setup.problem.V) + ")");

    if (!cfg.contains("nonlinearity") || !cfg.at("nonlinearity").is_array() ||
        cfg.at("nonlinearity").empty())
        throw ConfigError("problem config needs a non-empty \"nonlinearity\" array");
    for (const Json& term_cfg : cfg.at("nonlinearity")) {
        require_keys(term_cfg, "nonlinearity term", {"l", "coeff", "modulus_form"});
        NonlinearTerm term;
        term.power = term_cfg.at("l").get<int>();
        if (term_cfg.contains("coeff")) {
            const Json& c = term_cfg.at("coeff");
            if (c.is_array() && c.size() == 2)
                term.coeff = Complex(c[0].get<Real>(), c[1].get<Real>());
            else if (c.is_number())
                term.coeff = Complex(c.get<Real>(), 0.0);
            else
                throw ConfigError("term coeff must be a number or [re, im]");
        }
        term.modulus_form = get_or(term_cfg, "modulus_form", false);
        setup.problem.nonlinearity.terms.push_back(term);
    }
    try {
        setup.problem.nonlinearity.validate();
    } catch (const InvalidDomain& e) {
        throw ConfigError(e.what());
    }

    if (cfg.contains("grid")) {
        require_keys(cfg.at("grid"), "grid config", {"L", "N"});
        setup.grid = Grid1D(cfg.at("grid").at("L").get<Real>(),
                            cfg.at("grid").at("N").get<int>());
    }
    if (cfg.contains("solver")) {
        const Json& s = cfg.at("solver");
        require_keys(s, "solver config", {"method", "tol", "max_iter", "damping"});
        setup.solver.method = get_or<std::string>(s, "method", "petviashvili");
        if (setup.solver.method != "petviashvili" && setup.solver.method != "picard")
            throw ConfigError("solver method must be petviashvili or picard");
        setup.solver.tol = get_or(s, "tol", setup.solver.tol);
        setup.solver.max_iter = get_or(s, "max_iter", setup.solver.max_iter);
        setup.solver.damping = get_or(s, "damping", setup.solver.damping);
    }
    return setup;
}

RunConfig parse_run_config(const Json& cfg) {
    require_keys(cfg, "run config",
                 {"problem", "diagnostics", "ledger_params", "pade",
                  "decay_window_fraction", "output_dir", "seed"});

    RunConfig rc;
    if (cfg.contains("problem")) rc.problem = parse_problem_setup(cfg.at("problem"));

    if (cfg.contains("diagnostics")) {
        const Json& d = cfg.at("diagnostics");
        require_keys(d, "diagnostics flags",
                     {"decay", "strip", "ledger", "poles", "sector"});
        rc.diagnostics.decay = get_or(d, "decay", true);
        rc.diagnostics.strip = get_or(d, "strip", true);
        rc.diagnostics.ledger = get_or(d, "ledger", true);
        rc.diagnostics.poles = get_or(d, "poles", true);
        rc.diagnostics.sector = get_or(d, "sector", true);
    }
    if (cfg.contains("ledger_params")) {
        const Json& lp = cfg.at("ledger_params");
        require_keys(lp, "ledger_params", {"s", "N_max", "epsilons"});
        rc.ledger.s = get_or(lp, "s", rc.ledger.s);
        rc.ledger.N_max = get_or(lp, "N_max", rc.ledger.N_max);
        if (lp.contains("epsilons"))
            rc.ledger.epsilons = lp.at("epsilons").get<std::vector<Real>>();
    }
    if (cfg.contains("pade")) {
        const Json& p = cfg.at("pade");
        require_keys(p, "pade params", {"center", "max_degree"});
        rc.pade.center = get_or(p, "center", 0.0);
        rc.pade.max_degree = get_or(p, "max_degree", 8);
    }
    rc.decay_window_fraction = get_or(cfg, "decay_window_fraction", 0.05);
    rc.output_dir = get_or<std::string>(cfg, "output_dir", ".");
    rc.seed = get_or<long>(cfg, "seed", 0);
    return rc;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    Json cfg;
    try {
        cfg = Json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    return parse_run_config(cfg);
}

}  // namespace sectorwave
