#include "sectorwave/verify.hpp"

#include <cmath>
#include <cstdio>

#include "sectorwave/decay.hpp"
#include "sectorwave/errors.hpp"
#include "sectorwave/ledger.hpp"
#include "sectorwave/pade.hpp"
#include "sectorwave/solver.hpp"
#include "sectorwave/spectral_ops.hpp"

namespace sectorwave {

namespace {

std::string fmt(const char* pattern, double a, double b = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b);
    return buf;
}

}  // namespace

std::vector<VerifyCheck> run_verify_case(const std::string& case_name) {
    ClosedFormSolution oracle = oracle_by_name(case_name);
    const Grid1D grid = reference_grid();
    const SpectralField exact = oracle.sample(grid);
    const bool pole_type = oracle.lattice.kind == SingularityKind::pole;

    std::vector<VerifyCheck> checks;
    auto add = [&checks](const std::string& name, bool ok, std::string detail) {
        checks.push_back({name, ok, std::move(detail)});
    };

    // The sampled profile satisfies its own equation to spectral accuracy.
    Real res = residual(oracle.problem, exact, 0.0);
    add("residual_exact", res <= 1e-9, fmt("|P u - F[u]|_L2 = %.3e", res));

    // Recover the profile from a generic Gaussian guess.
    SpectralField guess = default_initial_guess(oracle.problem, grid);
    SolveReport solve = petviashvili_solve(oracle.problem, guess, 1e-11, 2000);
    if (solve.converged) {
        Real err = (solve.solution.values() - exact.values()).abs().maxCoeff();
        add("solve_matches_exact", err <= 1e-8, fmt("max |u_num - u| = %.3e", err));
    } else {
        add("solve_matches_exact", false,
            "solver status: " + status_to_string(solve.status));
    }

    DecayFit decay = fit_decay(exact, 0.05);
    Real decay_err = std::abs(decay.c - oracle.decay_rate_exact) / oracle.decay_rate_exact;
    add("decay_rate", decay_err <= 0.02,
        fmt("c = %.6f (exact %.6f)", decay.c, oracle.decay_rate_exact));

    StripWidthEstimate strip = strip_width_from_spectrum(exact);
    Real strip_err =
        std::abs(strip.width - oracle.strip_width_exact) / oracle.strip_width_exact;
    add("strip_width", !strip.entire && strip_err <= 0.05,
        fmt("width = %.6f (exact %.6f)", strip.width, oracle.strip_width_exact));

    add("decay_within_strip", decay.c <= 1.05 * strip.width,
        fmt("c = %.4f, strip = %.4f", decay.c, strip.width));

    if (pole_type) {
        PoleSet poles = pade_poles(exact, 0.0, 8);
        if (poles.clusters.empty()) {
            add("pole_location", false, "no singular clusters detected");
        } else {
            const Complex target = oracle.lattice.base;
            Real best = std::numeric_limits<Real>::infinity();
            Complex found = 0.0;
            for (const PoleCluster& c : poles.clusters) {
                Real dist = std::abs(c.centroid - target);
                if (dist < best) {
                    best = dist;
                    found = c.centroid;
                }
            }
            Real mod_err = std::abs(std::abs(found) - std::abs(target));
            Real arg_err = std::abs(std::arg(found) - std::arg(target));
            bool ok = mod_err <= 1e-2 * std::abs(target) && arg_err <= 1e-2 &&
                      best <= 0.05 * std::abs(target);
            add("pole_location", ok,
                fmt("nearest cluster at (%.6f, %.6f)", found.real(), found.imag()));

            Real min_im = std::numeric_limits<Real>::infinity();
            for (const PoleCluster& c : poles.clusters)
                min_im = std::min(min_im, std::abs(c.centroid.imag()));
            add("strip_matches_poles",
                std::abs(strip.width - min_im) <= 0.05 * min_im,
                fmt("strip = %.4f, min |Im pole| = %.4f", strip.width, min_im));

            try {
                NormLedger ledger = build_norm_ledger(
                    exact, 1.0, 15, {0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0});
                SectorEstimate sector = estimate_sector(ledger, exact);
                bool contained = sector_containment(poles, sector.epsilon);
                add("sector_excludes_poles",
                    sector.epsilon > 0.0 && sector.epsilon <= sector.epsilon_star &&
                        contained,
                    fmt("epsilon = %.4f, epsilon_star = %.4f", sector.epsilon,
                        sector.epsilon_star));
            } catch (const Inconclusive& e) {
                add("sector_excludes_poles", false,
                    std::string("sector estimate inconclusive: ") + e.reason());
            }
        }
    }
    return checks;
}

}  // namespace sectorwave
