#include "sectorwave/solver.hpp"

#include <cmath>

#include "sectorwave/errors.hpp"
#include "sectorwave/spectral_ops.hpp"

namespace sectorwave {

namespace {

struct StepOutcome {
    SpectralField next;
    Real stabilizer;
};

// One stabilized step. gamma is complex for complex-shift problems and the
// fractional power uses the principal branch.
StepOutcome petviashvili_step(const SolitaryWaveProblem& prob,
                              const SpectralField& u, Real exponent) {
    SpectralField fu = evaluate_nonlinearity(prob.nonlinearity, u);
    SpectralField pu = apply_linear_part(prob, u);
    Complex num = inner_product(pu, u);
    Complex den = inner_product(fu, u);
    Complex gamma = num / den;
    Complex factor = std::pow(gamma, Complex(exponent, 0.0));
    SpectralField next = scaled(apply_kernel(prob, fu), factor);
    return {std::move(next), std::abs(gamma)};
}

SolveReport run_iteration(const SolitaryWaveProblem& prob,
                          const SpectralField& guess, Real tol, int max_iter,
                          Real residual_s, bool stabilized, Real damping,
                          const std::string& method) {
    prob.nonlinearity.validate();
    if (max_iter < 1) throw InvalidDomain("max_iter must be >= 1");
    if (!(tol > 0.0)) throw InvalidDomain("tolerance must be positive");

    const int q = prob.nonlinearity.terms.front().power;
    const Real exponent = stabilized ? static_cast<Real>(q) / (q - 1) : 0.0;

    SolveReport rep{guess, 0, residual(prob, guess, residual_s), {}, false,
                    SolveStatus::max_iterations, method};
    Real best = rep.final_residual;
    SpectralField u = guess;

    for (int n = 0; n < max_iter; ++n) {
        if (u.l2_norm() < 1e-12) {
            rep.status = SolveStatus::zero_collapse;
            rep.solution = u;
            rep.iterations = n;
            return rep;
        }

        SpectralField next = u;
        if (stabilized) {
            StepOutcome step = petviashvili_step(prob, u, exponent);
            rep.stabilizer_history.push_back(step.stabilizer);
            next = std::move(step.next);
        } else {
            SpectralField picard =
                apply_kernel(prob, evaluate_nonlinearity(prob.nonlinearity, u));
            next = linear_combination(1.0 - damping, u, damping, picard);
        }

        Real res = residual(prob, next, residual_s);
        rep.solution = next;
        rep.iterations = n + 1;
        rep.final_residual = res;

        if (std::isfinite(res) && res <= tol) {
            rep.converged = true;
            rep.status = SolveStatus::converged;
            return rep;
        }
        if (!std::isfinite(res) || (n > 5 && res > 10.0 * best)) {
            rep.status = SolveStatus::diverged;
            return rep;
        }
        best = std::min(best, res);
        u = std::move(next);
    }
    return rep;
}

}  // namespace

std::string status_to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::converged: return "converged";
        case SolveStatus::diverged: return "diverged";
        case SolveStatus::zero_collapse: return "zero_collapse";
        case SolveStatus::max_iterations: return "max_iterations";
    }
    return "?";
}

SolveReport petviashvili_solve(const SolitaryWaveProblem& prob,
                               const SpectralField& guess, Real tol,
                               int max_iter, Real residual_s) {
    if (!prob.nonlinearity.homogeneous())
        return run_iteration(prob, guess, tol, max_iter, residual_s, false, 0.5,
                             "picard_fallback");
    return run_iteration(prob, guess, tol, max_iter, residual_s, true, 0.0,
                         "petviashvili");
}

SolveReport damped_picard_solve(const SolitaryWaveProblem& prob,
                                const SpectralField& guess, Real damping,
                                Real tol, int max_iter, Real residual_s) {
    if (!(damping > 0.0 && damping <= 1.0))
        throw InvalidDomain("damping must lie in (0, 1]");
    return run_iteration(prob, guess, tol, max_iter, residual_s, false, damping,
                         "picard");
}

SpectralField default_initial_guess(const SolitaryWaveProblem& prob,
                                    const Grid1D& grid) {
    Real shift = prob.family == EquationFamily::long_wave_type
                     ? (prob.V - 1.0) / prob.V
                     : prob.V - 1.0;
    shift = std::max(shift, Real(1e-3));
    const int q = prob.nonlinearity.terms.front().power;
    Real cmag = std::abs(prob.nonlinearity.terms.front().coeff);
    Real amp = std::pow(shift / std::max(cmag, Real(1e-12)),
                        1.0 / static_cast<Real>(q - 1));
    Real width = std::max(Real(1), prob.symbol.order_m) / std::sqrt(shift);
    width = std::clamp(width, 4.0 * grid.dx(), grid.half_length() / 8.0);
    return SpectralField::from_real_function(grid, [amp, width](Real x) {
        return amp * std::exp(-(x * x) / (2.0 * width * width));
    });
}

}  // namespace sectorwave
