#ifndef SECTORWAVE_SOLVER_HPP
#define SECTORWAVE_SOLVER_HPP

#include <string>
#include <vector>

#include "sectorwave/problem.hpp"

namespace sectorwave {

enum class SolveStatus { converged, diverged, zero_collapse, max_iterations };

std::string status_to_string(SolveStatus s);

struct SolveReport {
    SpectralField solution;
    int iterations = 0;
    Real final_residual = std::numeric_limits<Real>::infinity();
    std::vector<Real> stabilizer_history;  // |gamma_n|
    bool converged = false;
    SolveStatus status = SolveStatus::max_iterations;
    std::string method;
};

/// Stabilized fixed-point iteration u <- gamma^{q/(q-1)} K(D) F[u] with
/// gamma = <P u, u> / <F[u], u>; the unique exponent that makes the scheme
/// locally convergent for a homogeneous nonlinearity of degree q. Multi-term
/// nonlinearities have no such stabilizer and fall back to damped Picard with
/// damping 1/2. Residuals are measured in H^s with s = residual_s.
SolveReport petviashvili_solve(const SolitaryWaveProblem& prob,
                               const SpectralField& guess, Real tol,
                               int max_iter, Real residual_s = 0.0);

/// u <- (1-damping) u + damping K(D) F[u]. Same stopping rules.
SolveReport damped_picard_solve(const SolitaryWaveProblem& prob,
                                const SpectralField& guess, Real damping,
                                Real tol, int max_iter, Real residual_s = 0.0);

/// Gaussian bump sized from the linear dispersion length; lands in the
/// attraction basin of every built-in family.
SpectralField default_initial_guess(const SolitaryWaveProblem& prob,
                                    const Grid1D& grid);

}  // namespace sectorwave

#endif
