#ifndef SECTORWAVE_CLOSEDFORM_HPP
#define SECTORWAVE_CLOSEDFORM_HPP

#include <functional>
#include <string>
#include <vector>

#include "sectorwave/problem.hpp"

namespace sectorwave {

enum class SingularityKind { pole, branch_point };

/// Singularities at base + k * step, k in Z, all of the same multiplicity.
struct SingularLattice {
    Complex base;
    Complex step;
    int multiplicity = 1;
    SingularityKind kind = SingularityKind::pole;

    /// The 2n lattice points nearest the origin (k = -n..n-1).
    std::vector<Complex> ring(int n) const;
    Real min_abs_imag() const;
};

/// An exact solution used as oracle: profile, holomorphic extension, the
/// problem it solves, and its exact decay/singularity data.
struct ClosedFormSolution {
    std::string name;
    std::function<Complex(Real)> evaluate;
    std::function<Complex(Complex)> evaluate_complex;
    SingularLattice lattice;
    SolitaryWaveProblem problem;
    Real decay_rate_exact = 0.0;
    Real strip_width_exact = 0.0;
    Real amplitude_at_zero = 0.0;

    SpectralField sample(const Grid1D& grid) const;
};

/// u(x) = ((l+1)(l+2)(V-1)/2)^{1/l} cosh^{-2/l}(sqrt(V-1) l x / 2), the
/// travelling-wave profile of the generalized KdV equation. For l > 2 the
/// singularities are branch points (fractional cosh power), flagged so the
/// rational-approximation tests skip them. Throws InvalidSpeed for V <= 1.
ClosedFormSolution gkdv_soliton(int l, Real V);

/// u(x) = 3 cosh^{-2}(e^{-i theta} x / 2), solving the rotated profile
/// equation -u'' + e^{-2 i theta} u = (e^{-2 i theta}/2) u^2; its poles sit
/// on the rays arg z = theta +- pi/2. Throws CriticalAngle at |theta| = pi/2.
ClosedFormSolution sharpness_solution(Real theta);

/// u(x) = sqrt(2) sech(x), the ground state of -u'' + u = u^3.
ClosedFormSolution nls_ground_state();

/// Named oracle registry used by the verify command.
const std::vector<std::string>& oracle_names();
ClosedFormSolution oracle_by_name(const std::string& name);

/// Reference grid every oracle must satisfy its residual bound on.
Grid1D reference_grid();

}  // namespace sectorwave

#endif
