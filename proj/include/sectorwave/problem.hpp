#ifndef SECTORWAVE_PROBLEM_HPP
#define SECTORWAVE_PROBLEM_HPP

#include <optional>

#include "sectorwave/nonlinearity.hpp"
#include "sectorwave/symbols.hpp"

namespace sectorwave {

/// Which travelling-wave reduction produced the profile equation; it fixes
/// the linear denominator applied on the Fourier side.
enum class EquationFamily { kdv_type, long_wave_type, direct };

EquationFamily family_from_string(const std::string& s);
std::string family_to_string(EquationFamily f);

/// Profile equation  p(D) u + shift * u = F[u]  (kdv_type / direct, with
/// shift = V - 1) or  V p(D) u + (V-1) u = F[u]  (long_wave_type). A complex
/// shift override supports rotated model problems from the oracle library.
struct SolitaryWaveProblem {
    MultiplierSymbol symbol;
    Real V = 2.0;
    Nonlinearity nonlinearity;
    EquationFamily family = EquationFamily::kdv_type;
    std::optional<Complex> shift_override;

    Complex denominator(Real k) const {
        Real p = symbol.eval_real(k);
        if (family == EquationFamily::long_wave_type)
            return Complex(V * p + V - 1.0, 0.0);
        if (shift_override) return Complex(p, 0.0) + *shift_override;
        return Complex(p + V - 1.0, 0.0);
    }
};

/// Travelling-wave profile problem of the generalized KdV equation with
/// nonlinear exponent l >= 1: integrating u^l u_x once against the decay at
/// infinity gives p(k) = k^2 and F[u] = u^{l+1}/(l+1).
/// Throws InvalidSpeed unless V > 1.
SolitaryWaveProblem make_gkdv_problem(int l, Real V);

/// -u'' + u = u^3 (the d=1 cubic ground-state equation).
SolitaryWaveProblem make_nls_problem();

/// ||P u - F[u]||_{H^s} for the problem's linear part P.
Real residual(const SolitaryWaveProblem& prob, const SpectralField& u, Real s);

/// Apply the problem's linear part (resp. its inverse) on the Fourier side.
SpectralField apply_linear_part(const SolitaryWaveProblem& prob, const SpectralField& u);
SpectralField apply_kernel(const SolitaryWaveProblem& prob, const SpectralField& u);

/// Sample u(x) = 3 cosh^{-2}(e^{-i theta} x / 2) and return the maximum
/// pointwise residual of -u'' + e^{-2 i theta} u - (e^{-2 i theta}/2) u^2,
/// evaluated spectrally. Throws NearCriticalAngle within 1e-3 of |theta| =
/// pi/2, where the profile stops decaying.
Real verify_sharpness_example(Real theta, const Grid1D& grid);

}  // namespace sectorwave

#endif
