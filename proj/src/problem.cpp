#include "sectorwave/problem.hpp"

#include <cmath>

#include "sectorwave/errors.hpp"
#include "sectorwave/spectral_ops.hpp"

namespace sectorwave {

EquationFamily family_from_string(const std::string& s) {
    if (s == "kdv_type") return EquationFamily::kdv_type;
    if (s == "long_wave_type") return EquationFamily::long_wave_type;
    if (s == "direct") return EquationFamily::direct;
    throw ConfigError("unknown equation family: " + s);
}

std::string family_to_string(EquationFamily f) {
    switch (f) {
        case EquationFamily::kdv_type: return "kdv_type";
        case EquationFamily::long_wave_type: return "long_wave_type";
        case EquationFamily::direct: return "direct";
    }
    return "?";
}

SolitaryWaveProblem make_gkdv_problem(int l, Real V) {
    if (l < 1) throw InvalidDomain("gkdv exponent l must be >= 1");
    if (!(V > 1.0)) throw InvalidSpeed("gkdv solitary waves require V > 1");
    SolitaryWaveProblem prob;
    prob.symbol = xi_squared_symbol();
    prob.V = V;
    prob.family = EquationFamily::kdv_type;
    prob.nonlinearity.terms = {
        {l + 1, Complex(1.0 / static_cast<Real>(l + 1), 0.0), false}};
    return prob;
}

SolitaryWaveProblem make_nls_problem() {
    SolitaryWaveProblem prob;
    prob.symbol = xi_squared_symbol();
    prob.V = 2.0;
    prob.family = EquationFamily::direct;
    prob.nonlinearity.terms = {{3, Complex(1.0, 0.0), false}};
    return prob;
}

SpectralField apply_linear_part(const SolitaryWaveProblem& prob, const SpectralField& u) {
    return apply_spectral_weight(u, [&prob](Real k) { return prob.denominator(k); });
}

SpectralField apply_kernel(const SolitaryWaveProblem& prob, const SpectralField& u) {
    const Grid1D& grid = u.grid();
    for (int b = 0; b < grid.size(); ++b)
        if (std::abs(prob.denominator(grid.wavenumber(b))) < 1e-14)
            throw NotElliptic("linear part vanishes at a grid wavenumber");
    return apply_spectral_weight(u, [&prob](Real k) { return 1.0 / prob.denominator(k); });
}

Real residual(const SolitaryWaveProblem& prob, const SpectralField& u, Real s) {
    SpectralField lhs = apply_linear_part(prob, u);
    SpectralField rhs = evaluate_nonlinearity(prob.nonlinearity, u);
    return sobolev_norm(linear_combination(1.0, lhs, -1.0, rhs), s);
}

Real verify_sharpness_example(Real theta, const Grid1D& grid) {
    if (!(theta > -M_PI && theta <= M_PI))
        throw InvalidDomain("theta must lie in (-pi, pi]");
    if (std::abs(std::abs(theta) - M_PI / 2.0) < 1e-3)
        throw NearCriticalAngle("profile does not decay for |theta| near pi/2");
    if (std::abs(theta) <= M_PI / 3.0 + 1e-12 && grid.size() < 4096)
        throw InvalidDomain("grid too coarse to resolve the rotated profile "
                            "(need N >= 4096 for |theta| <= pi/3)");

    const Complex rot = std::exp(Complex(0.0, -theta));
    const Complex rot2 = rot * rot;
    SpectralField u = SpectralField::from_function(grid, [rot](Real x) {
        Complex c = std::cosh(rot * x / 2.0);
        return 3.0 / (c * c);
    });

    SpectralField upp = differentiate(u, 2);
    const ArrayXc& uv = u.values();
    const ArrayXc& uppv = upp.values();
    Real worst = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        Complex r = -uppv[i] + rot2 * uv[i] - 0.5 * rot2 * uv[i] * uv[i];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace sectorwave
