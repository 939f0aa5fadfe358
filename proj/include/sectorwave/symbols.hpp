#ifndef SECTORWAVE_SYMBOLS_HPP
#define SECTORWAVE_SYMBOLS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sectorwave/types.hpp"
#include "json.hpp"

namespace sectorwave {

/// A Fourier-multiplier symbol p(k) of order m, together with its holomorphic
/// extension restricted to the sector |Im z| <= sector_aperture * (1 + |Re z|).
/// Immutable after construction; all checks below are pure functions.
struct MultiplierSymbol {
    std::string name;
    Real order_m = 0.0;
    std::function<Real(Real)> eval_real;
    /// Holomorphic extension; empty for symbols declared real-only.
    std::function<Complex(Complex)> extension;
    /// Best constant in the derivative bounds |p^(a)| <= A^{a+1} a! <k>^{m-a},
    /// when known; 0 means unknown.
    Real analytic_constant_A = 0.0;
    /// Half-aperture of the declared extension sector (infinity for entire).
    Real sector_aperture = std::numeric_limits<Real>::infinity();
    /// Distance from z to the nearest singularity of the extension, when the
    /// symbol has any (e.g. the poles of coth); empty otherwise.
    std::function<Real(Complex)> singularity_distance;
};

struct EllipticityReport {
    bool is_elliptic = false;
    Real c_lower = 0.0;   // best constant in p(k) + V - 1 >= c <k>^m
    Real witness_xi = 0.0;
    long samples = 0;
};

struct AnalyticityCheck {
    struct Violation {
        int alpha;
        Real xi;
        Real ratio;  // |p^(alpha)(xi)| / (alpha! <xi>^{m-alpha})
    };
    int max_alpha_tested = 0;
    Real fitted_A = 0.0;
    std::vector<Violation> violations;
};

/// Evaluate the holomorphic extension at z. Throws SectorViolation outside
/// the declared sector and SingularPoint too close to a known singularity;
/// ExtensionUnavailable if the symbol carries no complex evaluator.
Complex eval_complex(const MultiplierSymbol& sym, Complex z);

/// Scan (p(k)+V-1)/<k>^m over [-xi_max, xi_max] plus a geometric tail grid
/// reaching 1e4 * max(1, xi_max); the lower bound must hold for all k, so the
/// asymptotic regime is probed beyond the user window.
EllipticityReport check_g_ellipticity(const MultiplierSymbol& sym, Real V,
                                      Real xi_max, long n_samples);

/// |p^(alpha)(xi)| from a Cauchy integral over a circle of radius
/// eps' <xi> around xi (trapezoid rule, 64 points); eps' is half the
/// declared aperture clamped to 1/2 so the contour stays inside the sector.
/// Factorially growing derivatives make real-axis finite differences
/// unusable past order ~4, hence the contour route.
Real cauchy_derivative(const MultiplierSymbol& sym, Real xi, int alpha);

/// Estimate p^(alpha) for alpha <= alpha_max by Cauchy integrals around each
/// sample and fit the smallest A satisfying the derivative bounds. Entries
/// that would need A above `a_cap` are reported as violations.
AnalyticityCheck check_analytic_estimates(const MultiplierSymbol& sym,
                                          int alpha_max,
                                          const std::vector<Real>& xi_samples,
                                          Real a_cap = 1e4);

// Built-in symbol registry.
MultiplierSymbol xi_squared_symbol();
MultiplierSymbol xi_fourth_symbol();
/// k coth k + lambda, lambda > -1. Entire near 0 (removable singularity),
/// poles at i k pi for k != 0.
MultiplierSymbol ilw_symbol(Real lambda = 0.0);
/// p(k) = sum_j a_j (i k)^j; rejected unless real-valued on R.
MultiplierSymbol polynomial_symbol(const std::vector<Real>& coeffs);

using Json = nlohmann::json;

/// Build a symbol from its configuration form, e.g. {"symbol":"ilw","lambda":0.5}.
MultiplierSymbol symbol_from_config(const Json& cfg);

}  // namespace sectorwave

#endif
