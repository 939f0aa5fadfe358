#include "sectorwave/symbols.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

bool inside_sector(Complex z, Real aperture) {
    if (std::isinf(aperture)) return true;
    return std::abs(z.imag()) <= aperture * (1.0 + std::abs(z.real())) + 1e-15;
}

// z coth z with the removable singularity at 0 handled by its Maclaurin
// series; the direct quotient loses all digits to 0/0 cancellation there.
Complex z_coth_z(Complex z) {
    if (std::abs(z) < 1e-2) {
        Complex z2 = z * z;
        return 1.0 + z2 / 3.0 - z2 * z2 / 45.0 + 2.0 * z2 * z2 * z2 / 945.0
               - z2 * z2 * z2 * z2 / 4725.0;
    }
    return z * std::cosh(z) / std::sinh(z);
}

Real coth_pole_distance(Complex z) {
    // poles of z coth z sit at i k pi, k != 0
    Real y = z.imag();
    Real k = std::round(y / M_PI);
    if (k == 0.0) k = (y >= 0.0) ? 1.0 : -1.0;
    return std::hypot(z.real(), y - k * M_PI);
}

}  // namespace

Complex eval_complex(const MultiplierSymbol& sym, Complex z) {
    if (!sym.extension)
        throw ExtensionUnavailable("symbol '" + sym.name +
                                   "' declares no complex evaluator");
    if (!inside_sector(z, sym.sector_aperture))
        throw SectorViolation("point outside the declared sector of '" + sym.name + "'");
    if (sym.singularity_distance) {
        Real d = sym.singularity_distance(z);
        if (d < 1e-9 * (1.0 + std::abs(z)))
            throw SingularPoint("evaluation at a singularity of '" + sym.name + "'");
    }
    return sym.extension(z);
}

EllipticityReport check_g_ellipticity(const MultiplierSymbol& sym, Real V,
                                      Real xi_max, long n_samples) {
    if (!(xi_max > 0.0)) throw InvalidDomain("xi_max must be positive");
    n_samples = std::max<long>(n_samples, 64);

    EllipticityReport rep;
    rep.c_lower = std::numeric_limits<Real>::infinity();

    auto probe = [&](Real xi) {
        Real ratio = (sym.eval_real(xi) + V - 1.0) / std::pow(bracket(xi), sym.order_m);
        ++rep.samples;
        if (ratio < rep.c_lower) {
            rep.c_lower = ratio;
            rep.witness_xi = xi;
        }
    };

    Real step = 2.0 * xi_max / static_cast<Real>(n_samples - 1);
    for (long i = 0; i < n_samples; ++i) probe(-xi_max + step * static_cast<Real>(i));

    // Geometric tail: the lower bound is asymptotic in nature, so probe well
    // beyond the user window on both sides.
    Real tail_end = 1e4 * std::max(Real(1), xi_max);
    for (Real xi = std::max(xi_max, Real(1)); xi <= tail_end; xi *= 1.05) {
        probe(xi);
        probe(-xi);
    }

    rep.is_elliptic = rep.c_lower > 0.0;
    return rep;
}

namespace {

constexpr int circle_points = 64;

// |p^(alpha)| for alpha = 0..alpha_max at one sample, shared contour.
std::vector<Real> cauchy_derivatives(const MultiplierSymbol& sym, Real xi,
                                     int alpha_max) {
    // Circle radius eps' <xi>, with eps' chosen so every contour point stays
    // inside the declared sector for all xi.
    const Real eps_prime = 0.5 * std::min(sym.sector_aperture, Real(1));
    const Real r = eps_prime * bracket(xi);
    std::array<Complex, circle_points> ring;
    for (int j = 0; j < circle_points; ++j) {
        Real phi = 2.0 * M_PI * static_cast<Real>(j) / circle_points;
        ring[j] = eval_complex(sym, Complex(xi + r * std::cos(phi), r * std::sin(phi)));
    }
    std::vector<Real> derivs(alpha_max + 1);
    Real factorial = 1.0;
    for (int alpha = 0; alpha <= alpha_max; ++alpha) {
        if (alpha > 0) factorial *= alpha;
        // p^(alpha)(xi) = alpha!/(2 pi i) \oint p(z)/(z-xi)^{alpha+1} dz,
        // trapezoid rule on the circle.
        Complex acc = 0.0;
        for (int j = 0; j < circle_points; ++j) {
            Real phi = 2.0 * M_PI * static_cast<Real>(j) / circle_points;
            acc += ring[j] * std::exp(Complex(0.0, -alpha * phi));
        }
        derivs[alpha] = std::abs(acc) * factorial / (circle_points * std::pow(r, alpha));
    }
    return derivs;
}

}  // namespace

Real cauchy_derivative(const MultiplierSymbol& sym, Real xi, int alpha) {
    if (alpha < 0) throw InvalidDomain("derivative order must be nonnegative");
    return cauchy_derivatives(sym, xi, alpha).back();
}

AnalyticityCheck check_analytic_estimates(const MultiplierSymbol& sym,
                                          int alpha_max,
                                          const std::vector<Real>& xi_samples,
                                          Real a_cap) {
    if (!sym.extension)
        throw ExtensionUnavailable("symbol '" + sym.name +
                                   "' declares no complex evaluator");
    if (xi_samples.empty()) throw InvalidDomain("xi_samples must be non-empty");
    if (alpha_max < 0 || alpha_max > 12)
        throw InvalidDomain("alpha_max must lie in [0, 12]");

    AnalyticityCheck check;
    check.max_alpha_tested = alpha_max;

    for (Real xi : xi_samples) {
        std::vector<Real> derivs = cauchy_derivatives(sym, xi, alpha_max);
        Real factorial = 1.0;
        for (int alpha = 0; alpha <= alpha_max; ++alpha) {
            if (alpha > 0) factorial *= alpha;
            Real bound_unit = factorial * std::pow(bracket(xi), sym.order_m - alpha);
            Real ratio = derivs[alpha] / bound_unit;
            Real needed_A = std::pow(ratio, 1.0 / (alpha + 1));
            check.fitted_A = std::max(check.fitted_A, needed_A);
            if (needed_A > a_cap)
                check.violations.push_back({alpha, xi, ratio});
        }
    }
    return check;
}

MultiplierSymbol xi_squared_symbol() {
    MultiplierSymbol s;
    s.name = "xi_squared";
    s.order_m = 2.0;
    s.eval_real = [](Real k) { return k * k; };
    s.extension = [](Complex z) { return z * z; };
    s.analytic_constant_A = 2.0;
    return s;
}

MultiplierSymbol xi_fourth_symbol() {
    MultiplierSymbol s;
    s.name = "xi_fourth";
    s.order_m = 4.0;
    s.eval_real = [](Real k) { return k * k * k * k; };
    s.extension = [](Complex z) { return z * z * z * z; };
    s.analytic_constant_A = 4.0;
    return s;
}

MultiplierSymbol ilw_symbol(Real lambda) {
    if (lambda <= -1.0)
        throw InvalidDomain("ilw symbol requires lambda > -1");
    MultiplierSymbol s;
    s.name = "ilw";
    s.order_m = 1.0;
    s.eval_real = [lambda](Real k) { return z_coth_z(Complex(k, 0.0)).real() + lambda; };
    s.extension = [lambda](Complex z) { return z_coth_z(z) + lambda; };
    // Poles at i k pi: any aperture below 0.9 keeps circles of radius
    // 0.9 <xi> clear of them for all real xi.
    s.sector_aperture = 0.9;
    s.singularity_distance = coth_pole_distance;
    return s;
}

MultiplierSymbol polynomial_symbol(const std::vector<Real>& coeffs) {
    if (coeffs.empty()) throw InvalidDomain("polynomial symbol needs coefficients");
    // p(k) = sum a_j (i k)^j must be real on R: the odd-j terms are purely
    // imaginary, so reject them unless zero.
    for (std::size_t j = 1; j < coeffs.size(); j += 2)
        if (coeffs[j] != 0.0)
            throw InvalidDomain("polynomial symbol is not real-valued on R "
                                "(odd-degree coefficient present)");
    int degree = 0;
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        if (coeffs[j] != 0.0) degree = static_cast<int>(j);

    auto horner = [coeffs](Complex z) {
        Complex iz = Complex(0.0, 1.0) * z;
        Complex acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            acc = acc * iz + *it;
        return acc;
    };
    MultiplierSymbol s;
    s.name = "poly";
    s.order_m = static_cast<Real>(degree);
    s.eval_real = [horner](Real k) { return horner(Complex(k, 0.0)).real(); };
    s.extension = horner;
    return s;
}

MultiplierSymbol symbol_from_config(const Json& cfg) {
    if (!cfg.is_object() || !cfg.contains("symbol"))
        throw ConfigError("symbol config must be an object with a \"symbol\" key");
    const std::string kind = cfg.at("symbol").get<std::string>();
    for (const auto& [key, _] : cfg.items()) {
        if (key != "symbol" && key != "lambda" && key != "coeffs")
            throw ConfigError("unknown key in symbol config: " + key);
    }
    if (kind == "xi_squared") return xi_squared_symbol();
    if (kind == "xi_fourth") return xi_fourth_symbol();
    if (kind == "ilw") return ilw_symbol(cfg.value("lambda", 0.0));
    if (kind == "poly") {
        if (!cfg.contains("coeffs"))
            throw ConfigError("poly symbol requires \"coeffs\"");
        auto coeffs = cfg.at("coeffs").get<std::vector<Real>>();
        try {
            return polynomial_symbol(coeffs);
        } catch (const InvalidDomain& e) {
            throw ConfigError(e.what());
        }
    }
    throw ConfigError("unknown symbol kind: " + kind);
}

}  // namespace sectorwave
