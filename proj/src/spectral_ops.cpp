#include "sectorwave/spectral_ops.hpp"

#include <cmath>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

// Integer power of ik without drifting through polar form.
Complex ik_power(Real k, int alpha) {
    Complex ik(0.0, k);
    Complex acc(1.0, 0.0);
    for (int a = 0; a < alpha; ++a) acc *= ik;
    return acc;
}

}  // namespace

SpectralField differentiate(const SpectralField& f, int alpha) {
    if (alpha < 0) throw InvalidDomain("derivative order must be nonnegative");
    if (alpha == 0) return f;

    const Grid1D& grid = f.grid();
    const ArrayXc& sp = f.spectrum();
    const Real sp_max = sp.abs().maxCoeff();
    const Real cut = spectral_trust_cut * sp_max;

    ArrayXc out(grid.size());
    Real k_eff = 0.0;
    for (int b = 0; b < grid.size(); ++b) {
        Real k = grid.wavenumber(b);
        bool drop = std::abs(sp[b]) < cut || (alpha % 2 == 1 && b == grid.nyquist_bin());
        if (drop) {
            out[b] = 0.0;
        } else {
            out[b] = ik_power(k, alpha) * sp[b];
            k_eff = std::max(k_eff, std::abs(k));
        }
    }

    SpectralField g = SpectralField::from_spectrum(grid, std::move(out));
    // Data-driven floor eps * k_eff^alpha * max|f|: identical fields get
    // identical floors (and hence identical trust decisions) regardless of
    // how they were produced.
    Real amplification = std::pow(std::max(k_eff, Real(1)), alpha);
    g.set_noise_floor(machine_eps * f.max_abs() * amplification);

    // Band-limit sanity: spectral mass in the top eighth of |k| should be
    // negligible, otherwise the derivative is grid-limited rather than
    // function-limited.
    Real total = sp.abs2().sum();
    Real tail = 0.0;
    for (int b = 0; b < grid.size(); ++b)
        if (std::abs(grid.wavenumber(b)) >= 0.875 * grid.max_wavenumber())
            tail += std::norm(sp[b]);
    bool warn = f.noise_warning();
    if (total > 0.0 && tail > 1e-8 * total) warn = true;
    if (machine_eps * amplification > 1e-8) warn = true;
    g.set_noise_warning(warn);
    return g;
}

SpectralField apply_spectral_weight(const SpectralField& f,
                                    const std::function<Complex(Real)>& w) {
    const Grid1D& grid = f.grid();
    const ArrayXc& sp = f.spectrum();
    ArrayXc out(grid.size());
    for (int b = 0; b < grid.size(); ++b) out[b] = w(grid.wavenumber(b)) * sp[b];
    SpectralField g = SpectralField::from_spectrum(grid, std::move(out));
    g.set_noise_floor(f.noise_floor());
    g.set_noise_warning(f.noise_warning());
    return g;
}

SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& sym) {
    return apply_spectral_weight(
        f, [&sym](Real k) { return Complex(sym.eval_real(k), 0.0); });
}

SpectralField apply_inverse_kernel(const SpectralField& f,
                                   const MultiplierSymbol& sym, Real V) {
    const Grid1D& grid = f.grid();
    for (int b = 0; b < grid.size(); ++b) {
        Real den = sym.eval_real(grid.wavenumber(b)) + V - 1.0;
        if (std::abs(den) < 1e-14)
            throw NotElliptic("kernel denominator vanishes at k = " +
                              std::to_string(grid.wavenumber(b)));
    }
    return apply_spectral_weight(f, [&sym, V](Real k) {
        return Complex(1.0 / (sym.eval_real(k) + V - 1.0), 0.0);
    });
}

Real sobolev_norm(const SpectralField& f, Real s) {
    const Grid1D& grid = f.grid();
    const ArrayXc& sp = f.spectrum();
    Real acc = 0.0;
    for (int b = 0; b < grid.size(); ++b)
        acc += std::norm(sp[b]) * std::pow(1.0 + grid.wavenumber(b) * grid.wavenumber(b), s);
    return std::sqrt(acc / (2.0 * grid.half_length()));
}

WeightedNormResult weighted_sobolev_norm_detail(const SpectralField& f,
                                                int alpha, int beta, Real s) {
    if (alpha < 0 || beta < 0) throw InvalidDomain("alpha, beta must be nonnegative");
    const Grid1D& grid = f.grid();

    // The x^beta weight only makes sense if f has decayed inside the box.
    const ArrayXc& fv = f.values();
    Real f_max = f.max_abs();
    Real edge = 0.0;
    for (int i = 0; i < grid.size(); ++i)
        if (std::abs(grid.x(i)) >= 0.9 * grid.half_length())
            edge = std::max(edge, std::abs(fv[i]));
    if (edge > 1e-10 * std::max(Real(1), f_max))
        throw TruncationError("field has not decayed below 1e-10 at |x| >= 0.9 L");

    SpectralField g = differentiate(f, alpha);
    const ArrayXc& gv = g.values();
    // Samples below the derivative's noise floor carry no information: they
    // are zeroed before the x^beta weight (which would amplify them to
    // dominance) and ignored by the boundary check (for beta = 0 they stay
    // in the norm, where they are harmless, but must not fake a fat tail).
    const Real noise_cut = 10.0 * g.noise_floor();

    ArrayXc h(grid.size());
    Real h_max = 0.0, h_edge = 0.0, x_active = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        Real x = grid.x(i);
        bool below_noise = std::abs(gv[i]) < noise_cut;
        if (beta > 0 && below_noise) {
            h[i] = 0.0;
            continue;
        }
        h[i] = std::pow(x, beta) * gv[i];
        if (below_noise) continue;
        h_max = std::max(h_max, std::abs(h[i]));
        x_active = std::max(x_active, std::abs(x));
        if (std::abs(x) >= 0.98 * grid.half_length())
            h_edge = std::max(h_edge, std::abs(h[i]));
    }
    if (h_max > 0.0 && h_edge > 1e-6 * h_max)
        throw TruncationError("x^beta d^alpha f has not decayed at the boundary");

    SpectralField hf(grid, std::move(h));
    WeightedNormResult res;
    res.value = sobolev_norm(hf, s);

    // Noise through the same pipeline: the mask admits samples down to
    // 10 * floor, weighted by at most x_active^beta, integrated over the
    // active region, and amplified by <k>^s on the trusted band.
    Real band = std::max(g.trusted_bandwidth(), Real(1));
    res.noise = noise_cut * std::pow(std::max(x_active, Real(1)), beta) *
                std::sqrt(2.0 * std::max(x_active, grid.dx())) *
                std::pow(bracket(band), std::max(s, Real(0)));
    res.trusted = res.value > 10.0 * res.noise;
    return res;
}

Real weighted_sobolev_norm(const SpectralField& f, int alpha, int beta, Real s) {
    return weighted_sobolev_norm_detail(f, alpha, beta, s).value;
}

Real weighted_l2_norm(const SpectralField& f, Real sigma) {
    const Grid1D& grid = f.grid();
    const ArrayXc& v = f.values();
    Real acc = 0.0;
    for (int i = 0; i < grid.size(); ++i)
        acc += std::pow(bracket(grid.x(i)), 2.0 * sigma) * std::norm(v[i]);
    return std::sqrt(acc * grid.dx());
}

}  // namespace sectorwave
