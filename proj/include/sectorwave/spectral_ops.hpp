#ifndef SECTORWAVE_SPECTRAL_OPS_HPP
#define SECTORWAVE_SPECTRAL_OPS_HPP

#include <functional>

#include "sectorwave/field.hpp"
#include "sectorwave/symbols.hpp"

namespace sectorwave {

/// d^alpha/dx^alpha by multiplying trusted modes with (ik)^alpha. Modes whose
/// coefficient sits below the spectral trust cut are zeroed first: they carry
/// no signal and k^alpha would amplify their rounding noise past everything
/// else. The Nyquist mode is zeroed for odd alpha (keeps real fields real).
/// Never fails; precision loss is tracked through the field's noise floor and
/// warning flag.
SpectralField differentiate(const SpectralField& f, int alpha);

/// Diagonal action spectrum_out(k) = w(k) * spectrum_in(k).
SpectralField apply_spectral_weight(const SpectralField& f,
                                    const std::function<Complex(Real)>& w);

/// Apply the multiplier p(D): spectrum_out(k) = p(k) spectrum_in(k).
SpectralField apply_multiplier(const SpectralField& f, const MultiplierSymbol& sym);

/// Invert the linear part: spectrum_out(k) = spectrum_in(k) / (p(k) + V - 1).
/// Throws NotElliptic when a denominator magnitude drops below 1e-14.
SpectralField apply_inverse_kernel(const SpectralField& f,
                                   const MultiplierSymbol& sym, Real V);

/// ||f||_{H^s} with the normalization that reduces to the plain quadrature
/// L2 norm at s = 0.
Real sobolev_norm(const SpectralField& f, Real s);

struct WeightedNormResult {
    Real value = 0.0;
    Real noise = 0.0;  // absolute noise estimate on `value`
    bool trusted = false;
};

/// ||x^beta d^alpha f||_{H^s}: differentiate spectrally, weight by x^beta
/// physically (samples below the derivative's noise floor are zeroed so the
/// x^beta weight does not amplify pure rounding), then the <k>^s norm.
/// Throws TruncationError when the weighted function has not decayed at the
/// domain boundary.
WeightedNormResult weighted_sobolev_norm_detail(const SpectralField& f,
                                                int alpha, int beta, Real s);

Real weighted_sobolev_norm(const SpectralField& f, int alpha, int beta, Real s);

/// Diagnostic ||<x>^sigma f||_{L2}.
Real weighted_l2_norm(const SpectralField& f, Real sigma);

}  // namespace sectorwave

#endif
