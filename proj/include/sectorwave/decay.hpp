#ifndef SECTORWAVE_DECAY_HPP
#define SECTORWAVE_DECAY_HPP

#include "sectorwave/field.hpp"

namespace sectorwave {

/// Exponential envelope |u(x)| <= C e^{-c |x|} fitted on the tails.
struct DecayFit {
    Real c = 0.0;
    Real C = 0.0;
    Real r_squared = 0.0;
    Real window_lo = 0.0;
    Real window_hi = 0.0;
};

/// Least-squares fit of log|u| against |x| on both tails of the window
/// |x| in [window_fraction * L, 0.9 L]; samples below the noise floor are
/// excluded. Throws BelowNoiseFloor when nothing in the window is usable and
/// NonDecaying when the slope is nonnegative or the log-linear model fails
/// to fit (algebraic decay shows up as strong curvature, r^2 < 0.95).
DecayFit fit_decay(const SpectralField& u, Real window_fraction);

struct StripWidthEstimate {
    Real width = 0.0;
    bool entire = false;  // decay rate keeps growing with |k|: no finite singularity
    Real r_squared = 0.0;
    Real k_lo = 0.0;
    Real k_hi = 0.0;
};

/// Distance from the real axis to the nearest singularity, read off the
/// asymptotic exponential decay rate of |u^(k)| on the largest trusted
/// |k| range (fitted with a log|k| correction for algebraic prefactors).
/// For entire functions the rate grows with the window; the estimate is then
/// a lower bound and `entire` is set. Throws InsufficientDynamicRange when
/// the trusted spectrum spans less than three decades.
StripWidthEstimate strip_width_from_spectrum(const SpectralField& u);

}  // namespace sectorwave

#endif
