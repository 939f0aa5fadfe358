#ifndef SECTORWAVE_PADE_HPP
#define SECTORWAVE_PADE_HPP

#include <vector>

#include "sectorwave/field.hpp"

namespace sectorwave {

/// Several denominator roots standing for one (possibly multiple)
/// singularity: a diagonal Pade approximant generically splits a double pole
/// into a tight pair whose centroid tracks the true location.
struct PoleCluster {
    Complex centroid;
    int multiplicity = 1;
    Real diameter = 0.0;
    Real residue_magnitude = 0.0;  // summed over members
};

struct PoleSet {
    std::vector<Complex> poles;            // surviving denominator roots
    std::vector<Real> residue_magnitudes;  // one per pole
    long spurious_rejected = 0;            // Froissart doublets and escapees
    std::vector<PoleCluster> clusters;     // sorted by |centroid|
};

/// Taylor coefficients u^(a)(center)/a! for a < count, summed over the
/// trusted part of the spectrum (modes below the trust cut would dominate
/// high orders with pure rounding noise).
std::vector<Complex> taylor_coefficients(const SpectralField& u, Real center,
                                         int count);

/// Diagonal [max_degree/max_degree] Pade approximant about the expansion
/// center: coefficients are rescaled by the estimated convergence radius,
/// the Toeplitz system is solved by SVD with a 1e-12 relative cutoff, and
/// denominator roots with residue below 1e-8 * max|u| are rejected as
/// Froissart doublets. Throws IllConditioned when the system is degenerate.
PoleSet pade_poles(const SpectralField& u, Real expansion_center, int max_degree);

/// True iff every pole lies strictly outside the closed sector
/// |Im z| <= epsilon (1 + |Re z|). Requires a non-empty pole list.
bool sector_containment(const PoleSet& poles, Real epsilon);

/// Wrap exact singularity locations for containment checks.
PoleSet pole_set_from_points(const std::vector<Complex>& points);

}  // namespace sectorwave

#endif
