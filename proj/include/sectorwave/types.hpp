#ifndef SECTORWAVE_TYPES_HPP
#define SECTORWAVE_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace sectorwave {

using Real = double;
using Complex = std::complex<Real>;
using ArrayXr = Eigen::ArrayXd;
using ArrayXc = Eigen::ArrayXcd;

constexpr Real machine_eps = std::numeric_limits<Real>::epsilon();

/// Relative magnitude below which a Fourier mode is considered rounding noise
/// and excluded from derivative/bandwidth computations.
constexpr Real spectral_trust_cut = 1e-13;

/// <x> = sqrt(1 + x^2), the standard Japanese bracket.
inline Real bracket(Real x) { return std::sqrt(1.0 + x * x); }

}  // namespace sectorwave

#endif
