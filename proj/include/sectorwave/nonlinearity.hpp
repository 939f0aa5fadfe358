#ifndef SECTORWAVE_NONLINEARITY_HPP
#define SECTORWAVE_NONLINEARITY_HPP

#include <vector>

#include "sectorwave/field.hpp"

namespace sectorwave {

/// One term of the nonlinearity: coeff * u^power, or coeff * |u|^{power-1} u
/// when modulus_form (power must then be odd).
struct NonlinearTerm {
    int power = 2;
    Complex coeff = 1.0;
    bool modulus_form = false;
};

struct Nonlinearity {
    std::vector<NonlinearTerm> terms;

    /// Throws InvalidDomain unless every power is >= 2 and modulus-form
    /// powers are odd.
    void validate() const;

    bool homogeneous() const { return terms.size() == 1; }
    int max_power() const;
};

/// Evaluate F[u] with the products formed on a grid zero-padded by
/// ceil((q+1)/2), q = max power, so no aliased mode survives truncation.
SpectralField evaluate_nonlinearity(const Nonlinearity& f, const SpectralField& u);

}  // namespace sectorwave

#endif
