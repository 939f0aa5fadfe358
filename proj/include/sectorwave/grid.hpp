#ifndef SECTORWAVE_GRID_HPP
#define SECTORWAVE_GRID_HPP

#include <cmath>

#include "sectorwave/errors.hpp"
#include "sectorwave/types.hpp"

namespace sectorwave {

/// Uniform periodic grid on [-L, L) with a power-of-two point count.
/// Wavenumbers follow FFT bin order: bin b holds mode j = b for b < N/2 and
/// j = b - N otherwise, with k_j = pi j / L.
class Grid1D {
public:
    Grid1D(Real half_length_L, int n_points)
        : L_(half_length_L), n_(n_points) {
        if (!(L_ > 0.0)) throw InvalidDomain("grid half-length must be positive");
        if (n_ < 4 || (n_ & (n_ - 1)) != 0)
            throw InvalidDomain("grid point count must be a power of two >= 4");
        dx_ = 2.0 * L_ / static_cast<Real>(n_);
    }

    Real half_length() const { return L_; }
    int size() const { return n_; }
    Real dx() const { return dx_; }
    Real dk() const { return M_PI / L_; }

    Real x(int i) const { return -L_ + dx_ * static_cast<Real>(i); }

    /// Signed mode index for FFT bin b, in [-N/2, N/2).
    int mode(int b) const { return b < n_ / 2 ? b : b - n_; }
    Real wavenumber(int b) const { return dk() * static_cast<Real>(mode(b)); }
    int nyquist_bin() const { return n_ / 2; }
    Real max_wavenumber() const { return dk() * static_cast<Real>(n_ / 2); }

    ArrayXr points() const {
        ArrayXr xs(n_);
        for (int i = 0; i < n_; ++i) xs[i] = x(i);
        return xs;
    }

    ArrayXr wavenumbers() const {
        ArrayXr ks(n_);
        for (int b = 0; b < n_; ++b) ks[b] = wavenumber(b);
        return ks;
    }

    bool operator==(const Grid1D& o) const { return L_ == o.L_ && n_ == o.n_; }
    bool operator!=(const Grid1D& o) const { return !(*this == o); }

private:
    Real L_;
    int n_;
    Real dx_;
};

}  // namespace sectorwave

#endif
