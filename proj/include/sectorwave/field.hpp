#ifndef SECTORWAVE_FIELD_HPP
#define SECTORWAVE_FIELD_HPP

#include <functional>
#include <string>

#include "sectorwave/grid.hpp"
#include "sectorwave/types.hpp"

namespace sectorwave {

/// A function on a periodic grid held in two synchronized representations:
/// physical samples u(x_n) and continuum-normalized Fourier coefficients
/// spectrum_b ~= \int e^{-i k_b x} u(x) dx. Whichever side is stale is
/// recomputed on demand; operations never mutate their inputs.
class SpectralField {
public:
    SpectralField(const Grid1D& grid, ArrayXc physical_values);
    static SpectralField from_spectrum(const Grid1D& grid, ArrayXc spectrum);
    static SpectralField from_function(const Grid1D& grid,
                                       const std::function<Complex(Real)>& f);
    static SpectralField from_real_function(const Grid1D& grid,
                                            const std::function<Real(Real)>& f);

    const Grid1D& grid() const { return grid_; }
    const ArrayXc& values() const;
    const ArrayXc& spectrum() const;

    /// L2 norm by trapezoid quadrature (exact for periodic band-limited data).
    Real l2_norm() const;
    Real max_abs() const;
    bool is_real(Real tol = 1e-12) const;

    /// |Parseval gap| relative to the squared L2 norm.
    Real parseval_gap() const;

    /// Largest |k| carrying a coefficient above the spectral trust cut.
    Real trusted_bandwidth() const;

    /// Exact translation by an integer number of cells (index roll).
    SpectralField translated(int cells) const;

    /// Absolute noise estimate on the physical values. Fresh fields start at
    /// machine_eps * max|u|; derivative-like operations inflate it.
    Real noise_floor() const;
    void set_noise_floor(Real nf) { noise_floor_ = nf; }
    bool noise_warning() const { return noise_warning_; }
    void set_noise_warning(bool w) { noise_warning_ = w; }

    void write_csv(const std::string& path) const;
    void write_binary(const std::string& path) const;
    static SpectralField read_csv(const std::string& path);
    static SpectralField read_binary(const std::string& path);
    /// Dispatches on file extension (.csv vs anything else = binary).
    static SpectralField read(const std::string& path);

private:
    explicit SpectralField(const Grid1D& grid);

    Grid1D grid_;
    mutable ArrayXc values_;
    mutable ArrayXc spectrum_;
    mutable bool values_valid_ = false;
    mutable bool spectrum_valid_ = false;
    mutable Real noise_floor_ = -1.0;  // lazy: eps * max|u| when negative
    bool noise_warning_ = false;
};

/// a*f + b*g on a shared grid.
SpectralField linear_combination(Complex a, const SpectralField& f, Complex b,
                                 const SpectralField& g);
SpectralField scaled(const SpectralField& f, Complex a);

/// Quadrature inner product <f, g> = dx * sum f_n conj(g_n).
Complex inner_product(const SpectralField& f, const SpectralField& g);

}  // namespace sectorwave

#endif
