#include "sectorwave/nonlinearity.hpp"

#include <cmath>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

// Move coefficients between grids of different size, same box: bins map by
// signed mode index, missing modes are zero, the coarse Nyquist is dropped.
ArrayXc resample_spectrum(const Grid1D& from, const ArrayXc& sp, const Grid1D& to) {
    ArrayXc out = ArrayXc::Zero(to.size());
    int keep = std::min(from.size(), to.size()) / 2;
    for (int j = -keep + 1; j < keep; ++j) {
        int bf = j >= 0 ? j : from.size() + j;
        int bt = j >= 0 ? j : to.size() + j;
        out[bt] = sp[bf];
    }
    return out;
}

}  // namespace

void Nonlinearity::validate() const {
    if (terms.empty()) throw InvalidDomain("nonlinearity has no terms");
    for (const auto& t : terms) {
        if (t.power < 2)
            throw InvalidDomain("nonlinear powers must be >= 2");
        if (t.modulus_form && t.power % 2 == 0)
            throw InvalidDomain("modulus-form terms require odd power");
    }
}

int Nonlinearity::max_power() const {
    int q = 2;
    for (const auto& t : terms) q = std::max(q, t.power);
    return q;
}

SpectralField evaluate_nonlinearity(const Nonlinearity& f, const SpectralField& u) {
    f.validate();
    const Grid1D& grid = u.grid();
    const int q = f.max_power();
    int pad_factor = (q + 1 + 1) / 2;  // ceil((q+1)/2)
    int m = grid.size();
    while (m < pad_factor * grid.size()) m *= 2;
    Grid1D fine(grid.half_length(), m);

    SpectralField u_fine =
        SpectralField::from_spectrum(fine, resample_spectrum(grid, u.spectrum(), fine));
    const ArrayXc& v = u_fine.values();

    ArrayXc w = ArrayXc::Zero(m);
    for (const auto& term : f.terms) {
        for (int i = 0; i < m; ++i) {
            Complex base = v[i];
            Complex prod(1.0, 0.0);
            if (term.modulus_form) {
                Real a = std::abs(base);
                prod = std::pow(a, term.power - 1) * base;
            } else {
                for (int p = 0; p < term.power; ++p) prod *= base;
            }
            w[i] += term.coeff * prod;
        }
    }

    SpectralField w_fine(fine, std::move(w));
    SpectralField out =
        SpectralField::from_spectrum(grid, resample_spectrum(fine, w_fine.spectrum(), grid));
    out.set_noise_warning(u.noise_warning());
    return out;
}

}  // namespace sectorwave
