#include "sectorwave/decay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

struct LinearFit {
    Real intercept = 0.0;
    Real slope = 0.0;
    Real r_squared = 0.0;
};

LinearFit fit_line(const std::vector<Real>& xs, const std::vector<Real>& ys) {
    const std::size_t n = xs.size();
    Real sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    Real det = n * sxx - sx * sx;
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / det;
    fit.intercept = (sy - fit.slope * sx) / n;
    Real ss_res = 0, ss_tot = 0, mean = sy / n;
    for (std::size_t i = 0; i < n; ++i) {
        Real pred = fit.intercept + fit.slope * xs[i];
        ss_res += (ys[i] - pred) * (ys[i] - pred);
        ss_tot += (ys[i] - mean) * (ys[i] - mean);
    }
    fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

// Least squares for y = a + b x + c log(x); returns (a, b, c).
std::array<Real, 3> fit_line_logcorr(const std::vector<Real>& xs,
                                     const std::vector<Real>& ys) {
    Eigen::MatrixXd A(xs.size(), 3);
    Eigen::VectorXd b(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        A(i, 0) = 1.0;
        A(i, 1) = xs[i];
        A(i, 2) = std::log(xs[i]);
        b(i) = ys[i];
    }
    Eigen::Vector3d sol = A.colPivHouseholderQr().solve(b);
    return {sol[0], sol[1], sol[2]};
}

}  // namespace

DecayFit fit_decay(const SpectralField& u, Real window_fraction) {
    if (!(window_fraction > 0.0 && window_fraction <= 0.45))
        throw InvalidDomain("window_fraction must lie in (0, 0.45]");

    const Grid1D& grid = u.grid();
    const ArrayXc& v = u.values();
    const Real L = grid.half_length();
    const Real lo = window_fraction * L, hi = 0.9 * L;
    const Real floor = std::max(Real(1e-13), 10.0 * u.noise_floor());

    std::vector<Real> xs[2], ys[2];
    bool any_in_window = false;
    for (int i = 0; i < grid.size(); ++i) {
        Real x = grid.x(i);
        Real ax = std::abs(x);
        if (ax < lo || ax > hi) continue;
        any_in_window = true;
        Real mag = std::abs(v[i]);
        if (mag < floor) continue;
        int side = x < 0 ? 0 : 1;
        xs[side].push_back(ax);
        ys[side].push_back(std::log(mag));
    }
    if (!any_in_window) throw InvalidDomain("decay window contains no grid points");
    if (xs[0].size() < 8 || xs[1].size() < 8)
        throw BelowNoiseFloor("tail magnitudes sit below the noise floor "
                              "throughout the fit window");

    LinearFit left = fit_line(xs[0], ys[0]);
    LinearFit right = fit_line(xs[1], ys[1]);
    if (left.slope >= 0.0 || right.slope >= 0.0)
        throw NonDecaying("tail slope is nonnegative");

    DecayFit fit;
    fit.c = 0.5 * (-left.slope - right.slope);
    fit.C = std::exp(0.5 * (left.intercept + right.intercept));
    fit.r_squared = std::min(left.r_squared, right.r_squared);
    fit.window_lo = lo;
    fit.window_hi = hi;
    if (fit.r_squared < 0.95)
        throw NonDecaying("log-linear model does not fit the tails "
                          "(decay slower than exponential)");
    return fit;
}

StripWidthEstimate strip_width_from_spectrum(const SpectralField& u) {
    const Grid1D& grid = u.grid();
    const ArrayXc& sp = u.spectrum();
    const Real sp_max = sp.abs().maxCoeff();
    const Real cut = std::max(spectral_trust_cut * sp_max,
                              std::numeric_limits<Real>::min());

    // Collect trusted (|k|, log |u^|) separately for k > 0 and k < 0; the
    // nearest singularity may differ between the upper and lower half plane.
    std::vector<Real> ks[2], logs[2];
    Real used_min = sp_max;
    for (int b = 0; b < grid.size(); ++b) {
        Real k = grid.wavenumber(b);
        if (k == 0.0 || b == grid.nyquist_bin()) continue;
        Real mag = std::abs(sp[b]);
        if (mag < cut) continue;
        int side = k < 0 ? 0 : 1;
        ks[side].push_back(std::abs(k));
        logs[side].push_back(std::log(mag));
        used_min = std::min(used_min, mag);
    }
    if (ks[0].size() < 16 || ks[1].size() < 16 || sp_max / used_min < 1e3)
        throw InsufficientDynamicRange(
            "trusted spectrum spans fewer than three decades");

    StripWidthEstimate est;
    est.width = std::numeric_limits<Real>::infinity();
    est.r_squared = 1.0;

    for (int side = 0; side < 2; ++side) {
        Real k_max = *std::max_element(ks[side].begin(), ks[side].end());
        Real k_min = *std::min_element(ks[side].begin(), ks[side].end());
        est.k_lo = k_min;
        est.k_hi = k_max;

        // Entire-function probe: the local decay rate over the lower and
        // upper halves of the trusted band should agree for a pole-type
        // spectrum but keeps growing for, say, a Gaussian.
        Real k_mid = 0.5 * (k_min + k_max);
        std::vector<Real> lo_k, lo_y, hi_k, hi_y;
        for (std::size_t i = 0; i < ks[side].size(); ++i) {
            if (ks[side][i] <= k_mid) {
                lo_k.push_back(ks[side][i]);
                lo_y.push_back(logs[side][i]);
            } else {
                hi_k.push_back(ks[side][i]);
                hi_y.push_back(logs[side][i]);
            }
        }
        if (lo_k.size() >= 8 && hi_k.size() >= 8) {
            Real slope_lo = -fit_line(lo_k, lo_y).slope;
            Real slope_hi = -fit_line(hi_k, hi_y).slope;
            if (slope_lo > 0 && slope_hi > 1.5 * slope_lo) {
                est.entire = true;
                est.width = std::min(est.width, slope_hi);
                continue;
            }
        }

        // Asymptotic slope over the top of the trusted band, with a log|k|
        // term soaking up algebraic prefactors.
        std::vector<Real> fit_k, fit_y;
        Real k_from = k_min + 0.3 * (k_max - k_min);
        for (std::size_t i = 0; i < ks[side].size(); ++i) {
            if (ks[side][i] < k_from) continue;
            fit_k.push_back(ks[side][i]);
            fit_y.push_back(logs[side][i]);
        }
        auto [a, b, c] = fit_line_logcorr(fit_k, fit_y);
        (void)a;
        (void)c;
        Real width = -b;
        if (!(width > 0.0))
            throw InsufficientDynamicRange("spectrum does not decay over the "
                                           "trusted band");
        est.width = std::min(est.width, width);
        est.r_squared = std::min(est.r_squared, fit_line(fit_k, fit_y).r_squared);
    }
    return est;
}

}  // namespace sectorwave
