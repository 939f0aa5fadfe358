#include "sectorwave/pade.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "sectorwave/errors.hpp"

namespace sectorwave {

namespace {

// Roots of c_0 + c_1 w + ... + c_n w^n via the companion matrix, with
// trailing near-zero coefficients deflated first. Real coefficient vectors
// go through the real Schur form, whose complex eigenvalues come in exact
// conjugate pairs.
std::vector<Complex> polynomial_roots(std::vector<Complex> coeffs) {
    Real top = 0.0;
    for (const Complex& c : coeffs) top = std::max(top, std::abs(c));
    if (top == 0.0) return {};
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-14 * top)
        coeffs.pop_back();
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n < 1) return {};

    bool real_coeffs = true;
    for (const Complex& c : coeffs)
        real_coeffs = real_coeffs && std::abs(c.imag()) <= 1e-12 * top;

    std::vector<Complex> roots(n);
    if (real_coeffs) {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i)
            companion(i, n - 1) = -(coeffs[i].real() / coeffs[n].real());
        Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
        for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
    } else {
        Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
        for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
        for (int i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / coeffs[n];
        Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
        for (int i = 0; i < n; ++i) roots[i] = solver.eigenvalues()[i];
    }
    return roots;
}

Complex eval_poly(const std::vector<Complex>& coeffs, Complex w) {
    Complex acc = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * w + *it;
    return acc;
}

Complex eval_poly_derivative(const std::vector<Complex>& coeffs, Complex w) {
    Complex acc = 0.0;
    for (std::size_t j = coeffs.size(); j-- > 1;)
        acc = acc * w + static_cast<Real>(j) * coeffs[j];
    return acc;
}

}  // namespace

std::vector<Complex> taylor_coefficients(const SpectralField& u, Real center,
                                         int count) {
    const Grid1D& grid = u.grid();
    const ArrayXc& sp = u.spectrum();
    const Real sp_max = sp.abs().maxCoeff();
    const Real inv_measure = 1.0 / (2.0 * grid.half_length());

    // High-order moments weight the spectrum by k^a, so the cut must sit at
    // the actual rounding plateau, not at a generic relative level: cutting
    // real signal biases the top coefficients, keeping noise drowns them.
    std::vector<Real> top_band;
    for (int b = 0; b < grid.size(); ++b)
        if (std::abs(grid.wavenumber(b)) >= 0.8 * grid.max_wavenumber())
            top_band.push_back(std::abs(sp[b]));
    Real plateau = 0.0;
    if (!top_band.empty()) {
        std::nth_element(top_band.begin(), top_band.begin() + top_band.size() / 2,
                         top_band.end());
        plateau = top_band[top_band.size() / 2];
    }
    const Real cut = std::max(8.0 * plateau, 8.0 * machine_eps * sp_max);

    // Running weights w_b = spectrum_b e^{i k center} (i k)^a / a!, advanced
    // order by order; c_a is their sum over the trusted modes.
    std::vector<Complex> weights;
    std::vector<Real> ks;
    for (int b = 0; b < grid.size(); ++b) {
        if (std::abs(sp[b]) < cut || b == grid.nyquist_bin()) continue;
        Real k = grid.wavenumber(b);
        weights.push_back(sp[b] * std::exp(Complex(0.0, k * center)) * inv_measure);
        ks.push_back(k);
    }

    std::vector<Complex> coeffs(count);
    for (int a = 0; a < count; ++a) {
        Complex acc = 0.0;
        for (const Complex& w : weights) acc += w;
        coeffs[a] = acc;
        for (std::size_t j = 0; j < weights.size(); ++j)
            weights[j] *= Complex(0.0, ks[j]) / static_cast<Real>(a + 1);
    }
    return coeffs;
}

PoleSet pade_poles(const SpectralField& u, Real expansion_center, int max_degree) {
    if (max_degree < 1 || max_degree > 12)
        throw InvalidDomain("max_degree must lie in [1, 12]");
    const int m = max_degree;
    std::vector<Complex> c = taylor_coefficients(u, expansion_center, 2 * m + 1);

    Real c_max = 0.0;
    for (const Complex& ck : c) c_max = std::max(c_max, std::abs(ck));
    if (!(c_max > 0.0) || !std::isfinite(c_max))
        throw IllConditioned("Taylor coefficients vanish or are not finite");

    // Real fields have real series; dropping the rounding-level imaginary
    // parts keeps the whole problem on the real manifold, so the detected
    // poles pair up exactly under conjugation.
    if (u.is_real()) {
        for (Complex& ck : c) ck = Complex(ck.real(), 0.0);
    }

    // Rescale the variable by a convergence-radius estimate so the Toeplitz
    // system works on O(1) numbers. Cauchy-Hadamard on the scale-normalized
    // upper orders: structural zeros and noise-level coefficients give large
    // root values and drop out of the minimum, and polynomial prefactors can
    // only bias the estimate low, which is the safe direction for the
    // in-disc spurious-root filter below.
    Real c_norm = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]),
                            Real(1e-300)});
    Real rho = std::numeric_limits<Real>::infinity();
    for (int a = std::max(2, m); a <= 2 * m; ++a) {
        Real mag = std::abs(c[a]) / c_norm;
        if (mag < 1e-280) continue;
        rho = std::min(rho, std::pow(mag, -1.0 / static_cast<Real>(a)));
    }
    if (!std::isfinite(rho) || rho <= 0.0) rho = 1.0;

    std::vector<Complex> d(2 * m + 1);
    Real scale_pow = 1.0;
    for (int a = 0; a < 2 * m + 1; ++a) {
        d[a] = c[a] * scale_pow;
        scale_pow *= rho;
    }

    // Denominator q(w) = 1 + q_1 w + ... + q_m w^m from the linearized
    // matching conditions sum_j q_j d_{r-j} = -d_r, r = m+1..2m.
    Eigen::MatrixXcd A(m, m);
    Eigen::VectorXcd rhs(m);
    for (int r = m + 1; r <= 2 * m; ++r) {
        for (int j = 1; j <= m; ++j) A(r - m - 1, j - 1) = d[r - j];
        rhs(r - m - 1) = -d[r];
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (!(sv(0) > 0.0) || !std::isfinite(sv(0)))
        throw IllConditioned("degenerate coefficient matrix");
    svd.setThreshold(1e-12);
    Eigen::VectorXcd q_tail = svd.solve(rhs);

    std::vector<Complex> q(m + 1);
    q[0] = 1.0;
    for (int j = 1; j <= m; ++j) {
        q[j] = q_tail(j - 1);
        // real data implies a real denominator; the solve only leaves
        // rounding-level imaginary parts behind
        if (u.is_real()) q[j] = Complex(q[j].real(), 0.0);
    }

    // Matching numerator, needed only for residues.
    std::vector<Complex> p(m + 1);
    for (int r = 0; r <= m; ++r) {
        Complex acc = 0.0;
        for (int j = 0; j <= std::min(r, m); ++j) acc += q[j] * d[r - j];
        p[r] = acc;
    }

    const Real residue_floor = 1e-8 * std::max(u.max_abs(), Real(1e-300));
    PoleSet out;
    for (Complex w : polynomial_roots(q)) {
        if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) ||
            std::abs(w) > 1e6) {
            ++out.spurious_rejected;
            continue;
        }
        // The Taylor series demonstrably converges up to the fitted radius
        // (|w| = 1 in the rescaled variable, and the slope fit errs low for
        // pole-type functions), so roots well inside it are noise artifacts.
        if (std::abs(w) < 0.85) {
            ++out.spurious_rejected;
            continue;
        }
        Complex res_w = eval_poly(p, w) / eval_poly_derivative(q, w);
        Real res_z = std::abs(res_w) * rho;
        if (res_z < residue_floor) {
            ++out.spurious_rejected;  // Froissart doublet
            continue;
        }
        out.poles.push_back(Complex(expansion_center, 0.0) + rho * w);
        out.residue_magnitudes.push_back(res_z);
    }

    // Greedy clustering by proximity, nearest-to-origin first.
    std::vector<std::size_t> order(out.poles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::abs(out.poles[a]) < std::abs(out.poles[b]);
    });
    std::vector<bool> used(out.poles.size(), false);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        std::size_t i = order[oi];
        if (used[i]) continue;
        std::vector<std::size_t> members = {i};
        used[i] = true;
        Real radius = 0.1 * (1.0 + std::abs(out.poles[i]));
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            std::size_t j = order[oj];
            if (used[j]) continue;
            if (std::abs(out.poles[j] - out.poles[i]) <= radius) {
                members.push_back(j);
                used[j] = true;
            }
        }
        PoleCluster cl;
        Complex sum = 0.0;
        for (std::size_t j : members) {
            sum += out.poles[j];
            cl.residue_magnitude += out.residue_magnitudes[j];
        }
        cl.centroid = sum / static_cast<Real>(members.size());
        cl.multiplicity = static_cast<int>(members.size());
        for (std::size_t a : members)
            for (std::size_t b : members)
                cl.diameter = std::max(cl.diameter, std::abs(out.poles[a] - out.poles[b]));
        out.clusters.push_back(cl);
    }
    std::sort(out.clusters.begin(), out.clusters.end(),
              [](const PoleCluster& a, const PoleCluster& b) {
                  return std::abs(a.centroid) < std::abs(b.centroid);
              });
    return out;
}

bool sector_containment(const PoleSet& poles, Real epsilon) {
    if (poles.poles.empty())
        throw InvalidDomain("containment check requires a non-empty pole list");
    for (Complex z : poles.poles)
        if (std::abs(z.imag()) <= epsilon * (1.0 + std::abs(z.real())))
            return false;
    return true;
}

PoleSet pole_set_from_points(const std::vector<Complex>& points) {
    PoleSet out;
    out.poles = points;
    out.residue_magnitudes.assign(points.size(), 0.0);
    return out;
}

}  // namespace sectorwave
