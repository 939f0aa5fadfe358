#include <doctest.h>

#include <random>

#include "oracle_utils.hpp"
#include "sectorwave/closedform.hpp"
#include "sectorwave/errors.hpp"
#include "sectorwave/spectral_ops.hpp"

using namespace sectorwave;

namespace {

SpectralField random_smooth_field(const Grid1D& grid, std::mt19937& rng) {
    // Band-limited random field: a handful of low modes with random phases.
    std::uniform_real_distribution<Real> amp(-1.0, 1.0);
    ArrayXc spec = ArrayXc::Zero(grid.size());
    for (int j = 0; j <= 24; ++j) {
        Complex coeff(amp(rng), amp(rng));
        int b_pos = j;
        int b_neg = j == 0 ? 0 : grid.size() - j;
        spec[b_pos] += coeff;
        spec[b_neg] += std::conj(coeff);
    }
    return SpectralField::from_spectrum(grid, std::move(spec));
}

}  // namespace

TEST_CASE("grid stores dx * N = 2L exactly and symmetric wavenumbers") {
    Grid1D grid(40.0 * M_PI, 4096);
    CHECK(grid.dx() * grid.size() == 2.0 * grid.half_length());
    for (int b = 1; b < grid.size() / 2; ++b)
        CHECK(grid.wavenumber(b) == -grid.wavenumber(grid.size() - b));
    CHECK(grid.wavenumber(grid.nyquist_bin()) < 0.0);  // Nyquist carries -N/2
    CHECK_THROWS_AS(Grid1D(10.0, 1000), InvalidDomain);  // not a power of two
    CHECK_THROWS_AS(Grid1D(-1.0, 256), InvalidDomain);
}

TEST_CASE("transform round trip and Parseval on random fields") {
    Grid1D grid(20.0 * M_PI, 512);
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 100; ++trial) {
        SpectralField f = random_smooth_field(grid, rng);
        Real norm = f.l2_norm();
        SpectralField back = SpectralField::from_spectrum(grid, ArrayXc(f.spectrum()));
        Real err = std::sqrt((back.values() - f.values()).abs2().sum() * grid.dx());
        CHECK(err <= 1e-12 * norm);
        CHECK(f.parseval_gap() <= 1e-10);
    }
}

TEST_CASE("plain L2 norm of the unit Gaussian is pi^(1/4)") {
    Grid1D grid(40.0 * M_PI, 4096);
    SpectralField g = SpectralField::from_real_function(
        grid, [](Real x) { return std::exp(-x * x / 2.0); });
    // integral of exp(-x^2) is sqrt(pi)
    CHECK(sobolev_norm(g, 0.0) == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-10));
    CHECK(weighted_sobolev_norm(g, 0, 0, 0.0) ==
          doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-10));
    CHECK(g.l2_norm() == doctest::Approx(std::pow(M_PI, 0.25)).epsilon(1e-10));
}

TEST_CASE("spectral differentiation") {
    Grid1D grid(16.0 * M_PI, 1024);
    SpectralField f = SpectralField::from_real_function(
        grid, [](Real x) { return std::sin(x); });

    SUBCASE("sin is an eigenfunction of d^2") {
        SpectralField d2 = differentiate(f, 2);
        Real worst = 0.0;
        for (int i = 0; i < grid.size(); ++i)
            worst = std::max(worst,
                             std::abs(d2.values()[i] + std::sin(grid.x(i))));
        CHECK(worst <= 1e-10);
    }

    SUBCASE("order zero is the identity") {
        SpectralField d0 = differentiate(f, 0);
        CHECK((d0.values() - f.values()).abs().maxCoeff() == 0.0);
    }

    SUBCASE("negative order is rejected") {
        CHECK_THROWS_AS(differentiate(f, -1), InvalidDomain);
    }
}

TEST_CASE("derivative of the soliton profile matches its closed form") {
    Grid1D grid = reference_grid();
    SpectralField u = SpectralField::from_real_function(grid, [](Real x) {
        Real s = 1.0 / std::cosh(x / 2.0);
        return 3.0 * s * s;
    });
    SpectralField du = differentiate(u, 1);
    Real worst = 0.0;
    for (int i = 0; i < grid.size(); ++i) {
        Real x = grid.x(i);
        if (std::abs(x) > grid.half_length() / 2.0) continue;
        Real s = 1.0 / std::cosh(x / 2.0);
        Real exact = -3.0 * s * s * std::tanh(x / 2.0);
        worst = std::max(worst, std::abs(du.values()[i].real() - exact));
    }
    CHECK(worst <= 1e-8);
}

TEST_CASE("multiplier application") {
    Grid1D grid(16.0 * M_PI, 1024);
    SpectralField f = SpectralField::from_real_function(
        grid, [](Real x) { return std::sin(x); });

    SUBCASE("p(k) = k^2 fixes a unit-frequency mode") {
        // rounding-level off-mode content is amplified by k_max^2
        SpectralField out = apply_multiplier(f, xi_squared_symbol());
        CHECK((out.values() - f.values()).abs().maxCoeff() <= 1e-11);
    }

    SUBCASE("constant symbol is the identity") {
        SpectralField out = apply_multiplier(f, polynomial_symbol({1.0}));
        CHECK((out.values() - f.values()).abs().maxCoeff() <= 1e-13);
    }

    SUBCASE("output norm bounded by the largest multiplier value") {
        MultiplierSymbol ilw = ilw_symbol(0.0);
        SpectralField g = SpectralField::from_real_function(
            grid, [](Real x) { return std::exp(-2.0 * x * x); });
        SpectralField out = apply_multiplier(g, ilw);
        Real p_max = 0.0;
        for (int b = 0; b < grid.size(); ++b)
            p_max = std::max(p_max, std::abs(ilw.eval_real(grid.wavenumber(b))));
        CHECK(out.l2_norm() <= p_max * g.l2_norm() * (1.0 + 1e-12));
    }
}

TEST_CASE("multiplier action agrees with direct quadrature of the transform") {
    // For a Gaussian the transform is known in closed form, so p(D)u can be
    // computed by straight numerical quadrature of (1/2pi) int p(k) u^(k)
    // e^{ikx} dk, entirely off the FFT path.
    Grid1D grid(16.0 * M_PI, 2048);
    const Real sigma = 0.5;
    SpectralField g = SpectralField::from_real_function(grid, [sigma](Real x) {
        return std::exp(-x * x / (2.0 * sigma * sigma));
    });
    MultiplierSymbol ilw = ilw_symbol(0.0);
    SpectralField out = apply_multiplier(g, ilw);
    for (Real target : {0.0, 1.0, 2.0}) {
        int idx = static_cast<int>(std::lround((target + grid.half_length()) / grid.dx()));
        Real x0 = grid.x(idx);
        auto integrand = [&](Real k) {
            Real uhat = std::sqrt(2.0 * M_PI) * sigma *
                        std::exp(-sigma * sigma * k * k / 2.0);
            return ilw.eval_real(k) * uhat * std::cos(k * x0) / (2.0 * M_PI);
        };
        Real expected = oracle::trapezoid(integrand, 60.0, 200000);
        CHECK(out.values()[idx].real() == doctest::Approx(expected).epsilon(1e-8));
    }
}

TEST_CASE("inverse kernel") {
    Grid1D grid(16.0 * M_PI, 1024);

    SUBCASE("single mode is divided by p(k) + V - 1") {
        ArrayXc spec = ArrayXc::Zero(grid.size());
        spec[16] = 1.0;  // k = 1
        SpectralField f = SpectralField::from_spectrum(grid, std::move(spec));
        SpectralField out = apply_inverse_kernel(f, xi_squared_symbol(), 2.0);
        CHECK(std::abs(out.spectrum()[16] - Complex(0.5, 0.0)) <= 1e-14);
    }

    SUBCASE("inverse of the forward multiplier plus shift") {
        std::mt19937 rng(7);
        SpectralField f = random_smooth_field(grid, rng);
        const Real V = 2.0;
        MultiplierSymbol p = xi_squared_symbol();
        SpectralField pf = apply_spectral_weight(f, [&p, V](Real k) {
            return Complex(p.eval_real(k) + V - 1.0, 0.0);
        });
        SpectralField back = apply_inverse_kernel(pf, p, V);
        Real err = std::sqrt((back.values() - f.values()).abs2().sum() * grid.dx());
        CHECK(err <= 1e-12 * f.l2_norm());
    }

    SUBCASE("soliton relation -u'' + u = u^2/2 via the kernel") {
        Grid1D ref = reference_grid();
        SpectralField u = SpectralField::from_real_function(ref, [](Real x) {
            Real s = 1.0 / std::cosh(x / 2.0);
            return 3.0 * s * s;
        });
        // (k^2 + 1) u^ must be the transform of u^2/2
        SpectralField lhs = apply_spectral_weight(
            u, [](Real k) { return Complex(k * k + 1.0, 0.0); });
        SpectralField rhs(ref, ArrayXc(0.5 * u.values() * u.values()));
        Real resid = std::sqrt((lhs.values() - rhs.values()).abs2().sum() * ref.dx());
        CHECK(resid <= 1e-8);
        SpectralField back = apply_inverse_kernel(rhs, xi_squared_symbol(), 2.0);
        CHECK((back.values() - u.values()).abs().maxCoeff() <= 1e-8);
    }

    SUBCASE("vanishing denominator is rejected") {
        SpectralField f = SpectralField::from_real_function(
            grid, [](Real x) { return std::exp(-x * x); });
        CHECK_THROWS_AS(apply_inverse_kernel(f, xi_squared_symbol(), 1.0),
                        NotElliptic);
    }
}

TEST_CASE("differentiation commutes with multiplier application") {
    Grid1D grid(20.0 * M_PI, 512);
    std::mt19937 rng(99);
    MultiplierSymbol p = ilw_symbol(0.3);
    for (int trial = 0; trial < 10; ++trial) {
        SpectralField f = random_smooth_field(grid, rng);
        SpectralField a = differentiate(apply_multiplier(f, p), 1);
        SpectralField b = apply_multiplier(differentiate(f, 1), p);
        Real scale = std::max(a.l2_norm(), Real(1));
        CHECK((a.values() - b.values()).abs().maxCoeff() <= 1e-11 * scale);
    }
}

TEST_CASE("weighted Sobolev norm against fine-grid quadrature") {
    Grid1D grid = reference_grid();
    SpectralField u = SpectralField::from_real_function(
        grid, [](Real x) { return oracle::soliton_derivative(0, x); });

    SUBCASE("alpha=0 beta=0 collapses to the plain L2 norm") {
        CHECK(weighted_sobolev_norm(u, 0, 0, 0.0) ==
              doctest::Approx(u.l2_norm()).epsilon(1e-13));
    }

    SUBCASE("alpha=1 beta=2 s=1 matches 10x finer quadrature") {
        // ||g||_{H^1}^2 = ||g||^2 + ||g'||^2 with g = x^2 u', all evaluated
        // from the symbolic tanh-polynomial derivative on a 10x finer grid.
        auto g = [](Real x) { return x * x * oracle::soliton_derivative(1, x); };
        auto gp = [](Real x) {
            return 2.0 * x * oracle::soliton_derivative(1, x) +
                   x * x * oracle::soliton_derivative(2, x);
        };
        Real l = grid.half_length();
        Real ref = std::sqrt(
            oracle::trapezoid([&](Real x) { return g(x) * g(x); }, l, 40960) +
            oracle::trapezoid([&](Real x) { return gp(x) * gp(x); }, l, 40960));
        CHECK(weighted_sobolev_norm(u, 1, 2, 1.0) ==
              doctest::Approx(ref).epsilon(1e-6));
    }

    SUBCASE("norm is monotone in s") {
        Real n0 = weighted_sobolev_norm(u, 1, 1, 0.0);
        Real n1 = weighted_sobolev_norm(u, 1, 1, 1.0);
        Real n2 = weighted_sobolev_norm(u, 1, 1, 2.0);
        CHECK(n0 <= n1);
        CHECK(n1 <= n2);
    }

    SUBCASE("grid refinement changes the value below 1e-7 relative") {
        Grid1D coarse(40.0 * M_PI, 2048);
        SpectralField uc = SpectralField::from_real_function(
            coarse, [](Real x) { return oracle::soliton_derivative(0, x); });
        Real a = weighted_sobolev_norm(uc, 1, 2, 1.0);
        Real b = weighted_sobolev_norm(u, 1, 2, 1.0);
        CHECK(std::abs(a - b) <= 1e-7 * b);
    }

    SUBCASE("fat-tailed fields are rejected") {
        SpectralField fat = SpectralField::from_real_function(
            grid, [](Real x) { return 1.0 / (1.0 + x * x); });
        CHECK_THROWS_AS(weighted_sobolev_norm(fat, 0, 1, 0.0), TruncationError);
    }
}

TEST_CASE("repeated differentiation raises the noise warning") {
    Grid1D grid = reference_grid();
    SpectralField u = SpectralField::from_real_function(
        grid, [](Real x) { return oracle::soliton_derivative(0, x); });
    SpectralField high = differentiate(u, 18);
    CHECK(high.noise_warning());
    CHECK(high.noise_floor() > u.noise_floor());
    SpectralField low = differentiate(u, 1);
    CHECK(!low.noise_warning());
}

TEST_CASE("weighted bracket-norm diagnostic") {
    Grid1D grid(40.0 * M_PI, 4096);
    SpectralField g = SpectralField::from_real_function(
        grid, [](Real x) { return std::exp(-x * x / 2.0); });
    // ||<x>^sigma exp(-x^2/2)||^2 = int (1+x^2) e^{-x^2} = sqrt(pi) * 3/2
    Real expected = std::sqrt(std::sqrt(M_PI) * 1.5);
    CHECK(weighted_l2_norm(g, 1.0) == doctest::Approx(expected).epsilon(1e-10));
}
