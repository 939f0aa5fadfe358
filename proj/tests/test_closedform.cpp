#include <doctest.h>

#include <random>

#include "sectorwave/closedform.hpp"
#include "sectorwave/decay.hpp"
#include "sectorwave/errors.hpp"

using namespace sectorwave;

TEST_CASE("gkdv soliton family") {
    SUBCASE("l=1 V=2 is the classic profile") {
        ClosedFormSolution sol = gkdv_soliton(1, 2.0);
        CHECK(sol.amplitude_at_zero == doctest::Approx(3.0));
        CHECK(std::abs(sol.evaluate(0.0) - Complex(3.0, 0.0)) <= 1e-14);
        CHECK(std::abs(sol.lattice.base - Complex(0.0, M_PI)) <= 1e-14);
        CHECK(sol.lattice.multiplicity == 2);
        CHECK(sol.lattice.kind == SingularityKind::pole);
        CHECK(sol.decay_rate_exact == doctest::Approx(1.0));
        CHECK(sol.strip_width_exact == doctest::Approx(M_PI));
        // the lattice holds i (2k+1) pi: next ring at 3 pi
        auto ring = sol.lattice.ring(2);
        CHECK(std::abs(ring[0].imag()) == doctest::Approx(M_PI));
        CHECK(std::abs(ring[1].imag()) == doctest::Approx(M_PI));
        CHECK(std::abs(ring[2].imag()) == doctest::Approx(3.0 * M_PI));
    }

    SUBCASE("l=2 V=2 has simple poles at half the height") {
        ClosedFormSolution sol = gkdv_soliton(2, 2.0);
        CHECK(sol.amplitude_at_zero == doctest::Approx(std::sqrt(6.0)));
        CHECK(sol.strip_width_exact == doctest::Approx(M_PI / 2.0));
        CHECK(sol.lattice.multiplicity == 1);
        CHECK(sol.lattice.kind == SingularityKind::pole);
    }

    SUBCASE("l=3 has branch points, not poles") {
        ClosedFormSolution sol = gkdv_soliton(3, 2.0);
        CHECK(sol.lattice.kind == SingularityKind::branch_point);
        CHECK(sol.strip_width_exact == doctest::Approx(M_PI / 3.0));
    }

    SUBCASE("l=1 V=5 doubles the decay rate and scales the peak") {
        ClosedFormSolution sol = gkdv_soliton(1, 5.0);
        CHECK(sol.amplitude_at_zero == doctest::Approx(12.0));
        CHECK(sol.decay_rate_exact == doctest::Approx(2.0));
    }

    SUBCASE("invalid speeds are rejected") {
        CHECK_THROWS_AS(gkdv_soliton(1, 1.0), InvalidSpeed);
        CHECK_THROWS_AS(gkdv_soliton(0, 2.0), InvalidDomain);
    }
}

TEST_CASE("sharpness family") {
    SUBCASE("theta = 0 coincides with the real soliton") {
        ClosedFormSolution rot = sharpness_solution(0.0);
        ClosedFormSolution real = gkdv_soliton(1, 2.0);
        Grid1D grid = reference_grid();
        SpectralField a = rot.sample(grid), b = real.sample(grid);
        CHECK((a.values() - b.values()).abs().maxCoeff() <= 1e-12);
    }

    SUBCASE("theta = pi/6 puts the pole ray at 2 pi / 3") {
        ClosedFormSolution sol = sharpness_solution(M_PI / 6.0);
        CHECK(std::arg(sol.lattice.base) ==
              doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-12));
        CHECK(std::abs(sol.lattice.base) == doctest::Approx(M_PI));
        CHECK(sol.strip_width_exact ==
              doctest::Approx(M_PI * std::sqrt(3.0) / 2.0));
    }

    SUBCASE("theta = pi/4 decays at cos(pi/4)") {
        ClosedFormSolution sol = sharpness_solution(M_PI / 4.0);
        CHECK(sol.decay_rate_exact == doctest::Approx(std::sqrt(2.0) / 2.0));
        // envelope check on the real axis far out
        Real x = 60.0;
        Real mag = std::abs(sol.evaluate(x));
        CHECK(mag <= 12.5 * std::exp(-sol.decay_rate_exact * x));
        CHECK(mag >= 11.5 * std::exp(-sol.decay_rate_exact * x));
    }

    SUBCASE("the critical angle is rejected") {
        CHECK_THROWS_AS(sharpness_solution(M_PI / 2.0), CriticalAngle);
    }
}

TEST_CASE("cubic ground state") {
    ClosedFormSolution sol = nls_ground_state();
    CHECK(std::abs(sol.evaluate(0.0)) == doctest::Approx(std::sqrt(2.0)));
    CHECK(sol.strip_width_exact == doctest::Approx(M_PI / 2.0));
    CHECK(sol.decay_rate_exact == doctest::Approx(1.0));
    Grid1D grid = reference_grid();
    CHECK(residual(sol.problem, sol.sample(grid), 0.0) <= 1e-10);
}

TEST_CASE("every registered oracle passes its own battery") {
    Grid1D grid = reference_grid();
    std::mt19937 rng(5150);
    std::uniform_real_distribution<Real> xdist(-20.0, 20.0);

    for (const std::string& name : oracle_names()) {
        CAPTURE(name);
        ClosedFormSolution sol = oracle_by_name(name);

        // profile solves its equation
        SpectralField u = sol.sample(grid);
        CHECK(residual(sol.problem, u, 0.0) <= 1e-9);

        // complex evaluator restricts to the real one
        for (int i = 0; i < 50; ++i) {
            Real x = xdist(rng);
            Complex a = sol.evaluate(x);
            Complex b = sol.evaluate_complex(Complex(x, 0.0));
            CHECK(std::abs(a - b) <= 1e-13 * (1.0 + std::abs(a)));
        }

        // fitted decay and strip width agree with the exact values
        DecayFit fit = fit_decay(u, 0.05);
        CHECK(std::abs(fit.c - sol.decay_rate_exact) <= 0.02 * sol.decay_rate_exact);
        StripWidthEstimate strip = strip_width_from_spectrum(u);
        CHECK(std::abs(strip.width - sol.strip_width_exact) <=
              0.05 * sol.strip_width_exact);

        // exact strip width is the lattice height
        CHECK(sol.strip_width_exact ==
              doctest::Approx(sol.lattice.min_abs_imag()).epsilon(1e-12));
    }
}

TEST_CASE("oracle registry") {
    CHECK_THROWS_AS(oracle_by_name("nope"), UnknownCase);
    CHECK(oracle_by_name("gkdv_l1_V2").name == "gkdv_l1_V2");
    CHECK(!oracle_names().empty());
}
