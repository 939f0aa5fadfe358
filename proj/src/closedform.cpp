#include "sectorwave/closedform.hpp"

#include <algorithm>
#include <cmath>

#include "sectorwave/errors.hpp"

namespace sectorwave {

std::vector<Complex> SingularLattice::ring(int n) const {
    std::vector<Complex> out;
    for (int k = -n; k < n; ++k) out.push_back(base + static_cast<Real>(k) * step);
    std::sort(out.begin(), out.end(),
              [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    return out;
}

Real SingularLattice::min_abs_imag() const {
    Real best = std::numeric_limits<Real>::infinity();
    for (Complex z : ring(64)) best = std::min(best, std::abs(z.imag()));
    return best;
}

SpectralField ClosedFormSolution::sample(const Grid1D& grid) const {
    return SpectralField::from_function(grid, evaluate);
}

Grid1D reference_grid() { return Grid1D(40.0 * M_PI, 4096); }

ClosedFormSolution gkdv_soliton(int l, Real V) {
    if (l < 1) throw InvalidDomain("gkdv exponent l must be >= 1");
    if (!(V > 1.0)) throw InvalidSpeed("gkdv soliton requires V > 1");

    const Real root = std::sqrt(V - 1.0);
    const Real amp =
        std::pow((l + 1) * (l + 2) * (V - 1.0) / 2.0, 1.0 / static_cast<Real>(l));
    const Real rate = root * static_cast<Real>(l) / 2.0;  // cosh argument scale
    const Real power = 2.0 / static_cast<Real>(l);

    ClosedFormSolution sol;
    sol.name = "gkdv_l" + std::to_string(l) + "_V" + std::to_string(V);
    sol.evaluate = [amp, rate, power](Real x) {
        return Complex(amp * std::pow(std::cosh(rate * x), -power), 0.0);
    };
    sol.evaluate_complex = [amp, rate, power](Complex z) {
        // principal branch for fractional powers
        return amp * std::pow(std::cosh(rate * z), Complex(-power, 0.0));
    };
    sol.lattice.base = Complex(0.0, M_PI / (l * root));
    sol.lattice.step = Complex(0.0, 2.0 * M_PI / (l * root));
    sol.lattice.multiplicity = (l == 1) ? 2 : 1;
    sol.lattice.kind = (2 % l == 0) ? SingularityKind::pole : SingularityKind::branch_point;
    sol.problem = make_gkdv_problem(l, V);
    sol.decay_rate_exact = root;
    sol.strip_width_exact = sol.lattice.min_abs_imag();
    sol.amplitude_at_zero = amp;
    return sol;
}

ClosedFormSolution sharpness_solution(Real theta) {
    if (!(theta > -M_PI && theta <= M_PI))
        throw InvalidDomain("theta must lie in (-pi, pi]");
    if (std::abs(std::abs(theta) - M_PI / 2.0) < 1e-12)
        throw CriticalAngle("profile does not decay at |theta| = pi/2");

    const Complex rot = std::exp(Complex(0.0, -theta));

    ClosedFormSolution sol;
    sol.name = "sharpness_theta_" + std::to_string(theta);
    sol.evaluate_complex = [rot](Complex z) {
        Complex c = std::cosh(rot * z / 2.0);
        return 3.0 / (c * c);
    };
    sol.evaluate = [rot](Real x) {
        Complex c = std::cosh(rot * x / 2.0);
        return 3.0 / (c * c);
    };
    sol.lattice.base = M_PI * std::exp(Complex(0.0, theta + M_PI / 2.0));
    sol.lattice.step = 2.0 * M_PI * std::exp(Complex(0.0, theta + M_PI / 2.0));
    sol.lattice.multiplicity = 2;
    sol.lattice.kind = SingularityKind::pole;

    sol.problem.symbol = xi_squared_symbol();
    sol.problem.V = 2.0;
    sol.problem.family = EquationFamily::direct;
    const Complex rot2 = rot * rot;
    sol.problem.shift_override = rot2;
    sol.problem.nonlinearity.terms = {{2, rot2 / 2.0, false}};

    sol.decay_rate_exact = std::abs(std::cos(theta));
    sol.strip_width_exact = sol.lattice.min_abs_imag();
    sol.amplitude_at_zero = 3.0;
    return sol;
}

ClosedFormSolution nls_ground_state() {
    ClosedFormSolution sol;
    sol.name = "nls_ground_state";
    sol.evaluate = [](Real x) { return Complex(std::sqrt(2.0) / std::cosh(x), 0.0); };
    sol.evaluate_complex = [](Complex z) { return std::sqrt(2.0) / std::cosh(z); };
    sol.lattice.base = Complex(0.0, M_PI / 2.0);
    sol.lattice.step = Complex(0.0, M_PI);
    sol.lattice.multiplicity = 1;
    sol.lattice.kind = SingularityKind::pole;
    sol.problem = make_nls_problem();
    sol.decay_rate_exact = 1.0;
    sol.strip_width_exact = M_PI / 2.0;
    sol.amplitude_at_zero = std::sqrt(2.0);
    return sol;
}

namespace {

const std::vector<std::string>& registry() {
    static const std::vector<std::string> names = {
        "gkdv_l1_V2",  "gkdv_l2_V2",          "gkdv_l3_V2",
        "gkdv_l1_V1p5", "gkdv_l1_V5",          "nls_ground_state",
        "sharpness_theta_pi12", "sharpness_theta_pi6", "sharpness_theta_pi4",
    };
    return names;
}

}  // namespace

const std::vector<std::string>& oracle_names() { return registry(); }

ClosedFormSolution oracle_by_name(const std::string& name) {
    ClosedFormSolution sol;
    if (name == "gkdv_l1_V2") sol = gkdv_soliton(1, 2.0);
    else if (name == "gkdv_l2_V2") sol = gkdv_soliton(2, 2.0);
    else if (name == "gkdv_l3_V2") sol = gkdv_soliton(3, 2.0);
    else if (name == "gkdv_l1_V1p5") sol = gkdv_soliton(1, 1.5);
    else if (name == "gkdv_l1_V5") sol = gkdv_soliton(1, 5.0);
    else if (name == "nls_ground_state") sol = nls_ground_state();
    else if (name == "sharpness_theta_pi12") sol = sharpness_solution(M_PI / 12.0);
    else if (name == "sharpness_theta_pi6") sol = sharpness_solution(M_PI / 6.0);
    else if (name == "sharpness_theta_pi4") sol = sharpness_solution(M_PI / 4.0);
    else throw UnknownCase("no oracle named '" + name + "'");
    sol.name = name;
    return sol;
}

}  // namespace sectorwave
