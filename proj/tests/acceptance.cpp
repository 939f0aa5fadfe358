// Acceptance suite: one line per criterion, strict tolerances, wall-clock
// budgets enforced. Exits nonzero if any criterion fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "sectorwave/closedform.hpp"
#include "sectorwave/decay.hpp"
#include "sectorwave/ledger.hpp"
#include "sectorwave/pade.hpp"
#include "sectorwave/report.hpp"
#include "sectorwave/solver.hpp"
#include "sectorwave/spectral_ops.hpp"

using namespace sectorwave;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion(int number, const std::string& title,
               const std::function<bool(std::ostringstream&)>& body,
               double budget_s) {
    std::ostringstream detail;
    Clock::time_point t0 = Clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail << " threw: " << e.what();
    }
    double elapsed = seconds_since(t0);
    if (elapsed > budget_s) {
        ok = false;
        detail << " [over budget " << budget_s << "s]";
    }
    std::printf("[%s] criterion %d: %-28s (%5.2fs)%s\n", ok ? "PASS" : "FAIL",
                number, title.c_str(), elapsed, detail.str().c_str());
    if (!ok) ++failures;
}

struct GkdvRun {
    int l;
    Real V;
    SolveReport report;
};

std::vector<GkdvRun> solve_gkdv_grid() {
    Grid1D grid = reference_grid();
    std::vector<GkdvRun> runs;
    for (int l : {1, 2, 3})
        for (Real V : {1.5, 2.0, 3.0}) {
            SolitaryWaveProblem prob = make_gkdv_problem(l, V);
            runs.push_back({l, V,
                            petviashvili_solve(prob, default_initial_guess(prob, grid),
                                               1e-11, 2000)});
        }
    return runs;
}

}  // namespace

int main() {
    Clock::time_point suite_start = Clock::now();
    Grid1D grid = reference_grid();

    // Solved once, reused by criteria 1, 3, 4 and 6.
    SolitaryWaveProblem reference_problem = make_gkdv_problem(1, 2.0);
    SolveReport reference_solve = petviashvili_solve(
        reference_problem, default_initial_guess(reference_problem, grid), 1e-10,
        2000);

    criterion(1, "soliton reproduction",
              [&](std::ostringstream& out) {
                  Clock::time_point t0 = Clock::now();
                  SolitaryWaveProblem prob = make_gkdv_problem(1, 2.0);
                  SolveReport rep = petviashvili_solve(
                      prob, default_initial_guess(prob, grid), 1e-10, 2000);
                  double t_solve = seconds_since(t0);
                  SpectralField exact = gkdv_soliton(1, 2.0).sample(grid);
                  Real err = (rep.solution.values() - exact.values()).abs().maxCoeff();
                  Real res = residual(prob, rep.solution, 0.0);
                  out << " max_err=" << err << " residual=" << res
                      << " solve_time=" << t_solve << "s";
                  return rep.converged && err <= 1e-8 && res <= 1e-10 &&
                         t_solve <= 5.0;
              },
              30.0);

    std::vector<GkdvRun> grid_runs;
    criterion(2, "amplitude law",
              [&](std::ostringstream& out) {
                  grid_runs = solve_gkdv_grid();
                  bool ok = true;
                  Real worst = 0.0;
                  for (const GkdvRun& run : grid_runs) {
                      if (!run.report.converged) {
                          out << " (l=" << run.l << ",V=" << run.V << ") diverged";
                          ok = false;
                          continue;
                      }
                      Real amp = run.report.solution.values()[grid.size() / 2].real();
                      Real expect = std::pow(
                          (run.l + 1) * (run.l + 2) * (run.V - 1.0) / 2.0,
                          1.0 / static_cast<Real>(run.l));
                      Real rel = std::abs(amp - expect) / expect;
                      worst = std::max(worst, rel);
                      ok = ok && rel <= 1e-6;
                  }
                  out << " worst_rel=" << worst;
                  return ok;
              },
              60.0);

    criterion(3, "decay certification",
              [&](std::ostringstream& out) {
                  bool ok = true;
                  Real worst = 0.0;
                  for (const GkdvRun& run : grid_runs) {
                      if (!run.report.converged) return false;
                      DecayFit fit = fit_decay(run.report.solution, 0.05);
                      Real exact = std::sqrt(run.V - 1.0);
                      Real rel = std::abs(fit.c - exact) / exact;
                      worst = std::max(worst, rel);
                      ok = ok && rel <= 0.02;
                  }
                  out << " worst_gkdv_rel=" << worst;

                  SolitaryWaveProblem ilw;
                  ilw.symbol = ilw_symbol(0.0);
                  ilw.V = 1.5;
                  ilw.family = EquationFamily::kdv_type;
                  ilw.nonlinearity.terms = {{2, Complex(0.5, 0.0), false}};
                  SolveReport rep = petviashvili_solve(
                      ilw, default_initial_guess(ilw, grid), 1e-11, 2000);
                  if (!rep.converged) {
                      out << " ilw diverged";
                      return false;
                  }
                  DecayFit fit = fit_decay(rep.solution, 0.05);
                  out << " ilw_c=" << fit.c << " ilw_r2=" << fit.r_squared;
                  return ok && fit.c > 0.0 && fit.r_squared >= 0.999;
              },
              60.0);

    criterion(4, "pole lattice",
              [&](std::ostringstream& out) {
                  Clock::time_point t0 = Clock::now();
                  PoleSet soliton_poles = pade_poles(reference_solve.solution, 0.0, 8);
                  double t_first = seconds_since(t0);
                  Real up = 1e9, down = 1e9;
                  for (const PoleCluster& c : soliton_poles.clusters) {
                      up = std::min(up, std::abs(c.centroid - Complex(0.0, M_PI)));
                      down = std::min(down, std::abs(c.centroid - Complex(0.0, -M_PI)));
                  }
                  out << " |c-i pi|=" << up << " |c+i pi|=" << down;

                  t0 = Clock::now();
                  SpectralField rotated = sharpness_solution(M_PI / 6.0).sample(grid);
                  PoleSet rot_poles = pade_poles(rotated, 0.0, 8);
                  double t_second = seconds_since(t0);
                  Real best = 1e9;
                  Complex found;
                  const Complex target = M_PI * std::exp(Complex(0.0, 2.0 * M_PI / 3.0));
                  for (const PoleCluster& c : rot_poles.clusters) {
                      Real d = std::abs(c.centroid - target);
                      if (d < best) {
                          best = d;
                          found = c.centroid;
                      }
                  }
                  Real mod_err = std::abs(std::abs(found) - M_PI) / M_PI;
                  Real arg_err = std::abs(std::arg(found) - 2.0 * M_PI / 3.0);
                  out << " mod_rel=" << mod_err << " arg_err=" << arg_err;
                  return up <= 1e-3 && down <= 1e-3 && mod_err <= 1e-2 &&
                         arg_err <= 1e-2 && t_first <= 10.0 && t_second <= 10.0;
              },
              30.0);

    criterion(5, "sector sharpness echo",
              [&](std::ostringstream& out) {
                  bool ok = true;
                  for (Real theta : {M_PI / 12.0, M_PI / 6.0, M_PI / 4.0}) {
                      SingularLattice lattice = sharpness_solution(theta).lattice;
                      std::vector<Complex> ring = lattice.ring(32);
                      PoleSet poles = pole_set_from_points(ring);
                      Real min_ratio = 1e300, max_first = 0.0;
                      for (Complex z : ring)
                          min_ratio = std::min(
                              min_ratio, std::abs(z.imag()) / (1.0 + std::abs(z.real())));
                      for (Complex z : lattice.ring(1))
                          max_first = std::max(
                              max_first, std::abs(z.imag()) / (1.0 + std::abs(z.real())));
                      bool inside = sector_containment(poles, 0.5 * min_ratio);
                      bool outside = !sector_containment(poles, 2.0 * max_first);
                      ok = ok && inside && outside;
                      out << " theta=" << theta << (inside && outside ? " ok" : " BAD");
                  }
                  return ok;
              },
              10.0);

    criterion(6, "ledger dichotomy",
              [&](std::ostringstream& out) {
                  NormLedger ledger = build_norm_ledger(
                      reference_solve.solution, 1.0, 15,
                      {0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0, 2.0});
                  bool low = partial_sums_bounded(ledger.partial_sums.at(0.02));
                  bool high = partial_sums_bounded(ledger.partial_sums.at(2.0));
                  SectorEstimate est = estimate_sector(ledger, reference_solve.solution);
                  out << " bounded(0.02)=" << low << " bounded(2)=" << high
                      << " eps=" << est.epsilon << " eps*=" << est.epsilon_star;
                  return low && !high && est.epsilon > 0.0 &&
                         est.epsilon <= est.epsilon_star;
              },
              60.0);

    criterion(7, "consistency triangle",
              [&](std::ostringstream& out) {
                  bool ok = true;
                  for (const char* name :
                       {"gkdv_l1_V2", "nls_ground_state", "sharpness_theta_pi6"}) {
                      SpectralField u = oracle_by_name(name).sample(grid);
                      DecayFit decay = fit_decay(u, 0.05);
                      StripWidthEstimate strip = strip_width_from_spectrum(u);
                      PoleSet poles = pade_poles(u, 0.0, 8);
                      Real min_im = 1e300;
                      for (const PoleCluster& c : poles.clusters)
                          min_im = std::min(min_im, std::abs(c.centroid.imag()));
                      bool strip_ok = std::abs(strip.width - min_im) <= 0.05 * min_im;
                      bool decay_ok = decay.c <= 1.05 * strip.width;
                      ok = ok && strip_ok && decay_ok;
                      out << " " << name << (strip_ok && decay_ok ? " ok" : " BAD");
                  }
                  return ok;
              },
              60.0);

    criterion(8, "property suites",
              [&](std::ostringstream& out) {
                  bool ok = true;

                  // Parseval and round trip on random band-limited fields
                  std::mt19937 rng(777);
                  std::uniform_real_distribution<Real> amp(-1.0, 1.0);
                  Grid1D small(20.0 * M_PI, 512);
                  for (int trial = 0; trial < 100; ++trial) {
                      ArrayXc spec = ArrayXc::Zero(small.size());
                      for (int j = 0; j <= 20; ++j) {
                          Complex c(amp(rng), amp(rng));
                          spec[j] += c;
                          spec[j == 0 ? 0 : small.size() - j] += std::conj(c);
                      }
                      SpectralField f = SpectralField::from_spectrum(small, std::move(spec));
                      if (f.parseval_gap() > 1e-10) ok = false;
                      SpectralField back =
                          SpectralField::from_spectrum(small, ArrayXc(f.spectrum()));
                      Real rt = std::sqrt((back.values() - f.values()).abs2().sum() *
                                          small.dx());
                      if (rt > 1e-12 * f.l2_norm()) ok = false;
                  }
                  if (!ok) out << " [transform invariants failed]";

                  // translation covariance of the diagnostics
                  SpectralField u = reference_solve.solution;
                  Real res0 = residual(reference_problem, u, 0.0);
                  Real res1 = residual(reference_problem, u.translated(64), 0.0);
                  bool translation_ok = std::abs(res0 - res1) <= 1e-11;
                  PoleSet p0 = pade_poles(u, 0.0, 8);
                  PoleSet p1 = pade_poles(u.translated(64), 64 * grid.dx(), 8);
                  translation_ok =
                      translation_ok && !p0.clusters.empty() && !p1.clusters.empty() &&
                      std::abs(p1.clusters.front().centroid -
                               (p0.clusters.front().centroid + 64 * grid.dx())) <= 1e-6;
                  if (!translation_ok) out << " [translation covariance failed]";
                  ok = ok && translation_ok;

                  // symmetry preservation of the even solve
                  const ArrayXc& v = u.values();
                  Real asym = 0.0;
                  for (int i = 1; i < grid.size(); ++i)
                      asym = std::max(asym, std::abs(v[i] - v[grid.size() - i]));
                  bool sym_ok = asym / u.max_abs() <= 1e-9;
                  if (!sym_ok) out << " [symmetry failed " << asym << "]";
                  ok = ok && sym_ok;

                  // ledger monotonicity
                  NormLedger ledger = build_norm_ledger(u, 1.0, 10, {0.05, 0.5});
                  for (const auto& [eps, sums] : ledger.partial_sums)
                      for (std::size_t n = 1; n < sums.size(); ++n)
                          if (sums[n] < sums[n - 1]) {
                              ok = false;
                              out << " [ledger monotonicity failed]";
                          }

                  // conjugate pole symmetry on the real profile
                  for (Complex z : p0.poles) {
                      Real best = 1e300;
                      for (Complex w : p0.poles)
                          best = std::min(best, std::abs(w - std::conj(z)));
                      if (best > 1e-8) {
                          ok = false;
                          out << " [conjugate symmetry failed]";
                          break;
                      }
                  }

                  // determinism of serialized reports
                  RunConfig cfg;
                  DiagnosticsResult d1 = run_diagnostics(u, cfg);
                  DiagnosticsResult d2 = run_diagnostics(u, cfg);
                  bool det = dump_json_17g(d1.report) == dump_json_17g(d2.report);
                  if (!det) out << " [report determinism failed]";
                  ok = ok && det;

                  return ok;
              },
              120.0);

    double total = seconds_since(suite_start);
    std::printf("acceptance total: %.2fs, %d criterion(s) failed\n", total, failures);
    if (total > 180.0) {
        std::printf("[FAIL] suite exceeded the 3 minute budget\n");
        ++failures;
    }
    return failures == 0 ? 0 : 1;
}
