#ifndef SECTORWAVE_LEDGER_HPP
#define SECTORWAVE_LEDGER_HPP

#include <map>
#include <vector>

#include "sectorwave/field.hpp"

namespace sectorwave {

struct LedgerEntry {
    int alpha = 0;
    int beta = 0;
    Real value = 0.0;
    Real noise = 0.0;
    bool trusted = true;
};

/// The table ||x^beta d^alpha u||_s for alpha + beta <= N_max together with
/// the partial sums S_N = sum_{alpha+beta<=N} eps^{alpha+beta} / max(alpha,
/// beta)! * value over the trusted entries.
struct NormLedger {
    Real s = 0.0;
    int N_max = 0;
    std::vector<LedgerEntry> entries;  // ordered by (alpha+beta, alpha)
    std::map<Real, std::vector<Real>> partial_sums;  // eps -> S_0..S_N_max
    bool truncated = false;  // untrusted entries were skipped in the sums

    const LedgerEntry& at(int alpha, int beta) const;
};

NormLedger build_norm_ledger(const SpectralField& u, Real s, int N_max,
                             const std::vector<Real>& epsilons);

/// Boundedness heuristic on a partial-sum sequence: the last five ratios
/// S_N/S_{N-1} must all stay below 1 + 10/N. Only finitely many terms are
/// observable, so this is a consistency certificate rather than a proof of
/// convergence.
bool partial_sums_bounded(const std::vector<Real>& s_sequence);

struct SectorEstimate {
    Real A_sect_constant = 0.0;  // smallest C fitting the trusted entries
    Real epsilon = 0.0;          // proof-backed aperture lower bound
    Real epsilon_star = 0.0;     // largest tested eps passing the ratio test
    Real strip_width = 0.0;      // from the Fourier decay, 0 if unavailable
};

/// Classify the tested epsilons with the ratio heuristic, fit the growth
/// constant C over the trusted entries, and report epsilon = min(1/(2C),
/// epsilon_star) -- the power-series argument guarantees holomorphy on discs
/// of radius <x>/(2C), hence a sector of that aperture. Throws Inconclusive
/// unless the tested epsilons straddle the bounded/unbounded transition.
SectorEstimate estimate_sector(const NormLedger& ledger, const SpectralField& u);

}  // namespace sectorwave

#endif
