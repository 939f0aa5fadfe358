#include "sectorwave/ledger.hpp"

#include <cmath>

#include "sectorwave/decay.hpp"
#include "sectorwave/errors.hpp"
#include "sectorwave/spectral_ops.hpp"

namespace sectorwave {

const LedgerEntry& NormLedger::at(int alpha, int beta) const {
    for (const auto& e : entries)
        if (e.alpha == alpha && e.beta == beta) return e;
    throw InvalidDomain("ledger entry (" + std::to_string(alpha) + ", " +
                        std::to_string(beta) + ") not present");
}

NormLedger build_norm_ledger(const SpectralField& u, Real s, int N_max,
                             const std::vector<Real>& epsilons) {
    if (N_max < 0 || N_max > 20)
        throw InvalidDomain("N_max must lie in [0, 20]");

    NormLedger ledger;
    ledger.s = s;
    ledger.N_max = N_max;

    for (int total = 0; total <= N_max; ++total) {
        for (int alpha = total; alpha >= 0; --alpha) {
            int beta = total - alpha;
            WeightedNormResult r = weighted_sobolev_norm_detail(u, alpha, beta, s);
            ledger.entries.push_back({alpha, beta, r.value, r.noise, r.trusted});
            if (!r.trusted) ledger.truncated = true;
        }
    }

    for (Real eps : epsilons) {
        std::vector<Real> sums(N_max + 1, 0.0);
        Real acc = 0.0;
        std::size_t idx = 0;
        for (int total = 0; total <= N_max; ++total) {
            for (int alpha = total; alpha >= 0; --alpha, ++idx) {
                const LedgerEntry& e = ledger.entries[idx];
                if (!e.trusted) continue;
                Real weight = std::pow(eps, total) /
                              std::tgamma(static_cast<Real>(std::max(e.alpha, e.beta)) + 1.0);
                acc += weight * e.value;
            }
            sums[total] = acc;
        }
        ledger.partial_sums[eps] = std::move(sums);
    }
    return ledger;
}

bool partial_sums_bounded(const std::vector<Real>& s_sequence) {
    const int n = static_cast<int>(s_sequence.size()) - 1;  // highest N
    if (n < 5) throw InvalidDomain("need at least S_0..S_5 for the ratio test");
    for (int N = n - 4; N <= n; ++N) {
        Real prev = s_sequence[N - 1], cur = s_sequence[N];
        if (prev == 0.0 && cur == 0.0) continue;
        if (prev == 0.0) return false;
        if (cur / prev > 1.0 + 10.0 / static_cast<Real>(N)) return false;
    }
    return true;
}

SectorEstimate estimate_sector(const NormLedger& ledger, const SpectralField& u) {
    if (ledger.partial_sums.size() < 2)
        throw Inconclusive("single_regime",
                           "need at least two tested epsilons spanning both regimes");

    Real eps_star = -1.0;
    bool any_unbounded = false;
    for (const auto& [eps, sums] : ledger.partial_sums) {
        if (partial_sums_bounded(sums))
            eps_star = std::max(eps_star, eps);
        else
            any_unbounded = true;
    }
    if (eps_star < 0.0)
        throw Inconclusive("all_unbounded",
                           "every tested epsilon fails the ratio test; "
                           "extend the list toward 0");
    if (!any_unbounded)
        throw Inconclusive("entire",
                           "every tested epsilon passes the ratio test; the "
                           "field looks entire at this resolution");

    SectorEstimate est;
    est.epsilon_star = eps_star;

    // Smallest C with value <= C^{alpha+beta+1} max(alpha,beta)! across the
    // trusted table, fitted in logs.
    Real log_c = -std::numeric_limits<Real>::infinity();
    for (const auto& e : ledger.entries) {
        if (!e.trusted || e.value <= 0.0) continue;
        Real lc = (std::log(e.value) -
                   std::lgamma(static_cast<Real>(std::max(e.alpha, e.beta)) + 1.0)) /
                  static_cast<Real>(e.alpha + e.beta + 1);
        log_c = std::max(log_c, lc);
    }
    est.A_sect_constant = std::exp(log_c);
    est.epsilon = std::min(1.0 / (2.0 * est.A_sect_constant), est.epsilon_star);

    try {
        est.strip_width = strip_width_from_spectrum(u).width;
    } catch (const Error&) {
        est.strip_width = 0.0;
    }
    return est;
}

}  // namespace sectorwave
