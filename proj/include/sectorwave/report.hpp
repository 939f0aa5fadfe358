#ifndef SECTORWAVE_REPORT_HPP
#define SECTORWAVE_REPORT_HPP

#include <string>

#include "sectorwave/config.hpp"
#include "sectorwave/ledger.hpp"
#include "sectorwave/solver.hpp"

namespace sectorwave {

/// Serialize with object keys in sorted order and every floating-point
/// number printed with 17 significant digits, so identical inputs give
/// byte-identical files.
std::string dump_json_17g(const Json& j, int indent = 2);

void write_text_file(const std::string& path, const std::string& content);

struct DiagnosticsResult {
    Json report;
    bool inconclusive = false;  // entire strip fit or inconclusive sector
};

/// Run the diagnostics enabled in `cfg` on a field and assemble the report
/// document. Hard failures (e.g. TruncationError) propagate; the
/// inconclusive outcomes are recorded in the report instead.
DiagnosticsResult run_diagnostics(const SpectralField& u, const RunConfig& cfg);

/// Report document for a finished solve, embedding the originating config.
Json solve_report_json(const SolveReport& rep, const Json& config_echo, long seed);

/// CSV export of the (alpha, beta) norm table.
void write_ledger_csv(const NormLedger& ledger, const std::string& path);

}  // namespace sectorwave

#endif
