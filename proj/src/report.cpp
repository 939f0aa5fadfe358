#include "sectorwave/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sectorwave/decay.hpp"
#include "sectorwave/errors.hpp"
#include "sectorwave/pade.hpp"

namespace sectorwave {

namespace {

std::string format_double(Real v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void dump_rec(const Json& j, std::string& out, int indent, int depth) {
    const std::string pad(static_cast<std::size_t>(indent) * depth, ' ');
    const std::string pad_in(static_cast<std::size_t>(indent) * (depth + 1), ' ');
    switch (j.type()) {
        case Json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            std::size_t i = 0;
            for (const auto& [key, value] : j.items()) {
                out += pad_in + Json(key).dump() + ": ";
                dump_rec(value, out, indent, depth + 1);
                if (++i < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "}";
            return;
        }
        case Json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            out += "[\n";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out += pad_in;
                dump_rec(j[i], out, indent, depth + 1);
                if (i + 1 < j.size()) out += ",";
                out += "\n";
            }
            out += pad + "]";
            return;
        }
        case Json::value_t::number_float:
            out += format_double(j.get<Real>());
            return;
        default:
            out += j.dump();
            return;
    }
}

std::string format_epsilon_key(Real eps) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", eps);
    return buf;
}

}  // namespace

std::string dump_json_17g(const Json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    out += "\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
}

DiagnosticsResult run_diagnostics(const SpectralField& u, const RunConfig& cfg) {
    DiagnosticsResult result;
    Json& rep = result.report;
    rep["seed"] = cfg.seed;

    if (cfg.diagnostics.decay) {
        DecayFit fit = fit_decay(u, cfg.decay_window_fraction);
        rep["decay"] = {{"c", fit.c},
                        {"C", fit.C},
                        {"r2", fit.r_squared},
                        {"window", {fit.window_lo, fit.window_hi}}};
    }

    if (cfg.diagnostics.strip) {
        StripWidthEstimate strip = strip_width_from_spectrum(u);
        rep["strip_width"] = strip.width;
        rep["strip_entire"] = strip.entire;
        if (strip.entire) result.inconclusive = true;
    }

    std::optional<NormLedger> ledger;
    if (cfg.diagnostics.ledger || cfg.diagnostics.sector) {
        ledger = build_norm_ledger(u, cfg.ledger.s, cfg.ledger.N_max,
                                   cfg.ledger.epsilons);
        Json sums = Json::object();
        for (const auto& [eps, seq] : ledger->partial_sums)
            sums[format_epsilon_key(eps)] = seq;
        rep["ledger"] = {{"s", ledger->s},
                         {"N_max", ledger->N_max},
                         {"truncated", ledger->truncated},
                         {"partial_sums", sums}};
    }

    std::optional<PoleSet> poles;
    if (cfg.diagnostics.poles) {
        poles = pade_poles(u, cfg.pade.center, cfg.pade.max_degree);
        Json list = Json::array();
        for (Complex z : poles->poles) list.push_back({z.real(), z.imag()});
        rep["poles"] = list;
        Json clusters = Json::array();
        for (const PoleCluster& c : poles->clusters)
            clusters.push_back({{"re", c.centroid.real()},
                                {"im", c.centroid.imag()},
                                {"multiplicity", c.multiplicity},
                                {"diameter", c.diameter},
                                {"residue", c.residue_magnitude}});
        rep["pole_clusters"] = clusters;
        rep["spurious_rejected"] = poles->spurious_rejected;
    }

    if (cfg.diagnostics.sector && ledger) {
        try {
            SectorEstimate sector = estimate_sector(*ledger, u);
            rep["sector"] = {{"epsilon", sector.epsilon},
                             {"epsilon_star", sector.epsilon_star},
                             {"C_cla0", sector.A_sect_constant},
                             {"strip_width", sector.strip_width}};
            if (poles && !poles->poles.empty())
                rep["sector_containment"] = sector_containment(*poles, sector.epsilon);
        } catch (const Inconclusive& e) {
            rep["sector"] = nullptr;
            rep["sector_inconclusive"] = e.reason();
            result.inconclusive = true;
        }
    }
    return result;
}

Json solve_report_json(const SolveReport& rep, const Json& config_echo, long seed) {
    Json j;
    j["converged"] = rep.converged;
    j["status"] = status_to_string(rep.status);
    j["method"] = rep.method;
    j["iterations"] = rep.iterations;
    j["final_residual"] = rep.final_residual;
    if (!rep.stabilizer_history.empty()) {
        j["stabilizer_final"] = rep.stabilizer_history.back();
        j["stabilizer_history"] = rep.stabilizer_history;
    }
    j["config"] = config_echo;
    j["seed"] = seed;
    return j;
}

void write_ledger_csv(const NormLedger& ledger, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << "alpha,beta,value,noise,trusted\n";
    char buf[128];
    for (const auto& e : ledger.entries) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%d\n", e.alpha, e.beta,
                      e.value, e.noise, e.trusted ? 1 : 0);
        out << buf;
    }
}

}  // namespace sectorwave
