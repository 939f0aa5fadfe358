#ifndef SECTORWAVE_VERIFY_HPP
#define SECTORWAVE_VERIFY_HPP

#include <string>
#include <vector>

#include "sectorwave/closedform.hpp"

namespace sectorwave {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// End-to-end battery for one oracle case: sampled residual, solve from a
/// generic guess vs. the exact profile, decay and strip-width recovery,
/// singularity location, and the decay/strip/pole consistency triangle.
/// Branch-point lattices skip the rational-approximation checks, which
/// localize poles, not branch cuts. Throws UnknownCase for names outside the
/// registry.
std::vector<VerifyCheck> run_verify_case(const std::string& case_name);

}  // namespace sectorwave

#endif
