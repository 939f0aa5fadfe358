#ifndef SECTORWAVE_ERRORS_HPP
#define SECTORWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sectorwave {

/// Base class for all failures with a stable machine-readable code.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define SECTORWAVE_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                              \
    public:                                                                  \
        explicit Name(const std::string& what) : Error(#Name, what) {}       \
    }

SECTORWAVE_DEFINE_ERROR(SectorViolation);
SECTORWAVE_DEFINE_ERROR(SingularPoint);
SECTORWAVE_DEFINE_ERROR(InvalidDomain);
SECTORWAVE_DEFINE_ERROR(ExtensionUnavailable);
SECTORWAVE_DEFINE_ERROR(NotElliptic);
SECTORWAVE_DEFINE_ERROR(InvalidSpeed);
SECTORWAVE_DEFINE_ERROR(NearCriticalAngle);
SECTORWAVE_DEFINE_ERROR(CriticalAngle);
SECTORWAVE_DEFINE_ERROR(BelowNoiseFloor);
SECTORWAVE_DEFINE_ERROR(NonDecaying);
SECTORWAVE_DEFINE_ERROR(InsufficientDynamicRange);
SECTORWAVE_DEFINE_ERROR(IllConditioned);
SECTORWAVE_DEFINE_ERROR(TruncationError);
SECTORWAVE_DEFINE_ERROR(ConfigError);
SECTORWAVE_DEFINE_ERROR(UnknownCase);
SECTORWAVE_DEFINE_ERROR(IoError);

#undef SECTORWAVE_DEFINE_ERROR

/// Thrown by estimate_sector when the tested epsilon grid does not straddle
/// the bounded/unbounded transition. `reason` is one of "entire",
/// "all_unbounded", "single_regime".
class Inconclusive : public Error {
public:
    Inconclusive(std::string reason, const std::string& what)
        : Error("Inconclusive", what), reason_(std::move(reason)) {}
    const std::string& reason() const { return reason_; }

private:
    std::string reason_;
};

}  // namespace sectorwave

#endif
