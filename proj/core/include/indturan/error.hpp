#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace indturan {

enum class ErrorCode {
    MalformedGraph6,
    WTooSmall,
    NotPartite,
    HypothesisFailed,
    StuckBelowUniformity,
    NotPrimePower,
    BadSpec,
    TrialsExhausted,
    InequalityFails,
    RetriesExhausted,
    NoIndependentSets,
    AllEdgesBad,
    NoViableCandidate,
    TooSparse,
    PatternPresent,
    Overflow,
    TooLarge,
    PreconditionFailed,
    CostGuard,
    ValidationFailed,
    Io,
    Usage,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a code so callers (notably the
// CLI) can map it to an outcome class without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace indturan
