#include "indturan/error.hpp"

namespace indturan {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedGraph6: return "MalformedGraph6";
        case ErrorCode::WTooSmall: return "WTooSmall";
        case ErrorCode::NotPartite: return "NotPartite";
        case ErrorCode::HypothesisFailed: return "HypothesisFailed";
        case ErrorCode::StuckBelowUniformity: return "StuckBelowUniformity";
        case ErrorCode::NotPrimePower: return "NotPrimePower";
        case ErrorCode::BadSpec: return "BadSpec";
        case ErrorCode::TrialsExhausted: return "TrialsExhausted";
        case ErrorCode::InequalityFails: return "InequalityFails";
        case ErrorCode::RetriesExhausted: return "RetriesExhausted";
        case ErrorCode::NoIndependentSets: return "NoIndependentSets";
        case ErrorCode::AllEdgesBad: return "AllEdgesBad";
        case ErrorCode::NoViableCandidate: return "NoViableCandidate";
        case ErrorCode::TooSparse: return "TooSparse";
        case ErrorCode::PatternPresent: return "PatternPresent";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::PreconditionFailed: return "PreconditionFailed";
        case ErrorCode::CostGuard: return "CostGuard";
        case ErrorCode::ValidationFailed: return "ValidationFailed";
        case ErrorCode::Io: return "Io";
        case ErrorCode::Usage: return "Usage";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace indturan
