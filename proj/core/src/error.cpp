#include "strata/error.hpp"

namespace strata {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IllegalKindForLevel: return "IllegalKindForLevel";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::UnknownNode: return "UnknownNode";
    case ErrorCode::SymmetryClassConflict: return "SymmetryClassConflict";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::CrossLevelEdge: return "CrossLevelEdge";
    case ErrorCode::LevelOrderViolation: return "LevelOrderViolation";
    case ErrorCode::EmptyMemberSet: return "EmptyMemberSet";
    case ErrorCode::MergeViolation: return "MergeViolation";
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::NonPositiveExtent: return "NonPositiveExtent";
    case ErrorCode::DuplicateRectId: return "DuplicateRectId";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::ConfigInvalid: return "ConfigInvalid";
    case ErrorCode::PremiseSyntaxError: return "PremiseSyntaxError";
    case ErrorCode::EmptyPremiseList: return "EmptyPremiseList";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::RuleSyntaxError: return "RuleSyntaxError";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::IsolatedNode: return "IsolatedNode";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::IdenticalEndpoints: return "IdenticalEndpoints";
    case ErrorCode::NotTwoDimensional: return "NotTwoDimensional";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

DocumentError::DocumentError(ErrorCode code, std::size_t line, std::string field,
                             const std::string& message)
    : Error(code, (line ? "line " + std::to_string(line) + ": " : std::string()) +
                      (field.empty() ? std::string() : field + ": ") + message),
      line_(line),
      field_(std::move(field)) {}

}  // namespace strata
