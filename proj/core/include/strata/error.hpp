#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

enum class ErrorCode {
  // kg
  IllegalKindForLevel,
  DuplicateName,
  UnknownNode,
  SymmetryClassConflict,
  SelfLoop,
  CrossLevelEdge,
  LevelOrderViolation,
  EmptyMemberSet,
  MergeViolation,
  MalformedDocument,
  // scene
  NonPositiveExtent,
  DuplicateRectId,
  OutOfBounds,
  ConfigInvalid,
  // spatial
  PremiseSyntaxError,
  // nal
  EmptyPremiseList,
  NonConvergence,
  RuleSyntaxError,
  // foa / eval
  UniverseMismatch,
  // embed
  IsolatedNode,
  EmptyCorpus,
  IdenticalEndpoints,
  NotTwoDimensional,
  TooFewPoints,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every failure raised by the library. The code is the
/// machine-checkable part; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure in one of the text documents. `line` is 1-based, 0 when the
/// failure is not tied to a line (e.g. a missing top-level field).
class DocumentError : public Error {
 public:
  DocumentError(ErrorCode code, std::size_t line, std::string field,
                const std::string& message);

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

}  // namespace strata
