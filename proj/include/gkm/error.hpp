#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gkm {

enum class ErrorCode {
  // graph
  LoopEdge,
  Disconnected,
  NonRegular,
  BadInvolution,
  UnknownId,
  BadOrdering,
  // axial
  NoMatch,
  AmbiguousConnection,
  NotProportional,
  // linalg
  NotInLattice,
  DimensionMismatch,
  // extension
  RankExceeded,
  EffectivenessUnachievable,
  NotSurjective,
  AxiomViolation,
  GraphMismatch,
  // io
  ParseError,
  SchemaError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NonRegular: return "NonRegular";
    case ErrorCode::BadInvolution: return "BadInvolution";
    case ErrorCode::UnknownId: return "UnknownId";
    case ErrorCode::BadOrdering: return "BadOrdering";
    case ErrorCode::NoMatch: return "NoMatch";
    case ErrorCode::AmbiguousConnection: return "AmbiguousConnection";
    case ErrorCode::NotProportional: return "NotProportional";
    case ErrorCode::NotInLattice: return "NotInLattice";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankExceeded: return "RankExceeded";
    case ErrorCode::EffectivenessUnachievable: return "EffectivenessUnachievable";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gkm
