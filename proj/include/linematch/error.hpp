#pragma once

#include <stdexcept>
#include <string>

namespace linematch {

enum class ErrorKind {
  LengthMismatch,
  DuplicateCoordinate,
  NonPositiveDemand,
  CapBelowDemand,
  InfeasibleDemand,
  InfeasibleCapacity,
  IndexOutOfRange,
  EmptyInstance,
  SizeGuardExceeded,
  InternalNontermination,
  ParseError,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorKind::NonPositiveDemand: return "NonPositiveDemand";
    case ErrorKind::CapBelowDemand: return "CapBelowDemand";
    case ErrorKind::InfeasibleDemand: return "InfeasibleDemand";
    case ErrorKind::InfeasibleCapacity: return "InfeasibleCapacity";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::EmptyInstance: return "EmptyInstance";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::InternalNontermination: return "InternalNontermination";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

// Every library failure surfaces as an Error; kind() drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline bool is_infeasible(ErrorKind k) {
  return k == ErrorKind::InfeasibleDemand || k == ErrorKind::InfeasibleCapacity;
}

}  // namespace linematch
