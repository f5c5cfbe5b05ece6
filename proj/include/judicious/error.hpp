#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace judicious {

enum class ErrorKind {
  LoopArc,
  DuplicateArc,
  VertexOutOfRange,
  EmptyGraph,
  ParseError,
  PartitionNotCovering,
  XTooLarge,
  StateLimit,
  TooLarge,
  HugeSetEven,
  NotApplicable,
  IdentityViolation,
  PreconditionViolated,
  EvenOrder,
  TooSmall,
  RegularityFailure,
  InfeasibleParams,
  MinOutdegreeViolation,
  InvalidConfig,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LoopArc: return "LoopArc";
    case ErrorKind::DuplicateArc: return "DuplicateArc";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::PartitionNotCovering: return "PartitionNotCovering";
    case ErrorKind::XTooLarge: return "XTooLarge";
    case ErrorKind::StateLimit: return "StateLimit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::HugeSetEven: return "HugeSetEven";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EvenOrder: return "EvenOrder";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::RegularityFailure: return "RegularityFailure";
    case ErrorKind::InfeasibleParams: return "InfeasibleParams";
    case ErrorKind::MinOutdegreeViolation: return "MinOutdegreeViolation";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

/// Errors that exhaust a configured computational budget rather than
/// reflecting malformed input.
constexpr bool is_resource_limit(ErrorKind kind) {
  return kind == ErrorKind::XTooLarge || kind == ErrorKind::StateLimit ||
         kind == ErrorKind::TooLarge;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace judicious
