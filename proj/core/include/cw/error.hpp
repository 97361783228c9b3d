#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cw {

/// Failure categories raised by the library. Every public operation that can
/// fail throws `cw::Error` carrying one of these.
enum class ErrorKind {
  DivisionByZero,
  NotRational,
  OrderBound,
  SizeBound,
  LiftFailure,
  NonIntegral,
  Negative,
  TrivialRep,
  GenusMismatch,
  CensusMismatch,
  NotPrime,
  TooSmall,
  Precondition,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotRational: return "NotRational";
    case ErrorKind::OrderBound: return "OrderBound";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::LiftFailure: return "LiftFailure";
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::Negative: return "Negative";
    case ErrorKind::TrivialRep: return "TrivialRep";
    case ErrorKind::GenusMismatch: return "GenusMismatch";
    case ErrorKind::CensusMismatch: return "CensusMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace cw
