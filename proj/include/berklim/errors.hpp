#pragma once

#include <stdexcept>
#include <string>

namespace berklim {

// Error categories. The CLI maps each kind to a distinct exit code.
enum class ErrorKind {
  InvalidInput,     // malformed or inconsistent caller data
  DivisionByZero,   // inversion / root of the zero series
  RamificationCap,  // a root demanded a larger extension than configured
  SolverFailure,    // iteration cap hit, non-convergent branch
  SncViolation,     // model validation failed
  PoleInDisk,       // image of a disk containing a pole was requested
  MassOnDivisor,    // measure has mass on a divisorial point
  Precondition,     // operation precondition violated (reduction type, seeds, ...)
  Config,           // bad run configuration (epsilon too large, ...)
  NotInJulia,       // forward orbit escaped the itinerary region
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::RamificationCap: return "ramification-cap";
    case ErrorKind::SolverFailure: return "solver-failure";
    case ErrorKind::SncViolation: return "snc-violation";
    case ErrorKind::PoleInDisk: return "pole-in-disk";
    case ErrorKind::MassOnDivisor: return "mass-on-divisor";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Config: return "config";
    case ErrorKind::NotInJulia: return "not-in-julia";
  }
  return "unknown";
}

}  // namespace berklim
