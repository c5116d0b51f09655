#ifndef FPTI_ERROR_HPP
#define FPTI_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fpti {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  NotPrime,
  DuplicateVariable,
  InvalidVariable,
  InvalidArgument,
  ParseError,
  CtxMismatch,
  RankMismatch,
  ExponentOverflow,
  ResourceCap,
  IterationCap,
  StabilizationCapExceeded,
  NoTestElement,
  BoundsExceeded,
  InvariantViolation,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::DuplicateVariable: return "DuplicateVariable";
    case ErrorKind::InvalidVariable: return "InvalidVariable";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CtxMismatch: return "CtxMismatch";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::ExponentOverflow: return "ExponentOverflow";
    case ErrorKind::ResourceCap: return "ResourceCap";
    case ErrorKind::IterationCap: return "IterationCap";
    case ErrorKind::StabilizationCapExceeded: return "StabilizationCapExceeded";
    case ErrorKind::NoTestElement: return "NoTestElement";
    case ErrorKind::BoundsExceeded: return "BoundsExceeded";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Resource guards shared by the Gröbner engine and the fixed-point loops.
struct Limits {
  std::size_t max_pairs = 500000;     // pending S-pairs
  std::size_t max_terms = 2000000;    // terms in a single vector
  int star_iterations = 64;
};

}  // namespace fpti

#endif  // FPTI_ERROR_HPP
