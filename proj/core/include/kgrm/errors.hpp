#pragma once

#include <stdexcept>
#include <string>

namespace kgrm {

/// Classified failure modes. The CLI maps these onto process exit codes:
/// validation-type failures exit 2, numerical failures exit 3.
enum class ErrorKind {
  Validation,           // bad configuration or scenario input
  Domain,               // argument outside a physical precondition
  Misuse,               // operation called in an incompatible mode
  Integrity,            // data violates an invariant (NaN, negative density, ...)
  Parse,                // malformed scenario/sidecar text
  Io,                   // file system failure
  Divergence,           // time integration blew up
  SingularDenominator,  // wave-velocity denominator below threshold
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  const char* kind_name() const noexcept {
    switch (kind_) {
      case ErrorKind::Validation: return "validation";
      case ErrorKind::Domain: return "domain";
      case ErrorKind::Misuse: return "misuse";
      case ErrorKind::Integrity: return "integrity";
      case ErrorKind::Parse: return "parse";
      case ErrorKind::Io: return "io";
      case ErrorKind::Divergence: return "divergence";
      case ErrorKind::SingularDenominator: return "singular_denominator";
    }
    return "unknown";
  }

  int exit_code() const noexcept {
    switch (kind_) {
      case ErrorKind::Divergence:
      case ErrorKind::SingularDenominator:
        return 3;
      default:
        return 2;
    }
  }

 private:
  ErrorKind kind_;
};

}  // namespace kgrm
