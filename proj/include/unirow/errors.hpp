#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace unirow {

/// Machine-readable failure categories. Every domain failure maps to exactly
/// one code; the CLI prints the code name and uses it to pick the exit status.
enum class ErrorCode {
  Structural,               // shape, index or variable-list mismatch
  DivisionByZero,
  NotUnimodularWithWitness, // sum a_i b_i - 1 does not reduce to zero
  NotUnimodular,            // Euclid found a non-unit gcd
  NotAnInverse,             // supplied inverse/prefix witness is wrong
  ContextMismatch,          // rings do not fit together (lifting, embedding)
  InvalidCertificate,
  NotOnVariety,
  CannotNormalize,
  ZeroVector,
  Antipodal,
  Undersampled,
  DegenerateLoop,
  PathVanishes,             // sampled homotopy hits the origin
  Syntax,
  Usage,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Parse failure; `position` is the 0-based offset into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error(ErrorCode::Syntax, message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Witness identity failed; carries the printed residual sum a_i b_i - 1.
class NotUnimodularError : public Error {
 public:
  NotUnimodularError(ErrorCode code, const std::string& message, std::string residual)
      : Error(code, message), residual_(std::move(residual)) {}

  const std::string& residual() const noexcept { return residual_; }

 private:
  std::string residual_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Structural: return "Structural";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NotUnimodularWithWitness: return "NotUnimodularWithWitness";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotAnInverse: return "NotAnInverse";
    case ErrorCode::ContextMismatch: return "ContextMismatch";
    case ErrorCode::InvalidCertificate: return "InvalidCertificate";
    case ErrorCode::NotOnVariety: return "NotOnVariety";
    case ErrorCode::CannotNormalize: return "CannotNormalize";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Antipodal: return "Antipodal";
    case ErrorCode::Undersampled: return "Undersampled";
    case ErrorCode::DegenerateLoop: return "DegenerateLoop";
    case ErrorCode::PathVanishes: return "PathVanishes";
    case ErrorCode::Syntax: return "Syntax";
    case ErrorCode::Usage: return "Usage";
  }
  return "Unknown";
}

}  // namespace unirow
