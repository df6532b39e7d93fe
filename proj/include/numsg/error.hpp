#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace numsg {

using Integer = std::int64_t;

enum class ErrorCode {
  EmptyInput,
  NonCoprime,
  NotInSemigroup,
  Overflow,
  DimensionMismatch,
  InvalidArgument,
  InternalClosureViolation,
  NotArtinian,
  DegreeCollision,
  Internal,
};

// Machine-parsable prefix printed by the CLI on the diagnostic stream.
constexpr std::string_view error_tag(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "E_EMPTY";
    case ErrorCode::NonCoprime: return "E_GCD";
    case ErrorCode::NotInSemigroup: return "E_NOT_IN_SEMIGROUP";
    case ErrorCode::Overflow: return "E_OVERFLOW";
    case ErrorCode::DimensionMismatch: return "E_DIMENSION";
    case ErrorCode::InvalidArgument: return "E_ARGUMENT";
    case ErrorCode::InternalClosureViolation: return "E_CLOSURE";
    case ErrorCode::NotArtinian: return "E_NOT_ARTINIAN";
    case ErrorCode::DegreeCollision: return "E_COLLISION";
    case ErrorCode::Internal: return "E_INTERNAL";
  }
  return "E_UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view tag() const noexcept { return error_tag(code_); }

 private:
  ErrorCode code_;
};

inline Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in addition");
  return out;
}

inline Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication");
  return out;
}

}  // namespace numsg
