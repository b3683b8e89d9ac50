#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sp4cert {

enum class Errc {
  SingularMatrix,
  BothZero,
  BadPrime,
  NotUnimodular,
  ZeroVector,
  ArityMismatch,
  UnknownName,
  NotInGroup,
  LongFirstRow,
  ShapeAssertionFailed,
  MalformedDag,
  ParseError,
  DomainError,
  InternalPredicateFailure,
};

std::string_view to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sp4cert
