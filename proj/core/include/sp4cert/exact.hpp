#pragma once

// Exact scalars. Integers and rationals are GMP values; rationals are kept
// canonical (reduced, positive denominator) by every operation here.

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sp4cert {

using Int = mpz_class;
using Rat = mpq_class;

/// An odd rational prime. Construction validates, so every function taking an
/// OddPrime can assume the precondition.
class OddPrime {
 public:
  explicit OddPrime(long value);

  long value() const noexcept { return value_; }
  Int as_int() const { return Int(value_); }

  friend bool operator==(OddPrime, OddPrime) = default;

 private:
  long value_;
};

bool is_odd_prime(long n) noexcept;

struct GcdResult {
  Int g;
  Int x;
  Int y;
};

/// g = gcd(a, b) > 0 with a*x + b*y = g. Throws BothZero for (0, 0).
GcdResult ext_gcd(const Int& a, const Int& b);

/// Canonical num/den; throws DomainError on a zero denominator.
Rat make_rat(const Int& num, const Int& den);

bool is_integer(const Rat& r);

/// True when d divides x (d != 0).
bool divides(const Int& d, const Int& x);

/// Least nonnegative residue of a modulo m (m > 0).
Int mod_floor(const Int& a, const Int& m);

/// Exact quotient a / b; the caller guarantees b | a.
Int exact_div(const Int& a, const Int& b);

/// Integer part of a rational known to be integral.
Int to_int(const Rat& r);

std::string to_string(const Int& v);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const Rat& v);

/// Strict inverse of to_string(Rat): accepts only the canonical spelling,
/// which keeps the interchange format bit-exact. Throws ParseError.
Rat parse_rat(std::string_view text);

}  // namespace sp4cert
