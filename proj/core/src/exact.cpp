#include "sp4cert/exact.hpp"

#include <cctype>

#include "sp4cert/error.hpp"

namespace sp4cert {

bool is_odd_prime(long n) noexcept {
  if (n < 3 || n % 2 == 0) return false;
  for (long d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

OddPrime::OddPrime(long value) : value_(value) {
  if (!is_odd_prime(value)) {
    throw Error(Errc::BadPrime, std::to_string(value) + " is not an odd prime");
  }
}

GcdResult ext_gcd(const Int& a, const Int& b) {
  if (a == 0 && b == 0) throw Error(Errc::BothZero, "ext_gcd(0, 0) is undefined");
  GcdResult r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(Errc::DomainError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

bool divides(const Int& d, const Int& x) {
  return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

Int mod_floor(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int exact_div(const Int& a, const Int& b) {
  Int q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int to_int(const Rat& r) {
  if (!is_integer(r)) throw Error(Errc::DomainError, "rational " + to_string(r) + " is not integral");
  return r.get_num();
}

std::string to_string(const Int& v) { return v.get_str(10); }

std::string to_string(const Rat& v) {
  if (is_integer(v)) return v.get_num().get_str(10);
  return v.get_num().get_str(10) + "/" + v.get_den().get_str(10);
}

namespace {

// Canonical base-10 integer: optional '-', no leading zeros, no "-0".
bool canonical_integer(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-') {
    if (!allow_sign) return false;
    i = 1;
  }
  if (i == s.size()) return false;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  if (s[i] == '0' && s.size() - i > 1) return false;
  if (s[i] == '0' && i == 1) return false;
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto bad = [&](const char* why) {
    return Error(Errc::ParseError, "'" + std::string(text) + "': " + why);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!canonical_integer(text, true)) throw bad("not a canonical base-10 integer");
    return Rat(Int(std::string(text), 10));
  }
  const auto num_text = text.substr(0, slash);
  const auto den_text = text.substr(slash + 1);
  if (!canonical_integer(num_text, true) || !canonical_integer(den_text, false)) {
    throw bad("not a canonical num/den fraction");
  }
  Int num(std::string(num_text), 10);
  Int den(std::string(den_text), 10);
  if (den <= 1) throw bad("denominator must exceed 1");
  Int g;
  mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  if (g != 1) throw bad("fraction is not reduced");
  return Rat(num, den);
}

}  // namespace sp4cert
