#include "sp4cert/groups.hpp"

#include <utility>

#include "sp4cert/error.hpp"

namespace sp4cert {

namespace {

constexpr std::pair<GroupLabel, std::string_view> kLabelNames[] = {
    {GroupLabel::Sp4Z_J, "sp4z_j"},
    {GroupLabel::SpLambdaZ, "sp_lambda_z"},
    {GroupLabel::Gamma_1p, "gamma_1p"},
    {GroupLabel::Gamma0_1p, "gamma0_1p"},
    {GroupLabel::GammaTilde_1p, "gamma_tilde_1p"},
    {GroupLabel::Gamma_p2, "gamma_p2"},
    {GroupLabel::SL2Z, "sl2z"},
    {GroupLabel::Gamma1_of_p, "gamma1_of_p"},
    {GroupLabel::Gamma1prime_p2, "gamma1prime_p2"},
};

bool in_ideal(const Rat& x, const Int& modulus) { return is_integer(x) && divides(modulus, x.get_num()); }

// Entry allowed patterns, relative to some offset matrix: each slot holds the
// modulus m of mZ (so 1 means "any integer").
using Pattern = std::array<std::array<long, 4>, 4>;

bool matches(const Matrix4& m, const Pattern& pattern) {
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!in_ideal(m(r, c), Int(pattern[r][c]))) return false;
  return true;
}

bool in_gamma_1p(const Matrix4& m, OddPrime p) {
  const long q = p.value();
  const Pattern pattern = {{{1, 1, 1, q}, {q, q, q, q * q}, {1, 1, 1, q}, {1, 1, 1, q}}};
  return m.is_integral() && symplectic_check(m, SymplecticForm::J()) &&
         matches(m - Matrix4::identity(), pattern);
}

bool in_gamma0_1p(const Matrix4& m, OddPrime p) {
  const long q = p.value();
  if (!symplectic_check(m, SymplecticForm::J())) return false;
  // (4,2) lives in (1/p)Z: test p * entry instead.
  const Matrix4 scaled = m.with(3, 1, m(3, 1) * Rat(q));
  const Pattern pattern = {{{1, 1, 1, q}, {q, 1, q, q}, {1, 1, 1, q}, {1, 1, 1, 1}}};
  return matches(scaled, pattern);
}

bool in_gamma_tilde_1p(const Matrix4& m, OddPrime p) {
  if (!m.is_integral() || !symplectic_check(m, SymplecticForm::Lambda(p))) return false;
  const Int q = p.as_int();
  for (int c = 0; c < 4; ++c) {
    const Rat want2 = c == 1 ? 1 : 0;
    const Rat want4 = c == 3 ? 1 : 0;
    if (!divides(q, to_int(m(1, c) - want2)) || !divides(q, to_int(m(3, c) - want4))) return false;
  }
  return true;
}

bool in_gamma_p2(const Matrix4& m, OddPrime p) {
  if (!m.is_integral() || !symplectic_check(m, SymplecticForm::J())) return false;
  const Int q2 = p.as_int() * p.as_int();
  const Matrix4 diff = m - Matrix4::identity();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!divides(q2, diff(r, c).get_num())) return false;
  return true;
}

}  // namespace

std::string_view to_string(GroupLabel g) noexcept {
  for (const auto& [label, name] : kLabelNames)
    if (label == g) return name;
  return "unknown";
}

std::optional<GroupLabel> parse_group_label(std::string_view name) noexcept {
  for (const auto& [label, text] : kLabelNames)
    if (text == name) return label;
  return std::nullopt;
}

bool is_2x2(GroupLabel g) noexcept {
  return g == GroupLabel::SL2Z || g == GroupLabel::Gamma1_of_p || g == GroupLabel::Gamma1prime_p2;
}

std::string_view to_string(Coords c) noexcept { return c == Coords::Tilde ? "tilde" : "untilded"; }

std::optional<Coords> parse_coords(std::string_view name) noexcept {
  if (name == "tilde") return Coords::Tilde;
  if (name == "untilded") return Coords::Untilded;
  return std::nullopt;
}

SymplecticForm SymplecticForm::J() {
  return SymplecticForm(Matrix4{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
}

SymplecticForm SymplecticForm::Lambda(OddPrime p) {
  const long q = p.value();
  return SymplecticForm(Matrix4{{0, 0, 1, 0}, {0, 0, 0, q}, {-1, 0, 0, 0}, {0, -q, 0, 0}});
}

bool symplectic_check(const Matrix4& m, const SymplecticForm& form) {
  return m * form.matrix() * m.transpose() == form.matrix();
}

bool member(const Matrix4& m, GroupLabel g, OddPrime p) {
  switch (g) {
    case GroupLabel::Sp4Z_J: return m.is_integral() && symplectic_check(m, SymplecticForm::J());
    case GroupLabel::SpLambdaZ: return m.is_integral() && symplectic_check(m, SymplecticForm::Lambda(p));
    case GroupLabel::Gamma_1p: return in_gamma_1p(m, p);
    case GroupLabel::Gamma0_1p: return in_gamma0_1p(m, p);
    case GroupLabel::GammaTilde_1p: return in_gamma_tilde_1p(m, p);
    case GroupLabel::Gamma_p2: return in_gamma_p2(m, p);
    case GroupLabel::SL2Z:
    case GroupLabel::Gamma1_of_p:
    case GroupLabel::Gamma1prime_p2: break;
  }
  throw Error(Errc::ArityMismatch, std::string(to_string(g)) + " is a 2x2 group");
}

bool member(const Matrix2& m, GroupLabel g, OddPrime p) {
  if (!is_2x2(g)) throw Error(Errc::ArityMismatch, std::string(to_string(g)) + " is a 4x4 group");
  if (m.det() != 1) return false;
  const Int q = p.as_int();
  switch (g) {
    case GroupLabel::SL2Z: return true;
    case GroupLabel::Gamma1_of_p:
      return divides(q, m.a() - 1) && divides(q, m.b()) && divides(q, m.c()) && divides(q, m.d() - 1);
    case GroupLabel::Gamma1prime_p2: {
      const Int q2 = q * q;
      return divides(q2, m.a() - 1) && divides(q, m.b()) && divides(Int(q2 * q), m.c()) &&
             divides(q2, m.d() - 1);
    }
    default: break;
  }
  return false;
}

Matrix4 j1_embed(const Matrix2& a) {
  if (a.det() != 1) throw Error(Errc::NotUnimodular, "j1 needs det 1");
  std::array<Rat, 16> e = Matrix4::identity().entries();
  e[0] = a.a();
  e[2] = a.b();
  e[8] = a.c();
  e[10] = a.d();
  return Matrix4(e);
}

Matrix4 j2_embed(const Matrix2& q, OddPrime p, Coords coords) {
  if (q.det() != 1) throw Error(Errc::NotUnimodular, "j2 needs det 1");
  std::array<Rat, 16> e = Matrix4::identity().entries();
  e[5] = q.a();
  e[15] = q.d();
  if (coords == Coords::Tilde) {
    e[7] = q.b();
    e[13] = q.c();
  } else {
    e[7] = Rat(q.b() * p.as_int());
    e[13] = make_rat(q.c(), p.as_int());
  }
  return Matrix4(e);
}

Matrix4 r_conjugate(const Matrix4& m, OddPrime p, bool inverse) {
  // Entry (i,j) scales by r_i / r_j (or r_j / r_i); only row/column 4 move.
  const Rat q = p.as_int();
  std::array<Rat, 16> e = m.entries();
  for (int c = 0; c < 3; ++c) {
    if (inverse) {
      e[12 + c] /= q;
      e[c * 4 + 3] *= q;
    } else {
      e[12 + c] *= q;
      e[c * 4 + 3] /= q;
    }
  }
  return Matrix4(e);
}

VectorClass vector_class(const IntVector4& v, OddPrime p) {
  if (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0) throw Error(Errc::ZeroVector, "vector_class(0)");
  Int g;
  const Int q = p.as_int();
  mpz_gcd(g.get_mpz_t(), v[0].get_mpz_t(), v[2].get_mpz_t());
  const Int pv2 = q * v[1];
  const Int pv4 = q * v[3];
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pv2.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pv4.get_mpz_t());
  return g == 1 ? VectorClass::Short : VectorClass::Long;
}

IntVector4 integer_row(const Matrix4& m, int row) {
  return {to_int(m(row, 0)), to_int(m(row, 1)), to_int(m(row, 2)), to_int(m(row, 3))};
}

}  // namespace sp4cert
