#include "sp4cert/sl2.hpp"

#include <algorithm>

#include "sp4cert/error.hpp"
#include "sp4cert/groups.hpp"

namespace sp4cert {

Matrix2 sl2_T() { return {Int(1), Int(1), Int(0), Int(1)}; }
Matrix2 sl2_U() { return {Int(1), Int(0), Int(1), Int(1)}; }
Matrix2 sl2_S() { return {Int(0), Int(-1), Int(1), Int(0)}; }

namespace {

Matrix2 letter_power(Sl2Letter letter, const Int& e) {
  if (letter == Sl2Letter::T) return {Int(1), e, Int(0), Int(1)};
  return {Int(1), Int(0), e, Int(1)};
}

void append(std::vector<Sl2Syllable>& word, Sl2Letter letter, const Int& e) {
  if (e == 0) return;
  if (!word.empty() && word.back().letter == letter) {
    word.back().exponent += e;
    if (word.back().exponent == 0) word.pop_back();
    return;
  }
  word.push_back({letter, e});
}

void require_sl2(const Matrix2& a) {
  if (a.det() != 1) throw Error(Errc::NotUnimodular, "expected det 1, got " + to_string(a.det()));
}

}  // namespace

Matrix2 Sl2Word::replay() const {
  Matrix2 acc;
  for (const auto& s : syllables) acc = acc * letter_power(s.letter, s.exponent);
  return acc;
}

Sl2Word sl2_decompose(const Matrix2& a) {
  require_sl2(a);
  // Left-multiply by T^k (row1 += k row2) and U^k (row2 += k row1) until the
  // first column is (+-1, 0). With m = A_n..A_1 a, the word starts A_1^-1 .. A_n^-1.
  std::vector<Sl2Syllable> applied;
  Matrix2 m = a;
  auto apply = [&](Sl2Letter letter, const Int& k) {
    m = letter_power(letter, k) * m;
    applied.push_back({letter, k});
  };
  while (m.c() != 0) {
    if (m.a() == 0) {
      apply(Sl2Letter::T, m.c());  // c = +-1 here, so a becomes c^2 = 1
      continue;
    }
    const Int abs_a = abs(m.a());
    const Int abs_c = abs(m.c());
    Int q;
    if (abs_a > abs_c) {
      mpz_tdiv_q(q.get_mpz_t(), m.a().get_mpz_t(), m.c().get_mpz_t());
      apply(Sl2Letter::T, Int(-q));
    } else {
      mpz_tdiv_q(q.get_mpz_t(), m.c().get_mpz_t(), m.a().get_mpz_t());
      apply(Sl2Letter::U, Int(-q));
    }
  }

  std::vector<Sl2Syllable> word;
  for (const auto& s : applied) append(word, s.letter, Int(-s.exponent));
  if (m.a() == 1) {
    append(word, Sl2Letter::T, m.b());
  } else {
    // m = -T^{-b}; -I = (T^-1 U T^-1)^2.
    for (int i = 0; i < 2; ++i) {
      append(word, Sl2Letter::T, Int(-1));
      append(word, Sl2Letter::U, Int(1));
      append(word, Sl2Letter::T, Int(-1));
    }
    append(word, Sl2Letter::T, Int(-m.b()));
  }
  return Sl2Word{std::move(word)};
}

Matrix2 ConjugateList::replay() const {
  Matrix2 acc;
  for (const auto& f : factors) acc = acc * f.conjugator * sl2_T().pow(f.exponent) * f.conjugator.inverse();
  return acc;
}

std::vector<std::pair<Matrix2, int>> ConjugateList::sign_list() const {
  std::vector<std::pair<Matrix2, int>> out;
  for (const auto& f : factors) {
    const int sign = f.exponent > 0 ? 1 : -1;
    for (Int n = abs(f.exponent); n > 0; --n) out.emplace_back(f.conjugator, sign);
  }
  return out;
}

ConjugateList normal_closure_decompose(const Matrix2& a) {
  ConjugateList out;
  for (const auto& s : sl2_decompose(a).syllables) {
    if (s.letter == Sl2Letter::T) {
      out.factors.push_back({Matrix2::identity(), s.exponent});
    } else {
      out.factors.push_back({sl2_S(), Int(-s.exponent)});  // U^k = S T^-k S^-1
    }
  }
  return out;
}

Matrix2 Gamma1pSteps::replay(OddPrime p) const {
  const Matrix2 P = {Int(1), Int(0), p.as_int(), Int(1)};
  Matrix2 acc;
  for (const auto& step : steps) {
    if (const auto* s = std::get_if<MultiplyLeftP>(&step)) {
      acc = P.pow(s->exponent) * acc;
    } else if (const auto* s = std::get_if<MultiplyLeftPrime>(&step)) {
      acc = s->element * acc;
    } else {
      const auto& by = std::get<ConjugateBy>(step).by;
      acc = by * acc * by.inverse();
    }
  }
  return acc;
}

namespace {

// q = (lambda p + 1, alpha p; beta p, mu p + 1).
struct Gamma1Coords {
  Int lambda, alpha, beta, mu;
};

Gamma1Coords coords_of(const Matrix2& q, const Int& p) {
  return {exact_div(Int(q.a() - 1), p), exact_div(q.b(), p), exact_div(q.c(), p), exact_div(Int(q.d() - 1), p)};
}

void generate(const Matrix2& q, OddPrime p, int depth, Gamma1pSteps& out) {
  const Int pp = p.as_int();
  const Gamma1Coords x = coords_of(q, pp);
  out.depth = std::max(out.depth, depth);

  if (divides(pp, x.lambda)) {
    // P^-beta q lies in Gamma'_1(p^2), so q = P^beta (P^-beta q).
    const Matrix2 P = {Int(1), Int(0), pp, Int(1)};
    const Matrix2 rest = P.pow(Int(-x.beta)) * q;
    if (!member(rest, GroupLabel::Gamma1prime_p2, p)) {
      throw Error(Errc::InternalPredicateFailure, "P^-beta q left Gamma'_1(p^2)");
    }
    if (!rest.is_identity()) out.steps.push_back(MultiplyLeftPrime{rest});
    if (x.beta != 0) out.steps.push_back(MultiplyLeftP{x.beta});
    return;
  }

  if (!divides(pp, x.alpha)) {
    // p | (lambda - k alpha); conjugating by C = (1 0; k 1) lands in case 1.
    Int alpha_inv;
    mpz_invert(alpha_inv.get_mpz_t(), x.alpha.get_mpz_t(), pp.get_mpz_t());
    const Int k = mod_floor(Int(x.lambda * alpha_inv), pp);
    const Matrix2 C = {Int(1), Int(0), k, Int(1)};
    const Matrix2 C_inv = {Int(1), Int(0), Int(-k), Int(1)};
    generate(C * q * C_inv, p, depth + 1, out);
    out.steps.push_back(ConjugateBy{C_inv});
    return;
  }

  // p | alpha: (1 p; 0 1) q has alpha' = alpha + mu p + 1, prime to p.
  const Matrix2 shift = {Int(1), pp, Int(0), Int(1)};
  generate(shift * q, p, depth + 1, out);
  out.steps.push_back(MultiplyLeftPrime{shift.inverse()});
}

}  // namespace

Gamma1pSteps gamma1p_generate(const Matrix2& q, OddPrime p) {
  if (!member(q, GroupLabel::Gamma1_of_p, p)) throw Error(Errc::NotInGroup, "matrix is not in Gamma_1(p)");
  Gamma1pSteps out;
  out.target = q;
  generate(q, p, 1, out);
  return out;
}

}  // namespace sp4cert
