#pragma once

// Constructive SL(2,Z) algorithms over T = (1 1; 0 1) and U = (1 0; 1 1):
// Euclidean word decomposition, decomposition as a product of conjugates of
// T^e, and the step-by-step generation of Gamma_1(p) from P = (1 0; p 1),
// Gamma'_1(p^2) and SL(2,Z)-conjugation.

#include <utility>
#include <variant>
#include <vector>

#include "sp4cert/matrix.hpp"

namespace sp4cert {

Matrix2 sl2_T();
Matrix2 sl2_U();
/// S = (0 -1; 1 0) = T^-1 U T^-1.
Matrix2 sl2_S();

enum class Sl2Letter { T, U };

struct Sl2Syllable {
  Sl2Letter letter;
  Int exponent;  // nonzero
  friend bool operator==(const Sl2Syllable&, const Sl2Syllable&) = default;
};

struct Sl2Word {
  std::vector<Sl2Syllable> syllables;
  Matrix2 replay() const;
};

/// Throws NotUnimodular unless det(a) = 1.
Sl2Word sl2_decompose(const Matrix2& a);

/// One factor conjugator * T^exponent * conjugator^-1.
struct TConjugate {
  Matrix2 conjugator;
  Int exponent;  // nonzero
};

struct ConjugateList {
  std::vector<TConjugate> factors;
  Matrix2 replay() const;
  /// Unrolled view: one (conjugator, +-1) pair per factor of T^{+-1}.
  std::vector<std::pair<Matrix2, int>> sign_list() const;
};

/// Each U^k of sl2_decompose is rewritten as S T^-k S^-1. Throws NotUnimodular.
ConjugateList normal_closure_decompose(const Matrix2& a);

/// acc <- P^exponent * acc
struct MultiplyLeftP {
  Int exponent;
};
/// acc <- element * acc, element in Gamma'_1(p^2)
struct MultiplyLeftPrime {
  Matrix2 element;
};
/// acc <- by * acc * by^-1, by in SL(2,Z)
struct ConjugateBy {
  Matrix2 by;
};

using Gamma1pStep = std::variant<MultiplyLeftP, MultiplyLeftPrime, ConjugateBy>;

struct Gamma1pSteps {
  Matrix2 target;
  std::vector<Gamma1pStep> steps;  // applied in order, starting from the identity
  int depth = 0;                   // 1, 2 or 3: which case the target entered at
  Matrix2 replay(OddPrime p) const;
};

/// Throws NotInGroup unless q lies in Gamma_1(p).
Gamma1pSteps gamma1p_generate(const Matrix2& q, OddPrime p);

}  // namespace sp4cert
