#pragma once

// Constructive word problem for Gamma_{1,p}: write an element as a word over
// the named generators M1..M4 (Mt1..Mt4 in Lambda-coordinates) together with
// the embedded images j1(SL(2,Z)) and j2(Gamma_1(p)).
//
// The work happens in Lambda-coordinates (Gamma~_{1,p} = R Gamma_{1,p} R^-1).
// Right multipliers first bring the first row to (1,0,0,0), then clear the
// (2,4)-block with a j~2 factor, then M~4^-n M~1^-m, leaving a j~1 element.
// The logged multipliers, reversed and inverted, give the word.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sp4cert/generators.hpp"
#include "sp4cert/groups.hpp"

namespace sp4cert {

struct NamedLetter {
  GenName name;  // M1..M4 or Mt1..Mt4
  Int exponent;
};

struct J1Letter {
  Matrix2 a;  // SL(2,Z)
};

struct J2Letter {
  Matrix2 q;  // Gamma_1(p)
};

using Letter = std::variant<NamedLetter, J1Letter, J2Letter>;

struct GeneratorWord {
  OddPrime p;
  Coords coords;
  std::vector<Letter> letters;

  /// Ordered product of the letters, left to right.
  Matrix4 replay() const;
};

Matrix4 letter_matrix(const Letter& letter, OddPrime p, Coords coords);
Letter inverse_letter(const Letter& letter);
bool operator==(const Letter& x, const Letter& y);

struct RowReduction {
  GeneratorWord multipliers;  // right multipliers in application order (tilde)
  Matrix4 reduced;            // k * multipliers..., first row (1,0,0,0)
  /// gcd(v1, v3) at the start of each round; strictly decreasing.
  std::vector<Int> potentials;
};

/// k must lie in Gamma~_{1,p} (NotInGroup otherwise).
RowReduction reduce_first_row(const Matrix4& k, OddPrime p);

enum class J2Arrangement { None, Direct, Transposed };

struct Decomposition {
  GeneratorWord word;
  J2Arrangement arrangement = J2Arrangement::None;
  std::vector<Int> potentials;
};

/// Full decomposition with diagnostics. k must lie in Gamma_{1,p}
/// (untilded) or Gamma~_{1,p} (tilde).
Decomposition decompose_traced(const Matrix4& k, OddPrime p, Coords coords);
GeneratorWord decompose(const Matrix4& k, OddPrime p, Coords coords);

/// JSON: {"p", "coords", "letters": [{"gen","exp"} | {"j1"} | {"j2"}]}.
std::string serialize_word(const GeneratorWord& word);
GeneratorWord parse_word(std::string_view json);

}  // namespace sp4cert
