#include "sp4cert/decompose.hpp"

#include <algorithm>
#include <sstream>

#include "json_support.hpp"
#include "sp4cert/error.hpp"

namespace sp4cert {

Matrix4 letter_matrix(const Letter& letter, OddPrime p, Coords coords) {
  if (const auto* n = std::get_if<NamedLetter>(&letter)) {
    const GenName name = coords == Coords::Tilde ? tilde_of(n->name) : untilde_of(n->name);
    return generator4(name, p).pow(n->exponent);
  }
  if (const auto* j = std::get_if<J1Letter>(&letter)) return j1_embed(j->a);
  return j2_embed(std::get<J2Letter>(letter).q, p, coords);
}

Letter inverse_letter(const Letter& letter) {
  if (const auto* n = std::get_if<NamedLetter>(&letter)) return NamedLetter{n->name, Int(-n->exponent)};
  if (const auto* j = std::get_if<J1Letter>(&letter)) return J1Letter{j->a.inverse()};
  return J2Letter{std::get<J2Letter>(letter).q.inverse()};
}

bool operator==(const Letter& x, const Letter& y) {
  if (x.index() != y.index()) return false;
  if (const auto* n = std::get_if<NamedLetter>(&x)) {
    const auto& m = std::get<NamedLetter>(y);
    return n->name == m.name && n->exponent == m.exponent;
  }
  if (const auto* j = std::get_if<J1Letter>(&x)) return j->a == std::get<J1Letter>(y).a;
  return std::get<J2Letter>(x).q == std::get<J2Letter>(y).q;
}

Matrix4 GeneratorWord::replay() const {
  Matrix4 acc = Matrix4::identity();
  for (const auto& l : letters) acc = acc * letter_matrix(l, p, coords);
  return acc;
}

namespace {

// Applies right multipliers to a running matrix and logs them.
class Reducer {
 public:
  Reducer(const Matrix4& k, OddPrime p) : p_(p), current_(k), log_{p, Coords::Tilde, {}} {}

  void apply(Letter letter) {
    if (const auto* n = std::get_if<NamedLetter>(&letter); n && n->exponent == 0) return;
    if (const auto* j = std::get_if<J1Letter>(&letter); j && j->a.is_identity()) return;
    if (const auto* j = std::get_if<J2Letter>(&letter); j && j->q.is_identity()) return;
    current_ = current_ * letter_matrix(letter, p_, Coords::Tilde);
    log_.letters.push_back(std::move(letter));
  }

  void named(GenName name, const Int& exponent) { apply(NamedLetter{name, exponent}); }

  IntVector4 first_row() const { return integer_row(current_, 0); }
  const Matrix4& current() const { return current_; }
  GeneratorWord& log() { return log_; }

 private:
  OddPrime p_;
  Matrix4 current_;
  GeneratorWord log_;
};

void reduce_row(Reducer& red, OddPrime p, std::vector<Int>& potentials) {
  const Int pp = p.as_int();
  // Each round the gcd of (v1, v3) drops to a proper divisor, so the number of
  // rounds is bounded by the number of prime factors of the first gcd.
  for (int round = 0; round < 4096; ++round) {
    IntVector4 v = red.first_row();
    if (v[2] != 0 || v[0] <= 0) {
      // j~1(A) with (v1, v3) A = (g, 0).
      const GcdResult e = ext_gcd(v[0], v[2]);
      red.apply(J1Letter{{e.x, Int(-exact_div(v[2], e.g)), e.y, exact_div(v[0], e.g)}});
      v = red.first_row();
    }
    const Int g = v[0];
    potentials.push_back(g);
    if (g == 1) {
      red.named(GenName::Mt3, Int(-v[1]));  // v2 -> 0
      red.named(GenName::Mt2, Int(-v[3]));  // v4 -> 0, v3 unchanged since v2 = 0
      v = red.first_row();
      red.apply(J1Letter{{Int(1), Int(-v[2]), Int(0), Int(1)}});
      return;
    }
    if (!divides(g, Int(pp * v[1]))) {
      red.named(GenName::Mt2, Int(1));  // v3 = p v2
    } else if (!divides(g, Int(pp * v[3]))) {
      red.named(GenName::Mt3, Int(1));  // v3 = -p v4
    } else {
      throw Error(Errc::LongFirstRow, "first row has gcd(v1, p v2, v3, p v4) = " + to_string(g));
    }
  }
  throw Error(Errc::ShapeAssertionFailed, "row reduction did not terminate");
}

}  // namespace

RowReduction reduce_first_row(const Matrix4& k, OddPrime p) {
  if (!member(k, GroupLabel::GammaTilde_1p, p)) throw Error(Errc::NotInGroup, "matrix is not in Gamma~_{1,p}");
  if (vector_class(integer_row(k, 0), p) == VectorClass::Long) {
    throw Error(Errc::LongFirstRow, "first row of a Gamma~_{1,p} member is long");
  }
  Reducer red(k, p);
  RowReduction out{{p, Coords::Tilde, {}}, k, {}};
  reduce_row(red, p, out.potentials);
  out.multipliers = red.log();
  out.reduced = red.current();
  if (out.reduced.row(0) != Matrix4::identity().row(0)) {
    throw Error(Errc::ShapeAssertionFailed, "row reduction did not reach (1,0,0,0)");
  }
  return out;
}

namespace {

// Appends a letter, merging it into the previous one when both are powers of
// the same generator or both lie in the image of the same embedding.
void append_merged(std::vector<Letter>& word, Letter letter) {
  if (!word.empty()) {
    Letter& last = word.back();
    bool merged = true;
    bool trivial = false;
    if (auto* a = std::get_if<NamedLetter>(&last), *b = std::get_if<NamedLetter>(&letter); a && b && a->name == b->name) {
      a->exponent += b->exponent;
      trivial = a->exponent == 0;
    } else if (auto* x = std::get_if<J1Letter>(&last), *y = std::get_if<J1Letter>(&letter); x && y) {
      x->a = x->a * y->a;
      trivial = x->a.is_identity();
    } else if (auto* u = std::get_if<J2Letter>(&last), *v = std::get_if<J2Letter>(&letter); u && v) {
      u->q = u->q * v->q;
      trivial = u->q.is_identity();
    } else {
      merged = false;
    }
    if (merged) {
      if (trivial) word.pop_back();
      return;
    }
  }
  word.push_back(std::move(letter));
}

Decomposition decompose_tilde(const Matrix4& k, OddPrime p) {
  const Int pp = p.as_int();
  Reducer red(k, p);
  Decomposition out{{p, Coords::Tilde, {}}, J2Arrangement::None, {}};
  reduce_row(red, p, out.potentials);

  auto shape_fail = [](const std::string& what) { return Error(Errc::ShapeAssertionFailed, what); };
  {
    const Matrix4& K = red.current();
    if (K.row(0) != Matrix4::identity().row(0)) throw shape_fail("first row is not (1,0,0,0)");
    if (K(1, 2) != 0 || K(2, 2) != 1 || K(3, 2) != 0) throw shape_fail("third column is not (0,0,1,0)");
  }

  // Clear the (2,4) block with a j~2 factor; try both readings of the block.
  const Matrix4 K = red.current();
  const Matrix2 direct = {to_int(K(1, 1)), to_int(K(1, 3)), to_int(K(3, 1)), to_int(K(3, 3))};
  bool cleared = false;
  for (const auto& [candidate, arrangement] :
       {std::pair{direct, J2Arrangement::Direct}, std::pair{direct.transpose(), J2Arrangement::Transposed}}) {
    if (candidate.det() != 1 || !member(candidate, GroupLabel::Gamma1_of_p, p)) continue;
    const Matrix4 trial = K * j2_embed(candidate.inverse(), p, Coords::Tilde);
    if (trial(1, 1) == 1 && trial(1, 3) == 0 && trial(3, 1) == 0 && trial(3, 3) == 1) {
      red.apply(J2Letter{candidate.inverse()});
      out.arrangement = arrangement;
      cleared = true;
      break;
    }
  }
  if (!cleared) throw shape_fail("no j~2 factor clears the (2,4) block");

  // Now rows are (1,0,0,0), (-np,1,0,0), (*,m,1,n), (mp,0,0,1).
  const Matrix4& C = red.current();
  const Int m = to_int(C(2, 1));
  const Int n = to_int(C(2, 3));
  if (C(1, 0) != Rat(Int(-n * pp)) || C(3, 0) != Rat(Int(m * pp))) throw shape_fail("residue is not of the form (m, n)");
  red.named(GenName::Mt4, Int(-n));
  red.named(GenName::Mt1, Int(-m));

  const Matrix4& F = red.current();
  const Int x = to_int(F(2, 0));
  const Matrix2 rest = {Int(1), Int(0), x, Int(1)};
  if (F != j1_embed(rest)) throw shape_fail("remainder is not in j~1(SL(2,Z))");

  // k * X1 ... Xn = j1(rest)  =>  k = j1(rest) Xn^-1 ... X1^-1.
  if (!rest.is_identity()) append_merged(out.word.letters, J1Letter{rest});
  const auto& log = red.log().letters;
  for (auto it = log.rbegin(); it != log.rend(); ++it) append_merged(out.word.letters, inverse_letter(*it));
  return out;
}

}  // namespace

Decomposition decompose_traced(const Matrix4& k, OddPrime p, Coords coords) {
  if (coords == Coords::Tilde) {
    if (!member(k, GroupLabel::GammaTilde_1p, p)) throw Error(Errc::NotInGroup, "matrix is not in Gamma~_{1,p}");
    return decompose_tilde(k, p);
  }
  if (!member(k, GroupLabel::Gamma_1p, p)) throw Error(Errc::NotInGroup, "matrix is not in Gamma_{1,p}");
  Decomposition out = decompose_tilde(r_conjugate(k, p), p);
  // R^-1 Mti R = Mi, R^-1 j~1(A) R = j1(A), R^-1 j~2(Q) R = j2(Q).
  out.word.coords = Coords::Untilded;
  for (auto& l : out.word.letters) {
    if (auto* n = std::get_if<NamedLetter>(&l)) n->name = untilde_of(n->name);
  }
  return out;
}

GeneratorWord decompose(const Matrix4& k, OddPrime p, Coords coords) { return decompose_traced(k, p, coords).word; }

// ---- serialisation ---------------------------------------------------------

std::string serialize_word(const GeneratorWord& word) {
  using detail::Json;
  std::ostringstream out;
  out << "{\n  \"p\": " << word.p.value() << ",\n  \"coords\": " << Json(std::string(to_string(word.coords))).dump()
      << ",\n  \"letters\": [";
  bool first = true;
  for (const auto& l : word.letters) {
    Json j = Json::object();
    if (const auto* n = std::get_if<NamedLetter>(&l)) {
      j["gen"] = std::string(to_string(n->name));
      j["exp"] = detail::int_to_json(n->exponent);
    } else if (const auto* a = std::get_if<J1Letter>(&l)) {
      j["j1"] = detail::to_json(a->a);
    } else {
      j["j2"] = detail::to_json(std::get<J2Letter>(l).q);
    }
    out << (first ? "\n    " : ",\n    ") << j.dump();
    first = false;
  }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

GeneratorWord parse_word(std::string_view text) {
  using detail::Json;
  const Json j = detail::parse_json_text(text);
  const long p_value = detail::require_long(detail::require_field(j, "p", ""), "/p");
  std::optional<OddPrime> p;
  try {
    p.emplace(p_value);
  } catch (const Error& e) {
    detail::parse_fail("/p", e.what());
  }
  const Json& coords_json = detail::require_field(j, "coords", "");
  if (!coords_json.is_string()) detail::parse_fail("/coords", "expected a string");
  const auto coords = parse_coords(coords_json.get<std::string>());
  if (!coords) detail::parse_fail("/coords", "expected \"tilde\" or \"untilded\"");

  GeneratorWord word{*p, *coords, {}};
  const Json& letters = detail::require_field(j, "letters", "");
  if (!letters.is_array()) detail::parse_fail("/letters", "expected an array");
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const std::string at = "/letters/" + std::to_string(i);
    const Json& l = letters[i];
    if (!l.is_object()) detail::parse_fail(at, "expected an object");
    if (l.contains("gen")) {
      const Json& g = l["gen"];
      if (!g.is_string()) detail::parse_fail(at + "/gen", "expected a string");
      GenName name;
      try {
        name = parse_gen_name(g.get<std::string>());
      } catch (const Error& e) {
        detail::parse_fail(at + "/gen", e.what());
      }
      const bool allowed = word.coords == Coords::Tilde
                               ? (name == GenName::Mt1 || name == GenName::Mt2 || name == GenName::Mt3 || name == GenName::Mt4)
                               : (name == GenName::M1 || name == GenName::M2 || name == GenName::M3 || name == GenName::M4);
      if (!allowed) detail::parse_fail(at + "/gen", "generator not in this alphabet");
      word.letters.push_back(NamedLetter{name, detail::int_from_json(detail::require_field(l, "exp", at), at + "/exp")});
    } else if (l.contains("j1")) {
      const Matrix2 a = detail::matrix2_from_json(l["j1"], at + "/j1");
      if (a.det() != 1) detail::parse_fail(at + "/j1", "payload is not in SL(2,Z)");
      word.letters.push_back(J1Letter{a});
    } else if (l.contains("j2")) {
      const Matrix2 q = detail::matrix2_from_json(l["j2"], at + "/j2");
      if (!member(q, GroupLabel::Gamma1_of_p, *p)) detail::parse_fail(at + "/j2", "payload is not in Gamma_1(p)");
      word.letters.push_back(J2Letter{q});
    } else {
      detail::parse_fail(at, "expected one of gen, j1, j2");
    }
  }
  return word;
}

}  // namespace sp4cert
