#include "sp4cert/sampling.hpp"

#include <sstream>

#include "sp4cert/error.hpp"
#include "sp4cert/generators.hpp"

namespace sp4cert {

std::string describe(const SampleSpec& spec) {
  std::ostringstream out;
  out << "group=" << to_string(spec.group) << " p=" << spec.p.value() << " seed=" << spec.seed
      << " word_length=" << spec.word_length;
  return out.str();
}

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

long Rng::nonzero(long bound) {
  const long v = uniform(1, bound);
  return uniform(0, 1) == 0 ? v : -v;
}

namespace {

Matrix2 random_sl2(Rng& rng, std::size_t length) {
  Matrix2 acc;
  for (std::size_t i = 0; i < length; ++i) {
    const Int e(rng.nonzero(3));
    acc = acc * (rng.uniform(0, 1) == 0 ? Matrix2(Int(1), e, Int(0), Int(1)) : Matrix2(Int(1), Int(0), e, Int(1)));
  }
  return acc;
}

Matrix2 random_gamma1(Rng& rng, OddPrime p, std::size_t length) {
  const Int q = p.as_int();
  Matrix2 acc;
  for (std::size_t i = 0; i < length; ++i) {
    const Int e(rng.nonzero(2));
    Matrix2 x = rng.uniform(0, 1) == 0 ? Matrix2(Int(1), Int(q * e), Int(0), Int(1))
                                       : Matrix2(Int(1), Int(0), Int(q * e), Int(1));
    if (rng.uniform(0, 1) == 0) {
      const Matrix2 g = random_sl2(rng, static_cast<std::size_t>(rng.uniform(1, 3)));
      x = g * x * g.inverse();
    }
    acc = acc * x;
  }
  return acc;
}

Matrix2 random_gamma1_prime(Rng& rng, OddPrime p, std::size_t length) {
  const Int q = p.as_int();
  Matrix2 acc;
  for (std::size_t i = 0; i < length; ++i) {
    const Int e(rng.nonzero(2));
    acc = acc * (rng.uniform(0, 1) == 0 ? Matrix2(Int(1), Int(q * e), Int(0), Int(1))
                                        : Matrix2(Int(1), Int(0), Int(q * q * q * e), Int(1)));
  }
  return acc;
}

// Elementary symplectic matrices for J with parameter t.
Matrix4 elementary_symplectic(Rng& rng, const Int& t) {
  auto unit = [](int r, int c) { return Matrix4::unit(r, c); };
  Matrix4 x;
  switch (rng.uniform(0, 7)) {
    case 0: x = unit(0, 2); break;
    case 1: x = unit(1, 3); break;
    case 2: x = unit(0, 3) + unit(1, 2); break;
    case 3: x = unit(2, 0); break;
    case 4: x = unit(3, 1); break;
    case 5: x = unit(2, 1) + unit(3, 0); break;
    case 6: x = unit(0, 1) - unit(3, 2); break;
    default: x = unit(1, 0) - unit(2, 3); break;
  }
  return Matrix4::identity() + Rat(t) * x;
}

Matrix4 random_gamma_1p_letter(Rng& rng, OddPrime p) {
  static constexpr GenName kNamed[] = {GenName::M0, GenName::M1, GenName::M2, GenName::M3, GenName::M4};
  switch (rng.uniform(0, 6)) {
    case 0:
    case 1:
    case 2:
    case 3:
    case 4: return generator4(kNamed[rng.uniform(0, 4)], p).pow(Int(rng.nonzero(2)));
    case 5: return j1_embed(random_sl2(rng, static_cast<std::size_t>(rng.uniform(1, 3))));
    default:
      return j2_embed(random_gamma1(rng, p, static_cast<std::size_t>(rng.uniform(1, 2))), p, Coords::Untilded);
  }
}

Matrix4 random_gamma_1p(Rng& rng, OddPrime p, std::size_t length) {
  Matrix4 acc = Matrix4::identity();
  for (std::size_t i = 0; i < length; ++i) acc = acc * random_gamma_1p_letter(rng, p);
  return acc;
}

Matrix4 sample_4x4(const SampleSpec& spec, Rng& rng) {
  const OddPrime p = spec.p;
  const std::size_t n = spec.word_length;
  Matrix4 acc = Matrix4::identity();
  switch (spec.group) {
    case GroupLabel::Gamma_1p: return random_gamma_1p(rng, p, n);
    case GroupLabel::GammaTilde_1p: return r_conjugate(random_gamma_1p(rng, p, n), p);
    case GroupLabel::Gamma0_1p:
      for (std::size_t i = 0; i < n; ++i) {
        acc = acc * (rng.uniform(0, 3) == 0
                         ? j2_embed(random_sl2(rng, static_cast<std::size_t>(rng.uniform(1, 2))), p, Coords::Untilded)
                         : random_gamma_1p_letter(rng, p));
      }
      return acc;
    case GroupLabel::Gamma_p2: {
      const Int p2 = p.as_int() * p.as_int();
      for (std::size_t i = 0; i < n; ++i) acc = acc * elementary_symplectic(rng, Int(p2 * rng.nonzero(2)));
      return acc;
    }
    case GroupLabel::Sp4Z_J:
      for (std::size_t i = 0; i < n; ++i) acc = acc * elementary_symplectic(rng, Int(rng.nonzero(2)));
      return acc;
    case GroupLabel::SpLambdaZ:
      for (std::size_t i = 0; i < n; ++i) {
        switch (rng.uniform(0, 5)) {
          case 0: acc = acc * j1_embed(random_sl2(rng, 2)); break;
          case 1: acc = acc * j2_embed(random_sl2(rng, 2), p, Coords::Tilde); break;
          default: {
            static constexpr GenName kTilde[] = {GenName::Mt1, GenName::Mt2, GenName::Mt3, GenName::Mt4};
            acc = acc * generator4(kTilde[rng.uniform(0, 3)], p).pow(Int(rng.nonzero(2)));
          }
        }
      }
      return acc;
    default: break;
  }
  throw Error(Errc::ArityMismatch, std::string(to_string(spec.group)) + " is a 2x2 group");
}

Matrix2 sample_2x2(const SampleSpec& spec, Rng& rng) {
  switch (spec.group) {
    case GroupLabel::SL2Z: return random_sl2(rng, spec.word_length);
    case GroupLabel::Gamma1_of_p: return random_gamma1(rng, spec.p, spec.word_length);
    case GroupLabel::Gamma1prime_p2: return random_gamma1_prime(rng, spec.p, spec.word_length);
    default: break;
  }
  throw Error(Errc::ArityMismatch, std::string(to_string(spec.group)) + " is a 4x4 group");
}

}  // namespace

AnyMatrix sample(const SampleSpec& spec) {
  if (is_2x2(spec.group)) return sample2(spec);
  return sample4(spec);
}

Matrix4 sample4(const SampleSpec& spec) {
  Rng rng(spec.seed);
  Matrix4 m = sample_4x4(spec, rng);
  if (!member(m, spec.group, spec.p)) {
    throw Error(Errc::InternalPredicateFailure, "sampled element left the group: " + describe(spec));
  }
  return m;
}

Matrix2 sample2(const SampleSpec& spec) {
  Rng rng(spec.seed);
  Matrix2 m = sample_2x2(spec, rng);
  if (!member(m, spec.group, spec.p)) {
    throw Error(Errc::InternalPredicateFailure, "sampled element left the group: " + describe(spec));
  }
  return m;
}

}  // namespace sp4cert
