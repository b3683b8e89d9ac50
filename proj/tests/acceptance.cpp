// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all
// nine pass. Every check replays exactly or compares against an oracle from
// oracles.hpp; wall-clock budgets are part of the verdict.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "sp4cert/certificate.hpp"
#include "sp4cert/decompose.hpp"
#include "sp4cert/error.hpp"
#include "sp4cert/generators.hpp"
#include "sp4cert/groups.hpp"
#include "sp4cert/sampling.hpp"
#include "sp4cert/siegel.hpp"
#include "sp4cert/sl2.hpp"
#include "tamper.hpp"

using namespace sp4cert;
using Clock = std::chrono::steady_clock;

namespace {

const long kIdentityPrimes[] = {3, 5, 7, 11, 13, 17, 19};
const long kFuzzPrimes[] = {3, 5, 7};

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (ok) detail << why;
    ok = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void within(Outcome& o, Clock::time_point start, double budget, const std::string& what) {
  const double t = seconds_since(start);
  if (t >= budget) o.fail(what + " took " + std::to_string(t) + " s, budget " + std::to_string(budget) + " s");
}

// 1. Identities replay exactly; the printed form of the M4 identity is off by
//    exactly -2p^2 E24.
void identities(Outcome& o) {
  const auto start = Clock::now();
  for (long q : kIdentityPrimes) {
    const OddPrime p(q);
    const IdentityReport report = verify_identities(p);
    if (!report.passed() || report.checks.size() != 6) o.fail("identities fail at p=" + std::to_string(q));
    if (Int(-2) * report.lambda + Int(q * q) * report.mu != 1) o.fail("lambda, mu wrong at p=" + std::to_string(q));
    const auto g = [&](GenName n) { return generator4(n, p); };
    const Matrix4 printed =
        g(GenName::L5).inverse() * g(GenName::M2).inverse() * g(GenName::L5) * g(GenName::M2) * g(GenName::L1).inverse();
    if (printed - g(GenName::M4) != Rat(-2 * q * q) * Matrix4::unit(1, 3)) {
      o.fail("printed M4 identity residual is not -2p^2 E24 at p=" + std::to_string(q));
    }
  }
  within(o, start, 5, "identity suite");
  o.detail << "p in {3..19}, 6 identities each";
}

// 2. Generator certificates with leaf and conjugator discipline.
void generator_certs(Outcome& o) {
  const auto start = Clock::now();
  std::size_t total_nodes = 0;
  for (long q : kIdentityPrimes) {
    const OddPrime p(q);
    const auto certs = build_generator_certs(p);
    if (certs.size() != 6) o.fail("expected six certificates at p=" + std::to_string(q));
    for (const auto& [name, c] : certs) {
      total_nodes += c.nodes.size();
      const std::string where = std::string(to_string(name)) + " p=" + std::to_string(q);
      if (!cert_verify(c).passed) o.fail("cert_verify rejects " + where);
      if (c.target != generator4(name, p)) o.fail("wrong target for " + where);
      for (const auto& node : c.nodes) {
        if (const auto* s = std::get_if<SeedP2>(&node)) {
          if (!oracle::in_gamma_p2(oracle::from(s->value), q)) o.fail("illegal leaf in " + where);
        } else if (const auto* x = std::get_if<Conj>(&node)) {
          if (!oracle::in_gamma0_1p(oracle::from(x->conjugator), q)) o.fail("illegal conjugator in " + where);
        }
      }
      if (!oracle::certificate_valid(c)) o.fail("oracle rejects " + where);
    }
  }
  within(o, start, 10, "generator certificates");
  o.detail << "42 certificates, " << total_nodes << " nodes";
}

// 3. Decomposition replay, 500 elements per prime.
void decomposition(Outcome& o) {
  std::ostringstream times;
  for (long q : kFuzzPrimes) {
    const OddPrime p(q);
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < 500; ++i) {
      const SampleSpec spec{GroupLabel::Gamma_1p, p, 3000 + i, 1 + i % 20};
      const Matrix4 k = sample4(spec);
      try {
        if (decompose(k, p, Coords::Untilded).replay() != k) o.fail("replay mismatch: " + describe(spec));
      } catch (const Error& e) {
        o.fail(std::string(e.what()) + ": " + describe(spec));
      }
    }
    within(o, start, 60, "decomposition at p=" + std::to_string(q));
    times << " p=" << q << " " << std::fixed << std::setprecision(2) << seconds_since(start) << "s";
  }
  o.detail << "1500 replays;" << times.str();
}

// 4. Seed-level witnesses, 100 elements per prime.
void witnesses(Outcome& o) {
  std::ostringstream times;
  std::size_t max_nodes = 0;
  for (long q : kFuzzPrimes) {
    const OddPrime p(q);
    const auto start = Clock::now();
    for (std::uint64_t i = 0; i < 100; ++i) {
      const SampleSpec spec{GroupLabel::Gamma_1p, p, 7000 + i, 1 + i % 20};
      const Matrix4 k = sample4(spec);
      try {
        const Certificate c = normal_closure_witness(k, p);
        max_nodes = std::max(max_nodes, c.nodes.size());
        if (c.target != k || !cert_verify(c).passed) o.fail("witness rejected: " + describe(spec));
      } catch (const Error& e) {
        o.fail(std::string(e.what()) + ": " + describe(spec));
      }
    }
    within(o, start, 300, "witnesses at p=" + std::to_string(q));
    times << " p=" << q << " " << std::fixed << std::setprecision(2) << seconds_since(start) << "s";
  }
  o.detail << "300 witnesses, largest " << max_nodes << " nodes;" << times.str();
}

// 5. Predicate coherence, at least 200 instances per property.
void predicates(Outcome& o) {
  std::size_t instances = 0;
  for (long q : kFuzzPrimes) {
    const OddPrime p(q);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Matrix4 k = sample4({GroupLabel::Gamma_1p, p, seed, 1 + seed % 20});
      const Matrix4 g = sample4({GroupLabel::Gamma0_1p, p, seed, 1 + seed % 20});
      if (!member(r_conjugate(k, p), GroupLabel::GammaTilde_1p, p)) o.fail("R-conjugate of a member rejected");
      if (member(g, GroupLabel::Gamma_1p, p) != member(r_conjugate(g, p), GroupLabel::GammaTilde_1p, p)) {
        o.fail("R-conjugation equivalence broken");
      }

      const Matrix2 a = sample2({GroupLabel::SL2Z, p, seed, 8});
      const Matrix2 b = sample2({GroupLabel::SL2Z, p, seed + 100000, 8});
      if (j1_embed(a * b) != j1_embed(a) * j1_embed(b)) o.fail("j1 is not multiplicative");
      for (Coords c : {Coords::Untilded, Coords::Tilde}) {
        if (j2_embed(a * b, p, c) != j2_embed(a, p, c) * j2_embed(b, p, c)) o.fail("j2 is not multiplicative");
      }

      Rng rng(seed);
      IntVector4 v;
      do {
        for (auto& x : v) x = rng.uniform(-9, 9);
      } while (v[0] == 0 && v[1] == 0 && v[2] == 0 && v[3] == 0);
      const Matrix4 gamma = sample4({GroupLabel::SpLambdaZ, p, seed, 6});
      IntVector4 w;
      for (int j = 0; j < 4; ++j) {
        Rat s = 0;
        for (int i = 0; i < 4; ++i) s += Rat(v[i]) * gamma(i, j);
        w[j] = s.get_num();
      }
      if (vector_class(v, p) != vector_class(w, p)) o.fail("shortness not invariant under Sp(Lambda, Z)");

      const Matrix4 kt = r_conjugate(k, p);
      if (vector_class(integer_row(kt, 0), p) != VectorClass::Short ||
          vector_class(integer_row(kt, 1), p) != VectorClass::Long) {
        o.fail("first-row-short / second-row-long dichotomy broken");
      }
      ++instances;
    }
  }
  o.detail << instances << " instances of each property";
}

// 6. SL(2, Z) machinery, 500 inputs each.
void sl2_suite(Outcome& o) {
  const OddPrime p3(3);
  int worst_depth = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const Matrix2 a = sample2({GroupLabel::SL2Z, p3, seed, 1 + seed % 30});
    if (sl2_decompose(a).replay() != a) o.fail("sl2_decompose replay, seed " + std::to_string(seed));
    if (normal_closure_decompose(a).replay() != a) o.fail("normal_closure_decompose replay, seed " + std::to_string(seed));
    const OddPrime p(kFuzzPrimes[seed % 3]);
    const Matrix2 g = sample2({GroupLabel::Gamma1_of_p, p, seed, 1 + seed % 6});
    const Gamma1pSteps steps = gamma1p_generate(g, p);
    if (steps.replay(p) != g) o.fail("gamma1p_generate replay, seed " + std::to_string(seed));
    worst_depth = std::max(worst_depth, steps.depth);
  }
  if (worst_depth > 3) o.fail("recursion depth " + std::to_string(worst_depth));
  o.detail << "1500 replays, max depth " << worst_depth;
}

// 7. Single-node tampers that change meaning (per the independent oracle)
//    are all rejected.
void mutation(Outcome& o) {
  std::vector<Certificate> pool;
  for (long q : kFuzzPrimes) {
    const OddPrime p(q);
    for (const auto& entry : build_generator_certs(p)) pool.push_back(entry.second);
    for (std::uint64_t i = 0; i < 4; ++i) pool.push_back(normal_closure_witness(sample4({GroupLabel::Gamma_1p, p, 500 + i, 8}), p));
  }
  std::mt19937_64 rng(20240607);
  int tampers = 0, resampled = 0, rejected = 0;
  while (tampers < 100) {
    const tamper::Mutation m = tamper::mutate(pool[rng() % pool.size()], rng);
    if (!tamper::meaning_changed(m)) {
      ++resampled;
      continue;
    }
    ++tampers;
    try {
      if (!cert_verify(m.cert).passed) ++rejected;
      else o.fail("accepted tamper " + m.kind + " at node " + std::to_string(m.node));
    } catch (const Error& e) {
      if (e.code() == Errc::MalformedDag) ++rejected;
      else o.fail(std::string("verifier threw ") + e.what());
    }
  }
  o.detail << rejected << "/" << tampers << " rejected, " << resampled << " meaning-preserving draws resampled";
}

// 8. Boundary-loop numerics.
void section4(Outcome& o) {
  for (double c : {0.5, 1.0, 2.0, 3.0}) {
    const Section4Report r = section4_check(c, 1000, 1e-10);
    if (!r.passed()) o.fail("section4_check fails at c=" + std::to_string(c));
    if (std::abs(r.disc_radius - std::exp(-2 * std::numbers::pi * c)) > 1e-10) o.fail("disc radius off");
    if (std::abs(r.max_modulus - std::exp(-2 * std::numbers::pi * c)) > 1e-10) o.fail("max modulus off");
  }
  o.detail << "c in {0.5, 1, 2, 3}, 1000 x 1000 grid";
}

// 9. The printed M1 is singular; the corrected one is R-conjugate to Mt1.
void erratum(Outcome& o) {
  try {
    (void)mat_inv(printed_m1());
    o.fail("printed M1 inverted without error");
  } catch (const Error& e) {
    if (e.code() != Errc::SingularMatrix) o.fail(std::string("wrong error: ") + e.what());
  }
  for (long q : kIdentityPrimes) {
    const OddPrime p(q);
    const Matrix4 mt1 = Matrix4::identity() + Matrix4::unit(2, 1) + Rat(q) * Matrix4::unit(3, 0);
    const Matrix4 r = Matrix4::diagonal(Rat(1), Rat(1), Rat(1), Rat(q));
    const Matrix4 m1 = generator4(GenName::M1, p);
    if (r * m1 * r.inverse() != mt1 || generator4(GenName::Mt1, p) != mt1) o.fail("R M1 R^-1 != Mt1");
  }
  o.detail << "printed M1 singular; R M1 R^-1 = Mt1 for p in {3..19}";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"identity suite", identities},        {"generator certificates", generator_certs},
      {"decomposition replay", decomposition}, {"end-to-end witness", witnesses},
      {"predicate coherence", predicates},   {"SL2 suite", sl2_suite},
      {"mutation soundness", mutation},      {"boundary-loop numerics", section4},
      {"erratum detection", erratum},
  };
  bool all = true;
  int index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Outcome o;
    const auto start = Clock::now();
    try {
      check(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.ok;
    std::cout << "criterion " << index << " " << name << ": " << (o.ok ? "PASS" : "FAIL") << " (" << std::fixed
              << std::setprecision(2) << seconds_since(start) << " s) " << o.detail.str() << std::endl;
  }
  std::cout << (all ? "PASS" : "FAIL") << std::endl;
  return all ? 0 : 1;
}
