#include <gtest/gtest.h>

#include <algorithm>

#include "sp4cert/error.hpp"
#include "sp4cert/generators.hpp"
#include "sp4cert/groups.hpp"
#include "sp4cert/sampling.hpp"
#include "sp4cert/sl2.hpp"

using namespace sp4cert;

namespace {

Matrix2 m2(long a, long b, long c, long d) { return {Int(a), Int(b), Int(c), Int(d)}; }

}  // namespace

TEST(Sl2, DecomposeExamples) {
  const Sl2Word t = sl2_decompose(sl2_T());
  ASSERT_EQ(t.syllables.size(), 1u);
  EXPECT_EQ(t.syllables[0], (Sl2Syllable{Sl2Letter::T, Int(1)}));

  const Sl2Word tu = sl2_decompose(m2(2, 1, 1, 1));
  EXPECT_EQ(tu.syllables, (std::vector<Sl2Syllable>{{Sl2Letter::T, Int(1)}, {Sl2Letter::U, Int(1)}}));

  const Sl2Word s = sl2_decompose(sl2_S());
  EXPECT_EQ(s.syllables, (std::vector<Sl2Syllable>{
                             {Sl2Letter::T, Int(-1)}, {Sl2Letter::U, Int(1)}, {Sl2Letter::T, Int(-1)}}));
  EXPECT_EQ(s.replay(), sl2_S());
  EXPECT_EQ(sl2_decompose(Matrix2()).syllables.size(), 0u);
  EXPECT_EQ(sl2_decompose(m2(-1, 0, 0, -1)).replay(), m2(-1, 0, 0, -1));
  EXPECT_THROW((void)sl2_decompose(m2(2, 0, 0, 1)), Error);
}

TEST(Sl2, NormalClosureExamples) {
  const ConjugateList t = normal_closure_decompose(sl2_T());
  ASSERT_EQ(t.factors.size(), 1u);
  EXPECT_EQ(t.factors[0].conjugator, Matrix2());
  EXPECT_EQ(t.factors[0].exponent, 1);

  const ConjugateList u = normal_closure_decompose(sl2_U());
  ASSERT_EQ(u.factors.size(), 1u);
  EXPECT_EQ(u.factors[0].conjugator, sl2_S());
  EXPECT_EQ(u.factors[0].exponent, -1);
  EXPECT_EQ(sl2_S() * sl2_T().inverse() * sl2_S().inverse(), sl2_U());

  const ConjugateList tu = normal_closure_decompose(m2(2, 1, 1, 1));
  ASSERT_EQ(tu.factors.size(), 2u);
  EXPECT_EQ(tu.factors[0].conjugator, Matrix2());
  EXPECT_EQ(tu.factors[0].exponent, 1);
  EXPECT_EQ(tu.factors[1].conjugator, sl2_S());
  EXPECT_EQ(tu.factors[1].exponent, -1);
  EXPECT_EQ(tu.replay(), m2(2, 1, 1, 1));

  const auto signs = normal_closure_decompose(m2(1, 3, 0, 1)).sign_list();
  ASSERT_EQ(signs.size(), 3u);
  for (const auto& [g, sign] : signs) EXPECT_EQ(sign, 1);
}

TEST(Sl2, Gamma1pExamples) {
  const OddPrime p(3);
  const Gamma1pSteps base = gamma1p_generate(p_matrix(p), p);
  ASSERT_EQ(base.steps.size(), 1u);
  ASSERT_TRUE(std::holds_alternative<MultiplyLeftP>(base.steps[0]));
  EXPECT_EQ(std::get<MultiplyLeftP>(base.steps[0]).exponent, 1);

  const Matrix2 tp = m2(1, 3, 0, 1);
  const Gamma1pSteps prime = gamma1p_generate(tp, p);
  ASSERT_EQ(prime.steps.size(), 1u);
  ASSERT_TRUE(std::holds_alternative<MultiplyLeftPrime>(prime.steps[0]));
  EXPECT_EQ(std::get<MultiplyLeftPrime>(prime.steps[0]).element, tp);

  const Matrix2 q = m2(4, 3, 9, 7);
  const Gamma1pSteps case2 = gamma1p_generate(q, p);
  EXPECT_EQ(case2.replay(p), q);
  EXPECT_TRUE(std::any_of(case2.steps.begin(), case2.steps.end(),
                          [](const Gamma1pStep& s) { return std::holds_alternative<ConjugateBy>(s); }));
  EXPECT_THROW((void)gamma1p_generate(m2(1, 1, 0, 1), p), Error);
}

TEST(Sl2, RandomReplay) {
  const OddPrime p3(3);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const Matrix2 a = sample2({GroupLabel::SL2Z, p3, seed, 1 + seed % 30});
    ASSERT_EQ(sl2_decompose(a).replay(), a) << seed;
    ASSERT_EQ(normal_closure_decompose(a).replay(), a) << seed;
  }
  for (long q : {3L, 5L, 7L}) {
    const OddPrime p(q);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const Matrix2 g = sample2({GroupLabel::Gamma1_of_p, p, seed, 1 + seed % 6});
      const Gamma1pSteps steps = gamma1p_generate(g, p);
      ASSERT_EQ(steps.replay(p), g) << seed;
      ASSERT_LE(steps.depth, 3) << seed;
      for (const auto& s : steps.steps) {
        if (const auto* x = std::get_if<MultiplyLeftPrime>(&s)) {
          ASSERT_TRUE(member(x->element, GroupLabel::Gamma1prime_p2, p));
        } else if (const auto* c = std::get_if<ConjugateBy>(&s)) {
          ASSERT_EQ(c->by.det(), 1);
        }
      }
    }
  }
}

TEST(Sl2, TieBreakIsDeterministic) {
  const Matrix2 a = m2(5, 2, 7, 3);
  EXPECT_EQ(sl2_decompose(a).syllables, sl2_decompose(a).syllables);
  EXPECT_EQ(sl2_decompose(m2(1, 0, 1, 1)).syllables, (std::vector<Sl2Syllable>{{Sl2Letter::U, Int(1)}}));
}
