#include <gtest/gtest.h>

#include <algorithm>

#include "sp4cert/error.hpp"
#include "sp4cert/groups.hpp"
#include "sp4cert/sampling.hpp"

using namespace sp4cert;

namespace {

const GroupLabel kAll[] = {GroupLabel::Sp4Z_J,    GroupLabel::SpLambdaZ,   GroupLabel::Gamma_1p,
                           GroupLabel::Gamma0_1p, GroupLabel::GammaTilde_1p, GroupLabel::Gamma_p2,
                           GroupLabel::SL2Z,      GroupLabel::Gamma1_of_p, GroupLabel::Gamma1prime_p2};

Int max_entry(const AnyMatrix& m) {
  Int best = 0;
  std::visit(
      [&](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Matrix2>) {
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) best = std::max<Int>(best, abs(x(i, j)));
        } else {
          for (const Rat& e : x.entries()) best = std::max<Int>(best, Int(abs(e.get_num())));
        }
      },
      m);
  return best;
}

}  // namespace

TEST(Sampling, EmptyWordIsIdentity) {
  for (GroupLabel g : kAll) {
    const AnyMatrix m = sample({g, OddPrime(3), 5, 0});
    if (is_2x2(g)) {
      EXPECT_EQ(std::get<Matrix2>(m), Matrix2()) << to_string(g);
    } else {
      EXPECT_EQ(std::get<Matrix4>(m), Matrix4::identity()) << to_string(g);
    }
  }
}

TEST(Sampling, Deterministic) {
  for (GroupLabel g : kAll) {
    const SampleSpec spec{g, OddPrime(5), 1234, 9};
    EXPECT_EQ(sample(spec), sample(spec)) << to_string(g);
  }
}

TEST(Sampling, MembersOfRequestedGroup) {
  for (GroupLabel g : kAll) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const AnyMatrix m = sample({g, OddPrime(7), seed, 10});
      ASSERT_TRUE(std::visit([&](const auto& x) { return member(x, g, OddPrime(7)); }, m)) << to_string(g);
    }
  }
}

TEST(Sampling, ThousandGamma1pAtFive) {
  const OddPrime p(5);
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    ASSERT_TRUE(member(sample4({GroupLabel::Gamma_1p, p, seed, 1 + seed % 20}), GroupLabel::Gamma_1p, p));
  }
}

TEST(Sampling, EntriesGrowWithLength) {
  const OddPrime p(3);
  auto median = [&](std::size_t len) {
    std::vector<Int> v;
    for (std::uint64_t seed = 0; seed < 51; ++seed) v.push_back(max_entry(sample({GroupLabel::Gamma_1p, p, seed, len})));
    std::nth_element(v.begin(), v.begin() + 25, v.end());
    return v[25];
  };
  EXPECT_GT(median(20), median(5));
}

TEST(Sampling, DescribeNamesTheSeed) {
  EXPECT_EQ(describe({GroupLabel::Gamma_1p, OddPrime(3), 42, 7}), "group=gamma_1p p=3 seed=42 word_length=7");
}

TEST(Sampling, ArityChecked) {
  EXPECT_THROW((void)sample2({GroupLabel::Gamma_1p, OddPrime(3), 1, 3}), Error);
  EXPECT_THROW((void)sample4({GroupLabel::SL2Z, OddPrime(3), 1, 3}), Error);
}

TEST(Sampling, RngBounds) {
  Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    const long x = rng.uniform(-4, 9);
    ASSERT_GE(x, -4);
    ASSERT_LE(x, 9);
    const long y = rng.nonzero(3);
    ASSERT_NE(y, 0);
    ASSERT_LE(std::labs(y), 3);
  }
}
