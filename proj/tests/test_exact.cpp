#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sp4cert/error.hpp"
#include "sp4cert/exact.hpp"
#include "sp4cert/generators.hpp"
#include "sp4cert/matrix.hpp"
#include "sp4cert/matrix_io.hpp"

using namespace sp4cert;

namespace {

Matrix4 random_integer_matrix(std::mt19937_64& rng) {
  std::array<Rat, 16> e;
  for (auto& x : e) x = Rat(static_cast<long>(rng() % 11) - 5);
  return Matrix4(e);
}

// Product of random elementary matrices: integral with det +-1.
Matrix4 random_unimodular(std::mt19937_64& rng) {
  Matrix4 m = Matrix4::identity();
  for (int i = 0; i < 12; ++i) {
    const int r = static_cast<int>(rng() % 4);
    int c = static_cast<int>(rng() % 4);
    if (c == r) c = (c + 1) % 4;
    const long t = static_cast<long>(rng() % 5) - 2;
    m = m * (Matrix4::identity() + Rat(t) * Matrix4::unit(r, c));
    if (rng() % 5 == 0) m = m * Matrix4::diagonal(Rat(-1), Rat(1), Rat(1), Rat(1));
  }
  return m;
}

void expect_reduced(const Matrix4& m) {
  for (const Rat& x : m.entries()) {
    EXPECT_GT(x.get_den(), 0);
    EXPECT_EQ(gcd(Int(abs(x.get_num())), x.get_den()), 1);
  }
}

}  // namespace

TEST(Exact, IdentityProduct) { EXPECT_EQ(mat_mul(Matrix4::identity(), Matrix4::identity()), Matrix4::identity()); }

TEST(Exact, M2ChainUpperRightBlock) {
  const OddPrime p(3);
  const Matrix4 m0 = generator4(GenName::M0, p);
  const Matrix4 m4 = generator4(GenName::M4, p);
  const Matrix4 x = mat_mul(mat_mul(mat_mul(mat_inv(m4), m0), m4), mat_inv(m0));
  const Matrix4 expected{{1, 0, 0, 3}, {0, 1, 3, 9}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  EXPECT_EQ(x, expected);
}

TEST(Exact, Associativity) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const Matrix4 a = random_integer_matrix(rng), b = random_integer_matrix(rng), c = random_integer_matrix(rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Exact, InverseExamples) {
  EXPECT_EQ(mat_inv(Matrix4::identity()), Matrix4::identity());
  const Matrix4 m0 = generator4(GenName::M0, OddPrime(5));
  const Matrix4 inv = mat_inv(m0);
  EXPECT_EQ(inv, Matrix4::identity() - Matrix4::unit(0, 2));
  EXPECT_EQ(m0 * inv, Matrix4::identity());
}

TEST(Exact, PrintedM1IsSingular) {
  EXPECT_EQ(printed_m1().det(), 0);
  try {
    (void)mat_inv(printed_m1());
    FAIL() << "expected SingularMatrix";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::SingularMatrix);
  }
}

TEST(Exact, UnimodularInverseAgainstOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const Matrix4 a = random_unimodular(rng);
    ASSERT_EQ(mat_mul(a, mat_inv(a)), Matrix4::identity());
    const auto o = oracle::inverse(oracle::from(a));
    ASSERT_TRUE(o.has_value());
    EXPECT_EQ(mat_inv(a).entries(), *o);
  }
}

TEST(Exact, RationalReductionInvariant) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const Matrix4 a = random_integer_matrix(rng);
    const Matrix4 b = random_unimodular(rng);
    expect_reduced(a * b);
    expect_reduced(a + b);
    expect_reduced(a - b);
    expect_reduced(Rat(3, 7) * a);
    if (a.det() != 0) expect_reduced(a.inverse());
  }
  const Rat half = make_rat(Int(-2), Int(-4));
  EXPECT_EQ(half.get_num(), 1);
  EXPECT_EQ(half.get_den(), 2);
}

TEST(Exact, ExtGcdExamples) {
  const GcdResult r = ext_gcd(Int(-2), Int(9));
  EXPECT_EQ(r.g, 1);
  EXPECT_EQ(Int(-2) * r.x + Int(9) * r.y, 1);
  const GcdResult one = ext_gcd(Int(1), Int(0));
  EXPECT_EQ(one.g, 1);
  EXPECT_EQ(one.x, 1);
  EXPECT_EQ(one.y, 0);
  const GcdResult six = ext_gcd(Int(6), Int(4));
  EXPECT_EQ(six.g, 2);
  EXPECT_EQ(Int(6) * six.x + Int(4) * six.y, 2);
  try {
    (void)ext_gcd(Int(0), Int(0));
    FAIL() << "expected BothZero";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BothZero);
  }
}

TEST(Exact, ExtGcdRandomPairs) {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 1000; ++i) {
    const Int a(static_cast<long>(rng() % 2000001) - 1000000);
    const Int b(static_cast<long>(rng() % 2000001) - 1000000);
    if (a == 0 && b == 0) continue;
    const GcdResult r = ext_gcd(a, b);
    ASSERT_GT(r.g, 0);
    ASSERT_EQ(a * r.x + b * r.y, r.g);
    ASSERT_TRUE(divides(r.g, a) && divides(r.g, b));
  }
}

TEST(Exact, OddPrimeValidation) {
  for (long bad : {-3L, 0L, 1L, 2L, 4L, 9L, 15L}) EXPECT_THROW(OddPrime{bad}, Error) << bad;
  for (long good : {3L, 5L, 7L, 11L, 101L}) EXPECT_EQ(OddPrime(good).value(), good);
}

TEST(Exact, InterchangeRoundTrip) {
  const Matrix4 m({Rat(1), Rat(-1, 3), Rat(0), Rat(7), Rat(2, 5), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1),
                   Rat(0), Rat(Int("123456789012345678901234567890")), Rat(0), Rat(0), Rat(1)});
  const std::string text = format_matrix(m);
  EXPECT_EQ(parse_matrix4(text), m);
  EXPECT_EQ(format_matrix(parse_matrix4(text)), text);
  const Matrix2 q(Int(4), Int(3), Int(9), Int(7));
  EXPECT_EQ(parse_matrix2(format_matrix(q)), q);
}

TEST(Exact, InterchangeRejectsNonCanonical) {
  for (const char* bad : {"2/4", "01", "-0", "1/1", "3/-2", "x", "", "1/0"}) {
    EXPECT_THROW((void)parse_rat(bad), Error) << bad;
  }
  EXPECT_EQ(parse_rat("-3/7"), Rat(-3, 7));
  EXPECT_THROW((void)parse_matrix4(R"([["1","0"],["0","1"]])"), Error);
  EXPECT_THROW((void)parse_matrix4(R"([["1","0","0","0"],["0","1","0","0"],["0","0","1","0"]])"), Error);
}
