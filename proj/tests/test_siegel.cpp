#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "sp4cert/error.hpp"
#include "sp4cert/siegel.hpp"

using namespace sp4cert;

namespace {

constexpr double kPi = std::numbers::pi;
double radius(double c) { return std::exp(-2 * kPi * c); }

}  // namespace

TEST(Siegel, PathEndpoints) {
  const double c = 1.5;
  const SiegelPoint start = theta_path(0, c);
  EXPECT_EQ(start.tau1, Complex(0, c));
  EXPECT_EQ(start.tau2, Complex(0, 0));
  EXPECT_EQ(start.tau3, Complex(0, c));
  // M0 acts on the Siegel space as translation by E11.
  const SiegelPoint end = theta_path(1, c);
  EXPECT_EQ(end.tau1, start.tau1 + 1.0);
  EXPECT_EQ(end.tau2, start.tau2);
  EXPECT_EQ(end.tau3, start.tau3);
  EXPECT_THROW((void)theta_path(1.5, c), Error);
  EXPECT_THROW((void)theta_path(0.5, 0), Error);
}

TEST(Siegel, PathStaysInSiegelSpace) {
  for (int i = 0; i <= 100; ++i) EXPECT_TRUE(theta_path(i / 100.0, 2).imaginary_part_positive_definite());
  const SiegelPoint bad{Complex(0, 1), Complex(0, 2), Complex(0, 1)};
  EXPECT_FALSE(bad.imaginary_part_positive_definite());
}

TEST(Siegel, BoundaryMap) {
  const BoundaryCoord b = boundary_map(theta_path(0, 1));
  EXPECT_NEAR(std::abs(b.z - Complex(radius(1), 0)), 0, 1e-15);
  EXPECT_EQ(b.tau2, Complex(0, 0));
  EXPECT_EQ(b.tau3, Complex(0, 1));
  for (int i = 0; i <= 50; ++i) {
    EXPECT_NEAR(std::abs(boundary_map(theta_path(i / 50.0, 0.7)).z), radius(0.7), 1e-15);
  }
  const BoundaryCoord far = boundary_map({Complex(0, 1e6), Complex(0, 0), Complex(0, 1)});
  EXPECT_TRUE(std::isfinite(far.z.real()));
  EXPECT_EQ(std::abs(far.z), 0);
}

TEST(Siegel, Homotopy) {
  const double c = 1;
  for (int i = 0; i <= 20; ++i) {
    const double t = i / 20.0;
    const BoundaryCoord h0 = homotopy_h(0, t, c);
    EXPECT_NEAR(std::abs(h0.z - Complex(radius(c), 0)), 0, 1e-15);
    EXPECT_EQ(h0.tau3, Complex(0, c));
    EXPECT_NEAR(std::abs(homotopy_h(t, 0, c).z - homotopy_h(t, 1, c).z), 0, 1e-12);
  }
  double best = 0;
  double best_s = -1;
  for (int i = 0; i < 200; ++i)
    for (int j = 0; j < 200; ++j) {
      const double s = i / 199.0, t = j / 199.0;
      const double m = std::abs(homotopy_h(s, t, c).z);
      if (m > best + 1e-18) {
        best = m;
        best_s = s;
      }
    }
  EXPECT_NEAR(best, radius(c), 1e-12);
  EXPECT_GE(best_s, 0.0);
  EXPECT_NEAR(std::abs(homotopy_h(1, 0.3, c).z), radius(c), 1e-15);
  EXPECT_THROW((void)homotopy_h(-0.1, 0, c), Error);
}

TEST(Siegel, Section4Passes) {
  for (double c : {0.5, 1.0, 2.0, 3.0}) {
    const Section4Report r = section4_check(c, 300, 1e-10);
    EXPECT_TRUE(r.passed()) << format_report(r);
    EXPECT_NEAR(r.disc_radius, radius(c), 1e-15);
  }
}

TEST(Siegel, RadiusMonotone) {
  const Section4Report a = section4_check(1, 50, 1e-10);
  const Section4Report b = section4_check(3, 50, 1e-10);
  EXPECT_LT(b.max_modulus, a.max_modulus);
  EXPECT_NEAR(b.max_modulus, std::exp(-6 * kPi), 1e-15);
}

TEST(Siegel, ZeroToleranceFails) {
  const Section4Report r = section4_check(1, 1000, 0);
  EXPECT_FALSE(r.passed());
  const std::string text = format_report(r);
  EXPECT_EQ(text.substr(text.size() - 5), "FAIL\n");
  EXPECT_GT(r.trace_distance + r.closed_residual + r.disc_residual, 0);
}

TEST(Siegel, DomainErrors) {
  EXPECT_THROW((void)section4_check(0, 10, 1e-10), Error);
  EXPECT_THROW((void)section4_check(1, 1, 1e-10), Error);
  EXPECT_THROW((void)section4_check(1, 10, -1), Error);
}
