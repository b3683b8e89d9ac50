#include "sp4cert/siegel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "sp4cert/error.hpp"

namespace sp4cert {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_unit(double x, const char* name) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(Errc::DomainError, std::string(name) + " must lie in [0, 1]");
}

void require_positive(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw Error(Errc::DomainError, "c must be a positive real");
}

double phase(Complex z) {
  const double a = std::arg(z);
  return a < 0 ? a + kTwoPi : a;
}

// One-sided Hausdorff distance from points `a` to the set `b`, with `b`
// sorted by phase; nearest candidates are the phase neighbours (with wrap).
double one_sided(const std::vector<Complex>& a, const std::vector<Complex>& b, const std::vector<double>& b_phase) {
  double worst = 0;
  for (const Complex& z : a) {
    const double ph = phase(z);
    const auto it = std::lower_bound(b_phase.begin(), b_phase.end(), ph);
    const std::size_t n = b.size();
    const std::size_t hi = static_cast<std::size_t>(it - b_phase.begin()) % n;
    const std::size_t lo = (hi + n - 1) % n;
    double best = std::min(std::abs(z - b[hi]), std::abs(z - b[lo]));
    best = std::min({best, std::abs(z - b.front()), std::abs(z - b.back())});
    worst = std::max(worst, best);
  }
  return worst;
}

double hausdorff(std::vector<Complex> a, std::vector<Complex> b) {
  auto by_phase = [](Complex x, Complex y) { return phase(x) < phase(y); };
  std::sort(a.begin(), a.end(), by_phase);
  std::sort(b.begin(), b.end(), by_phase);
  std::vector<double> a_phase, b_phase;
  for (auto z : a) a_phase.push_back(phase(z));
  for (auto z : b) b_phase.push_back(phase(z));
  return std::max(one_sided(a, b, b_phase), one_sided(b, a, a_phase));
}

}  // namespace

bool SiegelPoint::imaginary_part_positive_definite() const {
  const double y1 = tau1.imag(), y2 = tau2.imag(), y3 = tau3.imag();
  return y1 > 0 && y1 * y3 - y2 * y2 > 0;
}

SiegelPoint theta_path(double t, double c) {
  require_unit(t, "t");
  require_positive(c);
  const Complex ic(0.0, c);
  // (1 - t) ic*1 + t (ic*1 + E11)
  return {ic + t, 0.0, ic};
}

BoundaryCoord boundary_map(const SiegelPoint& tau) {
  return {std::exp(Complex(0.0, kTwoPi) * tau.tau1), tau.tau2, tau.tau3};
}

BoundaryCoord homotopy_h(double s, double t, double c) {
  require_unit(s, "s");
  require_unit(t, "t");
  require_positive(c);
  const Complex loop = std::polar(1.0, kTwoPi * t);
  return {(s * loop + (1.0 - s)) * std::exp(-kTwoPi * c), 0.0, Complex(0.0, c)};
}

Section4Report section4_check(double c, std::size_t samples, double tol) {
  require_positive(c);
  if (samples < 2) throw Error(Errc::DomainError, "need at least 2 samples");
  if (!(tol >= 0.0)) throw Error(Errc::DomainError, "tol must be nonnegative");

  Section4Report r;
  r.c = c;
  r.samples = samples;
  r.tol = tol;
  r.disc_radius = std::exp(-kTwoPi * c);
  const Complex ic(0.0, c);
  const Complex start(r.disc_radius, 0.0);
  const auto grid = [&](std::size_t k) { return static_cast<double>(k) / static_cast<double>(samples - 1); };

  std::vector<Complex> homotopy_end, boundary_loop;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = grid(k);
    homotopy_end.push_back(homotopy_h(1.0, t, c).z);
    boundary_loop.push_back(boundary_map(theta_path(t, c)).z);
    r.start_residual = std::max(r.start_residual, std::abs(homotopy_h(0.0, t, c).z - start));
  }
  r.trace_distance = hausdorff(homotopy_end, boundary_loop);

  for (std::size_t i = 0; i < samples; ++i) {
    const double s = grid(i);
    r.closed_residual = std::max(r.closed_residual, std::abs(homotopy_h(s, 0.0, c).z - homotopy_h(s, 1.0, c).z));
    for (std::size_t k = 0; k < samples; ++k) {
      const BoundaryCoord h = homotopy_h(s, grid(k), c);
      r.max_modulus = std::max(r.max_modulus, std::abs(h.z));
      r.other_coords_residual = std::max(r.other_coords_residual, std::abs(h.tau2) + std::abs(h.tau3 - ic));
    }
  }
  r.disc_residual = std::abs(r.max_modulus - r.disc_radius);

  r.trace_ok = r.trace_distance <= tol;
  r.endpoints_ok = r.start_residual <= tol && r.closed_residual <= tol && r.other_coords_residual <= tol;
  r.disc_ok = r.max_modulus <= r.disc_radius + tol && r.disc_residual <= tol;
  return r;
}

std::string format_report(const Section4Report& r) {
  std::ostringstream out;
  out.precision(6);
  out << std::scientific;
  out << "section4 c=" << r.c << " samples=" << r.samples << " tol=" << r.tol << "\n";
  out << (r.trace_ok ? "pass" : "FAIL") << " trace: H(1,.) vs e(theta(.)) distance " << r.trace_distance << "\n";
  out << (r.endpoints_ok ? "pass" : "FAIL") << " null-homotopy: start " << r.start_residual << " closed "
      << r.closed_residual << " other-coords " << r.other_coords_residual << "\n";
  out << (r.disc_ok ? "pass" : "FAIL") << " disc: max |z| " << r.max_modulus << " radius e^(-2 pi c) "
      << r.disc_radius << " residual " << r.disc_residual << "\n";
  out << (r.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace sp4cert
