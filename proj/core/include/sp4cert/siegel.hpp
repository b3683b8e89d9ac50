#pragma once

// Double-precision evaluation of the loop attached to M0 near the central
// boundary component. The path from ic*1 to M0(ic*1) is pushed through the
// boundary chart (tau1, tau2, tau3) -> (exp(2 pi i tau1), tau2, tau3); the
// homotopy H(s, t) contracts the resulting loop.

#include <complex>
#include <cstddef>
#include <string>

namespace sp4cert {

using Complex = std::complex<double>;

struct SiegelPoint {
  Complex tau1, tau2, tau3;  // the symmetric matrix (tau1 tau2; tau2 tau3)

  /// Both leading minors of Im(tau) positive.
  bool imaginary_part_positive_definite() const;
};

struct BoundaryCoord {
  Complex z, tau2, tau3;
};

/// Straight line from ic*1 to M0(ic*1) = ic*1 + E11. DomainError unless
/// 0 <= t <= 1 and c > 0.
SiegelPoint theta_path(double t, double c);

BoundaryCoord boundary_map(const SiegelPoint& tau);

/// ((s e^{2 pi i t} + 1 - s) e^{-2 pi c}, 0, ic). DomainError outside
/// [0,1]^2 or for c <= 0.
BoundaryCoord homotopy_h(double s, double t, double c);

struct Section4Report {
  double c = 0;
  std::size_t samples = 0;
  double tol = 0;
  double trace_distance = 0;        // Hausdorff distance, H(1,.) vs boundary(theta)
  double start_residual = 0;        // max |H(0,t) - (e^{-2 pi c}, 0, ic)|
  double closed_residual = 0;       // max |H(s,0) - H(s,1)|
  double other_coords_residual = 0; // max |tau2| + |tau3 - ic| along H
  double disc_radius = 0;           // e^{-2 pi c}
  double max_modulus = 0;           // max |z| over the grid
  double disc_residual = 0;         // |max_modulus - disc_radius|
  bool trace_ok = false;
  bool endpoints_ok = false;
  bool disc_ok = false;
  bool passed() const { return trace_ok && endpoints_ok && disc_ok; }
};

/// samples x samples grid over (s, t). DomainError for c <= 0, samples < 2
/// or tol < 0.
Section4Report section4_check(double c, std::size_t samples, double tol);

std::string format_report(const Section4Report& report);

}  // namespace sp4cert
