#pragma once

// Symplectic forms, the congruence-pattern membership predicates, the SL(2)
// embeddings j1/j2, R-conjugation, and the short/long classification of
// integer row vectors.
//
// Symplecticity is checked in the row convention m * form * m^T == form,
// which is the one the Lambda-coordinates (R-conjugated) groups satisfy.
// For J it coincides with m^T * J * m == J.

#include <array>
#include <optional>
#include <string_view>

#include "sp4cert/matrix.hpp"

namespace sp4cert {

enum class GroupLabel {
  Sp4Z_J,
  SpLambdaZ,
  Gamma_1p,
  Gamma0_1p,
  GammaTilde_1p,
  Gamma_p2,
  SL2Z,
  Gamma1_of_p,
  Gamma1prime_p2,
};

/// Lowercase snake-case name, e.g. "gamma_1p", "gamma1prime_p2".
std::string_view to_string(GroupLabel g) noexcept;
std::optional<GroupLabel> parse_group_label(std::string_view name) noexcept;
bool is_2x2(GroupLabel g) noexcept;

/// Which coordinates a word or embedding lives in: the standard form J
/// (untilded) or the (1,p) form Lambda (tilde).
enum class Coords { Untilded, Tilde };

std::string_view to_string(Coords c) noexcept;
std::optional<Coords> parse_coords(std::string_view name) noexcept;

class SymplecticForm {
 public:
  /// ((0, I), (-I, 0)).
  static SymplecticForm J();
  /// ((0, F), (-F, 0)) with F = diag(1, p).
  static SymplecticForm Lambda(OddPrime p);

  const Matrix4& matrix() const { return m_; }

 private:
  explicit SymplecticForm(Matrix4 m) : m_(std::move(m)) {}
  Matrix4 m_;
};

bool symplectic_check(const Matrix4& m, const SymplecticForm& form);

/// Exact membership test: symplectic/determinant condition plus the group's
/// congruence pattern. Throws ArityMismatch when the label is 2x2.
bool member(const Matrix4& m, GroupLabel g, OddPrime p);
/// 2x2 labels only (SL2Z, Gamma1_of_p, Gamma1prime_p2).
bool member(const Matrix2& m, GroupLabel g, OddPrime p);

/// (a b; c d) placed on coordinates (1,3). Same in both coordinate systems.
Matrix4 j1_embed(const Matrix2& a);

/// (a b; c d) placed on coordinates (2,4): untilded as (a, pb; c/p, d),
/// tilde as (a, b; c, d). Requires det = 1.
Matrix4 j2_embed(const Matrix2& q, OddPrime p, Coords coords);

/// R m R^-1 with R = diag(1,1,1,p), or R^-1 m R when `inverse`.
Matrix4 r_conjugate(const Matrix4& m, OddPrime p, bool inverse = false);

enum class VectorClass { Short, Long };

using IntVector4 = std::array<Int, 4>;

/// Short iff gcd(v1, p v2, v3, p v4) = 1, i.e. some integral w has
/// v Lambda w^T = 1. Throws ZeroVector for v = 0.
VectorClass vector_class(const IntVector4& v, OddPrime p);

/// First row as integers; the caller guarantees integrality.
IntVector4 integer_row(const Matrix4& m, int row);

}  // namespace sp4cert
