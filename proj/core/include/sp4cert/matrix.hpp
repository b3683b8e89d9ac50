#pragma once

// Exact 2x2 integer and 4x4 rational matrices. Both are immutable values:
// every operation returns a fresh matrix. Indices are 0-based.

#include <array>
#include <initializer_list>

#include "sp4cert/exact.hpp"

namespace sp4cert {

class Matrix2 {
 public:
  Matrix2();  // identity
  Matrix2(Int a, Int b, Int c, Int d);

  static Matrix2 identity() { return {}; }

  const Int& operator()(int row, int col) const { return e_[row * 2 + col]; }
  const Int& a() const { return e_[0]; }
  const Int& b() const { return e_[1]; }
  const Int& c() const { return e_[2]; }
  const Int& d() const { return e_[3]; }

  Int det() const;
  bool is_identity() const;
  Matrix2 transpose() const;

  /// Integral inverse; needs det = ±1 (SingularMatrix for det 0,
  /// NotUnimodular otherwise).
  Matrix2 inverse() const;

  /// Exponentiation by squaring; negative exponents go through inverse().
  Matrix2 pow(const Int& exponent) const;

  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2& x, const Matrix2& y);

 private:
  std::array<Int, 4> e_;
};

class Matrix4 {
 public:
  Matrix4();  // zero
  explicit Matrix4(const std::array<Rat, 16>& entries);
  Matrix4(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix4 identity();
  static Matrix4 zero() { return {}; }
  /// E_{row,col}: the matrix unit with a single 1.
  static Matrix4 unit(int row, int col);
  static Matrix4 diagonal(const Rat& d0, const Rat& d1, const Rat& d2, const Rat& d3);

  const Rat& operator()(int row, int col) const { return e_[row * 4 + col]; }
  std::array<Rat, 4> row(int r) const;
  const std::array<Rat, 16>& entries() const { return e_; }

  /// Copy with one entry replaced.
  Matrix4 with(int row, int col, const Rat& value) const;

  bool is_integral() const;
  bool is_identity() const;
  Matrix4 transpose() const;
  Rat det() const;

  /// Exact Gauss-Jordan inverse; throws SingularMatrix when det = 0.
  Matrix4 inverse() const;
  Matrix4 pow(const Int& exponent) const;

  friend Matrix4 operator*(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator+(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator-(const Matrix4& x, const Matrix4& y);
  friend Matrix4 operator*(const Rat& s, const Matrix4& x);
  friend bool operator==(const Matrix4& x, const Matrix4& y);

 private:
  std::array<Rat, 16> e_;
};

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b);
Matrix4 mat_inv(const Matrix4& a);

}  // namespace sp4cert
