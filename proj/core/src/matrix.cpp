#include "sp4cert/matrix.hpp"

#include <utility>

#include "sp4cert/error.hpp"

namespace sp4cert {

// ---- Matrix2 ---------------------------------------------------------------

Matrix2::Matrix2() : e_{Int(1), Int(0), Int(0), Int(1)} {}

Matrix2::Matrix2(Int a, Int b, Int c, Int d)
    : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

Int Matrix2::det() const { return Int(e_[0] * e_[3] - e_[1] * e_[2]); }

bool Matrix2::is_identity() const { return *this == Matrix2(); }

Matrix2 Matrix2::transpose() const { return {e_[0], e_[2], e_[1], e_[3]}; }

Matrix2 Matrix2::inverse() const {
  const Int d = det();
  if (d == 0) throw Error(Errc::SingularMatrix, "2x2 matrix has determinant 0");
  if (d == 1) return {e_[3], -e_[1], -e_[2], e_[0]};
  if (d == -1) return {-e_[3], e_[1], e_[2], -e_[0]};
  throw Error(Errc::NotUnimodular, "2x2 matrix has determinant " + to_string(d));
}

Matrix2 Matrix2::pow(const Int& exponent) const {
  Matrix2 base = exponent < 0 ? inverse() : *this;
  Int n = abs(exponent);
  Matrix2 acc;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {Int(x.e_[0] * y.e_[0] + x.e_[1] * y.e_[2]), Int(x.e_[0] * y.e_[1] + x.e_[1] * y.e_[3]),
          Int(x.e_[2] * y.e_[0] + x.e_[3] * y.e_[2]), Int(x.e_[2] * y.e_[1] + x.e_[3] * y.e_[3])};
}

bool operator==(const Matrix2& x, const Matrix2& y) {
  for (int i = 0; i < 4; ++i) {
    if (x.e_[i] != y.e_[i]) return false;
  }
  return true;
}

// ---- Matrix4 ---------------------------------------------------------------

Matrix4::Matrix4() = default;

Matrix4::Matrix4(const std::array<Rat, 16>& entries) : e_(entries) {
  for (auto& v : e_) v.canonicalize();
}

Matrix4::Matrix4(std::initializer_list<std::initializer_list<long>> rows) {
  if (rows.size() != 4) throw Error(Errc::DomainError, "Matrix4 needs 4 rows");
  int r = 0;
  for (const auto& row : rows) {
    if (row.size() != 4) throw Error(Errc::DomainError, "Matrix4 rows need 4 entries");
    int c = 0;
    for (long v : row) e_[r * 4 + c++] = v;
    ++r;
  }
}

Matrix4 Matrix4::identity() {
  Matrix4 m;
  for (int i = 0; i < 4; ++i) m.e_[i * 5] = 1;
  return m;
}

Matrix4 Matrix4::unit(int row, int col) {
  Matrix4 m;
  m.e_[row * 4 + col] = 1;
  return m;
}

Matrix4 Matrix4::diagonal(const Rat& d0, const Rat& d1, const Rat& d2, const Rat& d3) {
  Matrix4 m;
  m.e_[0] = d0;
  m.e_[5] = d1;
  m.e_[10] = d2;
  m.e_[15] = d3;
  return m;
}

std::array<Rat, 4> Matrix4::row(int r) const {
  return {e_[r * 4], e_[r * 4 + 1], e_[r * 4 + 2], e_[r * 4 + 3]};
}

Matrix4 Matrix4::with(int row, int col, const Rat& value) const {
  Matrix4 m = *this;
  m.e_[row * 4 + col] = value;
  return m;
}

bool Matrix4::is_integral() const {
  for (const auto& v : e_) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

bool Matrix4::is_identity() const { return *this == identity(); }

Matrix4 Matrix4::transpose() const {
  Matrix4 m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m.e_[c * 4 + r] = e_[r * 4 + c];
  return m;
}

namespace {

// Fraction-valued Gauss-Jordan on [a | I]. Returns false when singular.
bool gauss_jordan(std::array<Rat, 16> a, std::array<Rat, 16>& inv, Rat& det) {
  inv = Matrix4::identity().entries();
  det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int r = col; r < 4; ++r) {
      if (a[r * 4 + col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = 0;
      return false;
    }
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) {
        std::swap(a[pivot * 4 + c], a[col * 4 + c]);
        std::swap(inv[pivot * 4 + c], inv[col * 4 + c]);
      }
      det = -det;
    }
    const Rat piv = a[col * 4 + col];
    det *= piv;
    for (int c = 0; c < 4; ++c) {
      a[col * 4 + c] /= piv;
      inv[col * 4 + c] /= piv;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col || a[r * 4 + col] == 0) continue;
      const Rat f = a[r * 4 + col];
      for (int c = 0; c < 4; ++c) {
        a[r * 4 + c] -= f * a[col * 4 + c];
        inv[r * 4 + c] -= f * inv[col * 4 + c];
      }
    }
  }
  return true;
}

}  // namespace

Rat Matrix4::det() const {
  std::array<Rat, 16> inv;
  Rat d;
  gauss_jordan(e_, inv, d);
  return d;
}

Matrix4 Matrix4::inverse() const {
  std::array<Rat, 16> inv;
  Rat d;
  if (!gauss_jordan(e_, inv, d)) throw Error(Errc::SingularMatrix, "4x4 matrix has determinant 0");
  Matrix4 m;
  m.e_ = inv;
  return m;
}

Matrix4 Matrix4::pow(const Int& exponent) const {
  Matrix4 base = exponent < 0 ? inverse() : *this;
  Int n = abs(exponent);
  Matrix4 acc = identity();
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

Matrix4 operator*(const Matrix4& x, const Matrix4& y) {
  Matrix4 m;
  if (x.is_integral() && y.is_integral()) {
    // Integer fast path: accumulate numerators without rational normalisation.
    Int acc;
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        acc = 0;
        for (int k = 0; k < 4; ++k) {
          mpz_addmul(acc.get_mpz_t(), x.e_[r * 4 + k].get_num_mpz_t(), y.e_[k * 4 + c].get_num_mpz_t());
        }
        m.e_[r * 4 + c] = acc;
      }
    }
    return m;
  }
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Rat acc = 0;
      for (int k = 0; k < 4; ++k) acc += x.e_[r * 4 + k] * y.e_[k * 4 + c];
      m.e_[r * 4 + c] = acc;
    }
  }
  return m;
}

Matrix4 operator+(const Matrix4& x, const Matrix4& y) {
  Matrix4 m;
  for (int i = 0; i < 16; ++i) m.e_[i] = x.e_[i] + y.e_[i];
  return m;
}

Matrix4 operator-(const Matrix4& x, const Matrix4& y) {
  Matrix4 m;
  for (int i = 0; i < 16; ++i) m.e_[i] = x.e_[i] - y.e_[i];
  return m;
}

Matrix4 operator*(const Rat& s, const Matrix4& x) {
  Matrix4 m;
  for (int i = 0; i < 16; ++i) m.e_[i] = s * x.e_[i];
  return m;
}

bool operator==(const Matrix4& x, const Matrix4& y) {
  for (int i = 0; i < 16; ++i) {
    if (x.e_[i] != y.e_[i]) return false;
  }
  return true;
}

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b) { return a * b; }

Matrix4 mat_inv(const Matrix4& a) { return a.inverse(); }

}  // namespace sp4cert
