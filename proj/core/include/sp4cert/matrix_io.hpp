#pragma once

// Matrix interchange: a JSON array of rows, each entry a string holding a
// canonical base-10 integer or reduced "num/den". Row-major, bit-exact.

#include <string>
#include <string_view>
#include <variant>

#include "sp4cert/matrix.hpp"

namespace sp4cert {

using AnyMatrix = std::variant<Matrix2, Matrix4>;

std::string format_matrix(const Matrix4& m);
std::string format_matrix(const Matrix2& m);

/// Parses a 4x4 or 2x2 matrix, deciding the arity from the input.
AnyMatrix parse_matrix(std::string_view json);
Matrix4 parse_matrix4(std::string_view json);
Matrix2 parse_matrix2(std::string_view json);

}  // namespace sp4cert
