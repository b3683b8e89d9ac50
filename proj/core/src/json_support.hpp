#pragma once

// Shared nlohmann::json helpers for the interchange formats. Private to core.

#include <nlohmann/json.hpp>

#include <string>

#include "sp4cert/error.hpp"
#include "sp4cert/matrix.hpp"

namespace sp4cert::detail {

using Json = nlohmann::ordered_json;

[[noreturn]] inline void parse_fail(const std::string& where, const std::string& what) {
  throw Error(Errc::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

Json to_json(const Matrix4& m);
Json to_json(const Matrix2& m);
Matrix4 matrix4_from_json(const Json& j, const std::string& where);
Matrix2 matrix2_from_json(const Json& j, const std::string& where);

/// Parses text into JSON, turning syntax errors into ParseError with a byte offset.
Json parse_json_text(std::string_view text);

const Json& require_field(const Json& obj, const char* key, const std::string& where);
long require_long(const Json& j, const std::string& where);
Int int_from_json(const Json& j, const std::string& where);
Json int_to_json(const Int& v);

}  // namespace sp4cert::detail
