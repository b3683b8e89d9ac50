#include "sp4cert/matrix_io.hpp"


#include "json_support.hpp"

namespace sp4cert {
namespace detail {

namespace {

template <int N>
Json rows_to_json(auto entry) {
  Json rows = Json::array();
  for (int r = 0; r < N; ++r) {
    Json row = Json::array();
    for (int c = 0; c < N; ++c) row.push_back(to_string(entry(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <int N>
void check_shape(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != N) {
    parse_fail(where, "expected an array of " + std::to_string(N) + " rows");
  }
  for (int r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N) {
      parse_fail(where + "/" + std::to_string(r), "expected a row of " + std::to_string(N) + " entries");
    }
  }
}

Rat entry_from_json(const Json& j, const std::string& where) {
  if (!j.is_string()) parse_fail(where, "matrix entries must be strings");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const Error& e) {
    parse_fail(where, e.what());
  }
}

}  // namespace

Json to_json(const Matrix4& m) {
  return rows_to_json<4>([&](int r, int c) { return m(r, c); });
}

Json to_json(const Matrix2& m) {
  return rows_to_json<2>([&](int r, int c) { return m(r, c); });
}

Matrix4 matrix4_from_json(const Json& j, const std::string& where) {
  check_shape<4>(j, where);
  std::array<Rat, 16> e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      e[r * 4 + c] = entry_from_json(j[r][c], where + "/" + std::to_string(r) + "/" + std::to_string(c));
  return Matrix4(e);
}

Matrix2 matrix2_from_json(const Json& j, const std::string& where) {
  check_shape<2>(j, where);
  std::array<Int, 4> e;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const std::string at = where + "/" + std::to_string(r) + "/" + std::to_string(c);
      const Rat v = entry_from_json(j[r][c], at);
      if (!is_integer(v)) parse_fail(at, "2x2 matrices are integral");
      e[r * 2 + c] = v.get_num();
    }
  }
  return {e[0], e[1], e[2], e[3]};
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(Errc::ParseError, "at byte " + std::to_string(e.byte) + ": malformed JSON");
  }
}

const Json& require_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) parse_fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

long require_long(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<long>();
}

Int int_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()), 10);
  if (j.is_string()) {
    try {
      const Rat r = parse_rat(j.get<std::string>());
      if (is_integer(r)) return r.get_num();
    } catch (const Error&) {
    }
  }
  parse_fail(where, "expected an integer");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_string(v));
}

}  // namespace detail

std::string format_matrix(const Matrix4& m) { return detail::to_json(m).dump() + "\n"; }

std::string format_matrix(const Matrix2& m) { return detail::to_json(m).dump() + "\n"; }

AnyMatrix parse_matrix(std::string_view json) {
  const auto j = detail::parse_json_text(json);
  if (j.is_array() && j.size() == 2) return detail::matrix2_from_json(j, "");
  return detail::matrix4_from_json(j, "");
}

Matrix4 parse_matrix4(std::string_view json) { return detail::matrix4_from_json(detail::parse_json_text(json), ""); }

Matrix2 parse_matrix2(std::string_view json) { return detail::matrix2_from_json(detail::parse_json_text(json), ""); }

}  // namespace sp4cert
