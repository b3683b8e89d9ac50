#include <sstream>

#include "json_support.hpp"
#include "sp4cert/certificate.hpp"

namespace sp4cert {

using detail::Json;

std::string serialize(const Certificate& c) {
  std::ostringstream out;
  out << "{\n  \"p\": " << c.p.value() << ",\n  \"nodes\": [";
  for (NodeId i = 0; i < c.nodes.size(); ++i) {
    Json j = Json::object();
    j["id"] = i;
    const Node& node = c.nodes[i];
    if (std::holds_alternative<SeedM0>(node)) {
      j["op"] = "seed_m0";
      j["args"] = Json::array();
    } else if (const auto* s = std::get_if<SeedP2>(&node)) {
      j["op"] = "seed_p2";
      j["args"] = Json::array();
      j["value"] = detail::to_json(s->value);
    } else if (const auto* m = std::get_if<Mul>(&node)) {
      j["op"] = "mul";
      j["args"] = Json::array({m->left, m->right});
    } else if (const auto* v = std::get_if<Inv>(&node)) {
      j["op"] = "inv";
      j["args"] = Json::array({v->arg});
    } else {
      const auto& g = std::get<Conj>(node);
      j["op"] = "conj";
      j["args"] = Json::array({g.arg});
      j["value"] = detail::to_json(g.conjugator);
    }
    out << (i == 0 ? "\n    " : ",\n    ") << j.dump();
  }
  out << (c.nodes.empty() ? "],\n" : "\n  ],\n");
  out << "  \"root\": " << c.root << ",\n  \"target\": " << detail::to_json(c.target).dump() << "\n}\n";
  return out.str();
}

namespace {

std::vector<NodeId> read_args(const Json& node, const std::string& at, std::size_t arity) {
  const Json& args = detail::require_field(node, "args", at);
  if (!args.is_array() || args.size() != arity) {
    detail::parse_fail(at + "/args", "expected " + std::to_string(arity) + " argument(s)");
  }
  std::vector<NodeId> out;
  for (std::size_t k = 0; k < arity; ++k) {
    const Json& a = args[k];
    if (!a.is_number_unsigned()) detail::parse_fail(at + "/args/" + std::to_string(k), "expected a node id");
    out.push_back(a.get<NodeId>());
  }
  return out;
}

}  // namespace

Certificate parse_certificate(std::string_view text) {
  const Json j = detail::parse_json_text(text);
  if (!j.is_object()) detail::parse_fail("", "expected an object");
  const long p_value = detail::require_long(detail::require_field(j, "p", ""), "/p");
  std::optional<OddPrime> p;
  try {
    p.emplace(p_value);
  } catch (const Error& e) {
    detail::parse_fail("/p", e.what());
  }

  Certificate c{*p, {}, 0, Matrix4::identity()};
  const Json& nodes = detail::require_field(j, "nodes", "");
  if (!nodes.is_array()) detail::parse_fail("/nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const std::string at = "/nodes/" + std::to_string(i);
    const Json& node = nodes[i];
    const Json& id = detail::require_field(node, "id", at);
    if (!id.is_number_unsigned() || id.get<std::size_t>() != i) {
      detail::parse_fail(at + "/id", "node ids must equal their position");
    }
    const Json& op_json = detail::require_field(node, "op", at);
    if (!op_json.is_string()) detail::parse_fail(at + "/op", "expected a string");
    const std::string op = op_json.get<std::string>();
    if (op == "seed_m0") {
      read_args(node, at, 0);
      c.nodes.emplace_back(SeedM0{});
    } else if (op == "seed_p2") {
      read_args(node, at, 0);
      c.nodes.emplace_back(SeedP2{detail::matrix4_from_json(detail::require_field(node, "value", at), at + "/value")});
    } else if (op == "mul") {
      const auto args = read_args(node, at, 2);
      c.nodes.emplace_back(Mul{args[0], args[1]});
    } else if (op == "inv") {
      c.nodes.emplace_back(Inv{read_args(node, at, 1)[0]});
    } else if (op == "conj") {
      const auto args = read_args(node, at, 1);
      c.nodes.emplace_back(Conj{args[0], detail::matrix4_from_json(detail::require_field(node, "value", at), at + "/value")});
    } else {
      detail::parse_fail(at + "/op", "unknown op '" + op + "'");
    }
  }
  const Json& root = detail::require_field(j, "root", "");
  if (!root.is_number_unsigned()) detail::parse_fail("/root", "expected a node id");
  c.root = root.get<NodeId>();
  c.target = detail::matrix4_from_json(detail::require_field(j, "target", ""), "/target");
  check_dag(c);
  return c;
}

}  // namespace sp4cert
