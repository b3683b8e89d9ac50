#pragma once

// Straight-line-program certificates that an element lies in the normal
// closure of {M0} and Gamma(p^2) inside Gamma^0_{1,p}.
//
// A certificate is a DAG in topological order. Leaves are SeedM0 or SeedP2
// (a literal element of Gamma(p^2)). Inner nodes (Mul, Inv, Conj) combine
// earlier nodes; Conj(x, g) = g x g^-1 for a literal g in Gamma^0_{1,p}.
// Verification re-checks every side condition and replays exactly.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sp4cert/decompose.hpp"
#include "sp4cert/generators.hpp"
#include "sp4cert/sl2.hpp"

namespace sp4cert {

using NodeId = std::size_t;

struct SeedM0 {
  friend bool operator==(const SeedM0&, const SeedM0&) = default;
};
struct SeedP2 {
  Matrix4 value;
  friend bool operator==(const SeedP2&, const SeedP2&) = default;
};
struct Mul {
  NodeId left;
  NodeId right;
  friend bool operator==(const Mul&, const Mul&) = default;
};
struct Inv {
  NodeId arg;
  friend bool operator==(const Inv&, const Inv&) = default;
};
struct Conj {
  NodeId arg;
  Matrix4 conjugator;
  friend bool operator==(const Conj&, const Conj&) = default;
};

using Node = std::variant<SeedM0, SeedP2, Mul, Inv, Conj>;

struct Certificate {
  OddPrime p;
  std::vector<Node> nodes;
  NodeId root = 0;
  Matrix4 target;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Throws MalformedDag when a node references itself or a later node, or the
/// root is out of range.
void check_dag(const Certificate& c);

/// Exact evaluation of every node, in order. Throws MalformedDag, and
/// SingularMatrix if a conjugator is singular.
std::vector<Matrix4> evaluate_nodes(const Certificate& c);
Matrix4 evaluate(const Certificate& c);

struct CheckResult {
  std::string name;  // "seed-membership", "conjugator-membership", "replay"
  bool passed = true;
  std::optional<NodeId> node;  // first failing node
  std::string detail;
};

struct VerificationReport {
  bool passed = false;
  std::vector<CheckResult> checks;
  std::size_t node_count = 0;
  std::size_t seed_count = 0;
  std::optional<NodeId> failure_node;
  std::string failure;
};

/// Throws MalformedDag for structurally invalid input; every mathematical
/// failure is reported, not thrown.
VerificationReport cert_verify(const Certificate& c);
std::string format_report(const VerificationReport& report);

/// Builds certificates with hash-consed nodes so shared sub-chains (such as
/// the L4 chain inside every j2 expansion) appear once.
class CertificateBuilder {
 public:
  explicit CertificateBuilder(OddPrime p);

  NodeId seed_m0();
  NodeId seed_p2(const Matrix4& value);
  NodeId mul(NodeId left, NodeId right);
  NodeId inv(NodeId arg);
  NodeId conj(NodeId arg, const Matrix4& conjugator);
  /// Exponentiation by squaring; exponent 0 gives seed_p2(I).
  NodeId power(NodeId base, const Int& exponent);

  /// Chains for M0, M1..M4, L1..L5 following the construction; memoised.
  NodeId generator(GenName name);
  /// j1(a) from M0 alone, via conjugates of M0^e by j1 elements.
  NodeId j1_element(const Matrix2& a);
  /// j2(q) for q in Gamma_1(p), from L4, j2(Gamma'_1(p^2)) seeds and
  /// conjugation by j2(SL(2,Z)).
  NodeId j2_element(const Matrix2& q);
  /// Product of the letters of an untilded word.
  NodeId word(const GeneratorWord& w);

  /// The sub-DAG reachable from root, renumbered, with target = its value.
  Certificate finish(NodeId root) const;

  OddPrime p() const { return p_; }
  std::size_t size() const { return nodes_.size(); }

 private:
  NodeId add(Node node);

  OddPrime p_;
  std::vector<Node> nodes_;
  std::map<std::string, NodeId> index_;
  std::map<GenName, NodeId> generators_;
};

/// Certificates for M2, L2, L4, M3, M4, M1 (in construction order).
std::vector<std::pair<GenName, Certificate>> build_generator_certs(OddPrime p);

Certificate expand_j1(const Matrix2& a, OddPrime p);
Certificate expand_j2(const Matrix2& q, OddPrime p);

/// Seed-level certificate for any k in Gamma_{1,p} (NotInGroup otherwise).
Certificate normal_closure_witness(const Matrix4& k, OddPrime p);

/// Canonical JSON text; parse(serialize(c)) == c and serialize(parse(t)) == t
/// for canonical t.
std::string serialize(const Certificate& c);
/// Throws ParseError (with a location) or MalformedDag.
Certificate parse_certificate(std::string_view json);

}  // namespace sp4cert
