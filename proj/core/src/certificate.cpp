#include "sp4cert/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "sp4cert/error.hpp"
#include "sp4cert/matrix_io.hpp"

namespace sp4cert {

void check_dag(const Certificate& c) {
  auto bad = [](NodeId at, const std::string& what) {
    return Error(Errc::MalformedDag, "node " + std::to_string(at) + ": " + what);
  };
  for (NodeId i = 0; i < c.nodes.size(); ++i) {
    const auto earlier = [&](NodeId ref) {
      if (ref >= i) throw bad(i, "argument " + std::to_string(ref) + " is not an earlier node");
    };
    if (const auto* m = std::get_if<Mul>(&c.nodes[i])) {
      earlier(m->left);
      earlier(m->right);
    } else if (const auto* v = std::get_if<Inv>(&c.nodes[i])) {
      earlier(v->arg);
    } else if (const auto* g = std::get_if<Conj>(&c.nodes[i])) {
      earlier(g->arg);
    }
  }
  if (c.nodes.empty()) throw Error(Errc::MalformedDag, "certificate has no nodes");
  if (c.root >= c.nodes.size()) throw Error(Errc::MalformedDag, "root " + std::to_string(c.root) + " out of range");
}

namespace {

Matrix4 evaluate_node(const Node& node, const std::vector<Matrix4>& values, const Matrix4& m0) {
  if (std::holds_alternative<SeedM0>(node)) return m0;
  if (const auto* s = std::get_if<SeedP2>(&node)) return s->value;
  if (const auto* m = std::get_if<Mul>(&node)) return values[m->left] * values[m->right];
  if (const auto* v = std::get_if<Inv>(&node)) return values[v->arg].inverse();
  const auto& g = std::get<Conj>(node);
  return g.conjugator * values[g.arg] * g.conjugator.inverse();
}

}  // namespace

std::vector<Matrix4> evaluate_nodes(const Certificate& c) {
  check_dag(c);
  const Matrix4 m0 = generator4(GenName::M0, c.p);
  std::vector<Matrix4> values;
  values.reserve(c.nodes.size());
  for (const auto& node : c.nodes) values.push_back(evaluate_node(node, values, m0));
  return values;
}

Matrix4 evaluate(const Certificate& c) { return evaluate_nodes(c)[c.root]; }

VerificationReport cert_verify(const Certificate& c) {
  check_dag(c);
  VerificationReport report;
  report.node_count = c.nodes.size();

  CheckResult seeds{"seed-membership", true, std::nullopt, ""};
  CheckResult conjugators{"conjugator-membership", true, std::nullopt, ""};
  for (NodeId i = 0; i < c.nodes.size(); ++i) {
    if (std::holds_alternative<SeedM0>(c.nodes[i])) {
      ++report.seed_count;
    } else if (const auto* s = std::get_if<SeedP2>(&c.nodes[i])) {
      ++report.seed_count;
      if (seeds.passed && !member(s->value, GroupLabel::Gamma_p2, c.p)) {
        seeds = {"seed-membership", false, i, "seed_p2 value is not in Gamma(p^2)"};
      }
    } else if (const auto* g = std::get_if<Conj>(&c.nodes[i])) {
      if (conjugators.passed && !member(g->conjugator, GroupLabel::Gamma0_1p, c.p)) {
        conjugators = {"conjugator-membership", false, i, "conjugator is not in Gamma^0_{1,p}"};
      }
    }
  }

  CheckResult replay{"replay", true, std::nullopt, ""};
  if (!conjugators.passed) {
    replay = {"replay", false, std::nullopt, "not run: invalid conjugator"};
  } else {
    const Matrix4 m0 = generator4(GenName::M0, c.p);
    std::vector<Matrix4> values;
    values.reserve(c.root + 1);
    for (NodeId i = 0; i <= c.root && replay.passed; ++i) {
      try {
        values.push_back(evaluate_node(c.nodes[i], values, m0));
      } catch (const Error& e) {
        if (e.code() != Errc::SingularMatrix) throw;
        replay = {"replay", false, i, "inverse of a singular value"};
      }
    }
    if (replay.passed && values[c.root] != c.target) {
      replay = {"replay", false, c.root, "root evaluates to " + format_matrix(values[c.root])};
      if (replay.detail.back() == '\n') replay.detail.pop_back();
    }
  }

  report.checks = {seeds, conjugators, replay};
  report.passed = true;
  for (const auto& check : report.checks) {
    if (!check.passed && report.passed) {
      report.passed = false;
      report.failure_node = check.node;
      report.failure = check.name + ": " + check.detail;
    }
  }
  return report;
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "nodes " << report.node_count << "\n";
  out << "seeds " << report.seed_count << "\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name;
    if (c.node) out << " at node " << *c.node;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  out << (report.passed ? "PASS" : "FAIL") << "\n";
  return out.str();
}

// ---- builder ---------------------------------------------------------------

CertificateBuilder::CertificateBuilder(OddPrime p) : p_(p) {}

NodeId CertificateBuilder::add(Node node) {
  std::string key;
  if (std::holds_alternative<SeedM0>(node)) {
    key = "m0";
  } else if (const auto* s = std::get_if<SeedP2>(&node)) {
    key = "p2" + format_matrix(s->value);
  } else if (const auto* m = std::get_if<Mul>(&node)) {
    key = "mul " + std::to_string(m->left) + " " + std::to_string(m->right);
  } else if (const auto* v = std::get_if<Inv>(&node)) {
    key = "inv " + std::to_string(v->arg);
  } else {
    const auto& g = std::get<Conj>(node);
    key = "conj " + std::to_string(g.arg) + format_matrix(g.conjugator);
  }
  if (auto it = index_.find(key); it != index_.end()) return it->second;
  nodes_.push_back(std::move(node));
  index_.emplace(std::move(key), nodes_.size() - 1);
  return nodes_.size() - 1;
}

NodeId CertificateBuilder::seed_m0() { return add(SeedM0{}); }
NodeId CertificateBuilder::seed_p2(const Matrix4& value) { return add(SeedP2{value}); }
NodeId CertificateBuilder::mul(NodeId left, NodeId right) { return add(Mul{left, right}); }

NodeId CertificateBuilder::inv(NodeId arg) {
  if (const auto* v = std::get_if<Inv>(&nodes_[arg])) return v->arg;
  return add(Inv{arg});
}

NodeId CertificateBuilder::conj(NodeId arg, const Matrix4& conjugator) {
  if (conjugator.is_identity()) return arg;
  return add(Conj{arg, conjugator});
}

NodeId CertificateBuilder::power(NodeId base, const Int& exponent) {
  if (exponent == 0) return seed_p2(Matrix4::identity());
  const NodeId b = exponent < 0 ? inv(base) : base;
  const Int n = abs(exponent);
  NodeId acc = b;
  for (long bit = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
    acc = mul(acc, acc);
    if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) acc = mul(acc, b);
  }
  return acc;
}

NodeId CertificateBuilder::generator(GenName name) {
  if (auto it = generators_.find(name); it != generators_.end()) return it->second;
  const auto g = [&](GenName n) { return generator4(n, p_); };
  const NodeId m0 = seed_m0();
  NodeId id = 0;
  switch (name) {
    case GenName::M0: id = m0; break;
    case GenName::L1: id = seed_p2(g(GenName::L1)); break;
    case GenName::L3: id = seed_p2(g(GenName::L3)); break;
    case GenName::M2: {
      // M2 = M4^-1 M0 M4 M0^-1 L1^-1
      const NodeId c = conj(m0, g(GenName::M4).inverse());
      id = mul(mul(c, inv(m0)), inv(generator(GenName::L1)));
      break;
    }
    case GenName::L2: {
      // L2 = (M1 M0 M1^-1)(M1^-1 M0 M1) j1((1,-2),(0,1)), and j1(T^-2) = M0^-2
      const Matrix4 m1 = g(GenName::M1);
      const NodeId y = mul(conj(m0, m1), conj(m0, m1.inverse()));
      id = mul(y, power(m0, Int(-2)));
      break;
    }
    case GenName::L4: {
      // L4 = L2^lambda L3^mu with -2 lambda + p^2 mu = 1
      const GcdResult e = ext_gcd(Int(-2), Int(p_.as_int() * p_.as_int()));
      id = mul(power(generator(GenName::L2), e.x), power(generator(GenName::L3), e.y));
      break;
    }
    case GenName::M3: {
      // M3^-1 = L4 M1 M0 M1^-1 M0^-1
      id = inv(mul(mul(generator(GenName::L4), conj(m0, g(GenName::M1))), inv(m0)));
      break;
    }
    case GenName::L5: id = j1_element(sl2_U()); break;
    case GenName::M4: {
      // M4 = L5^-1 M2^-1 L5 M2 L1
      const NodeId m2 = generator(GenName::M2);
      id = mul(mul(conj(inv(m2), g(GenName::L5).inverse()), m2), generator(GenName::L1));
      break;
    }
    case GenName::M1: {
      // M1^-1 = M3 (L5 L4) M3^-1 L5^-1 L2
      const NodeId l5 = generator(GenName::L5);
      const NodeId inner = conj(mul(l5, generator(GenName::L4)), g(GenName::M3));
      id = inv(mul(mul(inner, inv(l5)), generator(GenName::L2)));
      break;
    }
    default:
      throw Error(Errc::UnknownName, std::string(to_string(name)) + " has no certificate chain");
  }
  generators_.emplace(name, id);
  return id;
}

NodeId CertificateBuilder::j1_element(const Matrix2& a) {
  const ConjugateList list = normal_closure_decompose(a);
  const NodeId m0 = seed_m0();
  if (list.factors.empty()) return mul(m0, inv(m0));
  std::optional<NodeId> acc;
  for (const auto& f : list.factors) {
    const NodeId factor = conj(power(m0, f.exponent), j1_embed(f.conjugator));
    acc = acc ? mul(*acc, factor) : factor;
  }
  return *acc;
}

NodeId CertificateBuilder::j2_element(const Matrix2& q) {
  const Gamma1pSteps steps = gamma1p_generate(q, p_);
  std::optional<NodeId> acc;
  for (const auto& step : steps.steps) {
    if (const auto* s = std::get_if<MultiplyLeftP>(&step)) {
      const NodeId x = power(generator(GenName::L4), s->exponent);
      acc = acc ? mul(x, *acc) : x;
    } else if (const auto* s = std::get_if<MultiplyLeftPrime>(&step)) {
      const NodeId x = seed_p2(j2_embed(s->element, p_, Coords::Untilded));
      acc = acc ? mul(x, *acc) : x;
    } else if (acc) {
      acc = conj(*acc, j2_embed(std::get<ConjugateBy>(step).by, p_, Coords::Untilded));
    }
  }
  return acc ? *acc : seed_p2(Matrix4::identity());
}

NodeId CertificateBuilder::word(const GeneratorWord& w) {
  if (w.coords != Coords::Untilded) throw Error(Errc::DomainError, "certificates are built from untilded words");
  std::optional<NodeId> acc;
  for (const auto& letter : w.letters) {
    NodeId x;
    if (const auto* n = std::get_if<NamedLetter>(&letter)) {
      x = power(generator(untilde_of(n->name)), n->exponent);
    } else if (const auto* a = std::get_if<J1Letter>(&letter)) {
      x = j1_element(a->a);
    } else {
      x = j2_element(std::get<J2Letter>(letter).q);
    }
    acc = acc ? mul(*acc, x) : x;
  }
  return acc ? *acc : seed_p2(Matrix4::identity());
}

Certificate CertificateBuilder::finish(NodeId root) const {
  // Post-order from the root, left argument first: node numbering depends only
  // on the shape of the sub-DAG, never on the order the builder created it.
  const auto children = [&](NodeId id) -> std::vector<NodeId> {
    if (const auto* m = std::get_if<Mul>(&nodes_[id])) return {m->left, m->right};
    if (const auto* v = std::get_if<Inv>(&nodes_[id])) return {v->arg};
    if (const auto* g = std::get_if<Conj>(&nodes_[id])) return {g->arg};
    return {};
  };
  std::map<NodeId, NodeId> renumber;
  Certificate out{p_, {}, 0, Matrix4::identity()};
  std::vector<std::pair<NodeId, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [id, next] = stack.back();
    const std::vector<NodeId> kids = children(id);
    if (next < kids.size()) {
      const NodeId child = kids[next++];
      if (!renumber.contains(child)) stack.emplace_back(child, 0);
      continue;
    }
    if (!renumber.contains(id)) {
      Node node = nodes_[id];
      if (auto* m = std::get_if<Mul>(&node)) {
        m->left = renumber.at(m->left);
        m->right = renumber.at(m->right);
      } else if (auto* v = std::get_if<Inv>(&node)) {
        v->arg = renumber.at(v->arg);
      } else if (auto* g = std::get_if<Conj>(&node)) {
        g->arg = renumber.at(g->arg);
      }
      renumber.emplace(id, out.nodes.size());
      out.nodes.push_back(std::move(node));
    }
    stack.pop_back();
  }
  out.root = renumber.at(root);
  out.target = evaluate(out);
  return out;
}

std::vector<std::pair<GenName, Certificate>> build_generator_certs(OddPrime p) {
  CertificateBuilder builder(p);
  std::vector<std::pair<GenName, Certificate>> out;
  for (GenName name : {GenName::M2, GenName::L2, GenName::L4, GenName::M3, GenName::M4, GenName::M1}) {
    out.emplace_back(name, builder.finish(builder.generator(name)));
  }
  return out;
}

Certificate expand_j1(const Matrix2& a, OddPrime p) {
  if (a.det() != 1) throw Error(Errc::NotUnimodular, "expand_j1 needs det 1");
  CertificateBuilder builder(p);
  return builder.finish(builder.j1_element(a));
}

Certificate expand_j2(const Matrix2& q, OddPrime p) {
  CertificateBuilder builder(p);
  return builder.finish(builder.j2_element(q));
}

Certificate normal_closure_witness(const Matrix4& k, OddPrime p) {
  if (!member(k, GroupLabel::Gamma_1p, p)) throw Error(Errc::NotInGroup, "matrix is not in Gamma_{1,p}");
  CertificateBuilder builder(p);
  return builder.finish(builder.word(decompose(k, p, Coords::Untilded)));
}

}  // namespace sp4cert
