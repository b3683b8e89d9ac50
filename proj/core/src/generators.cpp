#include "sp4cert/generators.hpp"

#include <sstream>
#include <utility>

#include "sp4cert/error.hpp"
#include "sp4cert/matrix_io.hpp"

namespace sp4cert {

namespace {

std::string one_line(const Matrix4& m) {
  std::string s = format_matrix(m);
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

constexpr std::pair<GenName, std::string_view> kNames[] = {
    {GenName::M0, "M0"},   {GenName::M1, "M1"},   {GenName::M2, "M2"},   {GenName::M3, "M3"},
    {GenName::M4, "M4"},   {GenName::Mt1, "Mt1"}, {GenName::Mt2, "Mt2"}, {GenName::Mt3, "Mt3"},
    {GenName::Mt4, "Mt4"}, {GenName::L1, "L1"},   {GenName::L2, "L2"},   {GenName::L3, "L3"},
    {GenName::L4, "L4"},   {GenName::L5, "L5"},   {GenName::P, "P"},     {GenName::R, "R"},
    {GenName::J, "J"},     {GenName::Lambda, "Lambda"},
};

}  // namespace

std::string_view to_string(GenName n) noexcept {
  for (const auto& [name, text] : kNames)
    if (name == n) return text;
  return "?";
}

GenName parse_gen_name(std::string_view name) {
  for (const auto& [n, text] : kNames)
    if (text == name) return n;
  throw Error(Errc::UnknownName, "no generator named '" + std::string(name) + "'");
}

Matrix2 p_matrix(OddPrime p) { return {Int(1), Int(0), p.as_int(), Int(1)}; }

Matrix4 printed_m1() { return Matrix4{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 0}}; }

Matrix4 generator4(GenName name, OddPrime p) {
  const long q = p.value();
  switch (name) {
    case GenName::M0: return {{1, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    // Printed with row 4 = (1,0,0,0); (4,4) = 1 makes it R-conjugate to Mt1.
    case GenName::M1: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {1, 0, 0, 1}};
    case GenName::M2: return {{1, 0, 0, q}, {0, 1, q, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    case GenName::M3: return {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}};
    case GenName::M4: return {{1, 0, 0, 0}, {-q, 1, 0, 0}, {0, 0, 1, q}, {0, 0, 0, 1}};
    case GenName::Mt1: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 1, 0}, {q, 0, 0, 1}};
    case GenName::Mt2: return {{1, 0, 0, 1}, {0, 1, q, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    case GenName::Mt3: return {{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -q, 1}};
    case GenName::Mt4: return {{1, 0, 0, 0}, {-q, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}};
    case GenName::L1: return {{1, 0, 0, 0}, {0, 1, 0, q * q}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    case GenName::L2: return {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, -2, 0, 1}};
    case GenName::L3: return j2_embed({Int(1), Int(0), Int(p.as_int() * p.as_int() * p.as_int()), Int(1)}, p, Coords::Untilded);
    case GenName::L4: return j2_embed(p_matrix(p), p, Coords::Untilded);
    case GenName::L5: return j1_embed({Int(1), Int(0), Int(1), Int(1)});
    case GenName::R: return Matrix4::diagonal(1, 1, 1, Rat(q));
    case GenName::J: return SymplecticForm::J().matrix();
    case GenName::Lambda: return SymplecticForm::Lambda(p).matrix();
    case GenName::P: break;
  }
  throw Error(Errc::ArityMismatch, "P is a 2x2 matrix");
}

GeneratorValue generator(GenName name, OddPrime p) {
  if (name == GenName::P) return p_matrix(p);
  return generator4(name, p);
}

GeneratorValue generator(std::string_view name, OddPrime p) { return generator(parse_gen_name(name), p); }

std::optional<GroupLabel> home_group(GenName name) {
  switch (name) {
    case GenName::Mt1:
    case GenName::Mt2:
    case GenName::Mt3:
    case GenName::Mt4: return GroupLabel::GammaTilde_1p;
    case GenName::L1:
    case GenName::L3: return GroupLabel::Gamma_p2;
    case GenName::P: return GroupLabel::Gamma1_of_p;
    case GenName::R:
    case GenName::J:
    case GenName::Lambda: return std::nullopt;
    default: return GroupLabel::Gamma_1p;
  }
}

GenName tilde_of(GenName name) {
  switch (name) {
    case GenName::M1: return GenName::Mt1;
    case GenName::M2: return GenName::Mt2;
    case GenName::M3: return GenName::Mt3;
    case GenName::M4: return GenName::Mt4;
    default: return name;
  }
}

GenName untilde_of(GenName name) {
  switch (name) {
    case GenName::Mt1: return GenName::M1;
    case GenName::Mt2: return GenName::M2;
    case GenName::Mt3: return GenName::M3;
    case GenName::Mt4: return GenName::M4;
    default: return name;
  }
}

bool IdentityReport::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

IdentityReport verify_identities(OddPrime p) {
  const auto g = [&](GenName n) { return generator4(n, p); };
  const Matrix4 M0 = g(GenName::M0), M1 = g(GenName::M1), M2 = g(GenName::M2), M3 = g(GenName::M3),
                M4 = g(GenName::M4), L1 = g(GenName::L1), L2 = g(GenName::L2), L3 = g(GenName::L3),
                L4 = g(GenName::L4), L5 = g(GenName::L5);
  const auto inv = [](const Matrix4& m) { return m.inverse(); };

  IdentityReport report;
  report.p = p.value();
  const Int p2 = p.as_int() * p.as_int();
  const GcdResult bezout = ext_gcd(Int(-2), p2);
  report.lambda = bezout.x;
  report.mu = bezout.y;

  auto check = [&](std::string name, std::string statement, const Matrix4& lhs, const Matrix4& rhs) {
    IdentityCheck c{std::move(name), std::move(statement), lhs == rhs, lhs - rhs};
    report.checks.push_back(std::move(c));
  };

  check("M2", "M2 = M4^-1 M0 M4 M0^-1 L1^-1", inv(M4) * M0 * M4 * inv(M0) * inv(L1), M2);
  const Matrix4 commutator = M1 * M0 * inv(M1) * inv(M1) * M0 * M1;
  check("L2", "M1 M0 M1^-1 M1^-1 M0 M1 j1((1,-2),(0,1)) = L2",
        commutator * j1_embed({Int(1), Int(-2), Int(0), Int(1)}), L2);
  check("L4", "L2^lambda L3^mu = L4 with -2 lambda + p^2 mu = 1", L2.pow(report.lambda) * L3.pow(report.mu), L4);
  check("M3", "L4 M1 M0 M1^-1 M0^-1 = M3^-1", L4 * M1 * M0 * inv(M1) * inv(M0), inv(M3));
  check("M4", "L5^-1 M2^-1 L5 M2 L1 = M4", inv(L5) * inv(M2) * L5 * M2 * L1, M4);
  check("M1", "M3 L5 L4 M3^-1 L5^-1 L2 = M1^-1", M3 * L5 * L4 * inv(M3) * inv(L5) * L2, inv(M1));

  const Matrix4 printed = printed_m1();
  std::ostringstream m1_note;
  m1_note << "M1 as printed has row 4 = (1,0,0,0) and det " << to_string(printed.det())
          << "; corrected to (4,4) = 1, R M1 R^-1 = Mt1 "
          << (r_conjugate(M1, p) == g(GenName::Mt1) ? "holds" : "FAILS");
  report.errata.push_back(m1_note.str());

  const Matrix4 printed_v = inv(L5) * inv(M2) * L5 * M2 * inv(L1);
  std::ostringstream v_note;
  v_note << "M4 identity with L1^-1 in place of L1, L5^-1 M2^-1 L5 M2 L1^-1 = M4, "
         << (printed_v == M4 ? "holds" : "fails with residual " + one_line(printed_v - M4))
         << "; the form with L1 is the one checked";
  report.errata.push_back(v_note.str());
  return report;
}

std::string format_report(const IdentityReport& report) {
  std::ostringstream out;
  out << "identities p=" << report.p << " lambda=" << to_string(report.lambda) << " mu=" << to_string(report.mu)
      << "\n";
  for (const auto& c : report.checks) {
    out << (c.passed ? "pass " : "FAIL ") << c.name << ": " << c.statement;
    if (!c.passed) out << " residual=" << one_line(c.residual);
    out << "\n";
  }
  for (const auto& e : report.errata) out << "erratum: " << e << "\n";
  out << (report.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace sp4cert
