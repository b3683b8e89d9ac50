#pragma once

// Every named matrix of the construction, parametric in p, plus exact replay
// of the identities that build M1..M4 out of M0 and level-p^2 elements.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sp4cert/groups.hpp"
#include "sp4cert/matrix.hpp"

namespace sp4cert {

enum class GenName { M0, M1, M2, M3, M4, Mt1, Mt2, Mt3, Mt4, L1, L2, L3, L4, L5, P, R, J, Lambda };

std::string_view to_string(GenName n) noexcept;
/// Throws UnknownName.
GenName parse_gen_name(std::string_view name);

using GeneratorValue = std::variant<Matrix4, Matrix2>;

/// The named matrix at p. M1 carries the (4,4) = 1 correction; P is 2x2.
GeneratorValue generator(GenName name, OddPrime p);
/// As generator(), for the 4x4 names; throws ArityMismatch for P.
Matrix4 generator4(GenName name, OddPrime p);
/// Lookup by string name; throws UnknownName.
GeneratorValue generator(std::string_view name, OddPrime p);

/// M1 exactly as printed, with row 4 = (1,0,0,0). Singular.
Matrix4 printed_m1();

/// Where each generator must land (nullopt for R, J, Lambda).
std::optional<GroupLabel> home_group(GenName name);

/// (1 0; p 1), the generator P of the 2x2 machinery.
Matrix2 p_matrix(OddPrime p);

/// Tilde twin of M1..M4 (M1 -> Mt1 ...); identity on other names.
GenName tilde_of(GenName name);
/// Inverse of tilde_of.
GenName untilde_of(GenName name);

struct IdentityCheck {
  std::string name;       // the generator the identity produces: "M2", "L2", ...
  std::string statement;  // human-readable identity
  bool passed = false;
  Matrix4 residual;       // lhs - rhs, zero when passed
};

struct IdentityReport {
  long p = 0;
  Int lambda;  // -2 lambda + p^2 mu = 1
  Int mu;
  std::vector<IdentityCheck> checks;
  /// Informational lines on the corrected M1 and the corrected M4 identity.
  std::vector<std::string> errata;
  bool passed() const;
};

IdentityReport verify_identities(OddPrime p);

/// Line-oriented text with a final PASS/FAIL line.
std::string format_report(const IdentityReport& report);

}  // namespace sp4cert
