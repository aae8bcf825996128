#pragma once

#include <optional>
#include <string>
#include <vector>

namespace etype::soliton {

/// Outcomes of the classification of complete gradient Einstein-type Kahler
/// manifolds with alpha = 0 in real dimension 2m, m > 1.
enum class CaseTag {
  I_nonexistent,    // beta = 0
  IIA_cylinder,     // mu = 0, F has no critical point: R x N, F = a r + b
  IIB_euclidean,    // mu = 0, F'(0) = 0: complex Euclidean space
  III_nonexistent,  // beta, mu of opposite signs
  IV_rotational,    // beta, mu of the same sign: [0, inf) x S^{2m-1}
};

std::string to_string(CaseTag tag);
/// Accepts "I", "II-A", "II-B", "III", "IV" and the long tag names.
CaseTag parse_case_tag(const std::string& text);
bool is_constructive(CaseTag tag);

/// The complex Euclidean case is stated once as F = a r^2 + b and derived
/// once as F' = a r; both conventions are kept and never identified.
enum class QuadraticConvention {
  statement,  // F = a r^2 + b
  derivation  // F' = a r, i.e. F = a r^2 / 2 + b
};

struct TheoremCase {
  CaseTag tag = CaseTag::IV_rotational;
  double a = 1.0;
  double b = 0.0;
  double c1 = 1.0;
  double c = 0.0;
  QuadraticConvention convention = QuadraticConvention::statement;

  static TheoremCase cylinder(double a, double b = 0.0);
  static TheoremCase euclidean(double a, double b = 0.0,
                               QuadraticConvention convention = QuadraticConvention::statement);
  static TheoremCase rotational(double a, double c, double c1);
  static TheoremCase nonexistent(CaseTag tag);

  /// II-A, II-B: a > 0. IV: a > 0, c < 0, c1 > 0. Throws InvalidParametersError.
  void validate() const;
};

struct Classification {
  std::vector<CaseTag> tags;
  std::optional<double> c;  // -mu/beta when beta != 0

  bool operator==(const Classification&) const = default;
};

/// Sign-pattern classification; invariant under (beta, mu) -> (-beta, -mu).
/// mu = 0 returns both constructive subcases since telling them apart needs
/// the critical-point structure of F.
Classification classify(double beta, double mu);

}  // namespace etype::soliton
