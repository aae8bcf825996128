#include "etype/errors.hpp"
#include "etype/soliton/theorem_case.hpp"

namespace etype::soliton {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::I_nonexistent: return "I-nonexistent";
    case CaseTag::IIA_cylinder: return "II-A-cylinder";
    case CaseTag::IIB_euclidean: return "II-B-euclidean";
    case CaseTag::III_nonexistent: return "III-nonexistent";
    case CaseTag::IV_rotational: return "IV-rotational";
  }
  return "unknown";
}

CaseTag parse_case_tag(const std::string& text) {
  if (text == "I" || text == "I-nonexistent") return CaseTag::I_nonexistent;
  if (text == "II-A" || text == "IIA" || text == "II-A-cylinder") return CaseTag::IIA_cylinder;
  if (text == "II-B" || text == "IIB" || text == "II-B-euclidean") return CaseTag::IIB_euclidean;
  if (text == "III" || text == "III-nonexistent") return CaseTag::III_nonexistent;
  if (text == "IV" || text == "IV-rotational") return CaseTag::IV_rotational;
  throw UnknownNameError("unknown case '" + text + "' (expected I, II-A, II-B, III or IV)");
}

bool is_constructive(CaseTag tag) {
  return tag == CaseTag::IIA_cylinder || tag == CaseTag::IIB_euclidean || tag == CaseTag::IV_rotational;
}

TheoremCase TheoremCase::cylinder(double a, double b) {
  TheoremCase t{CaseTag::IIA_cylinder, a, b, 0.0, 0.0, QuadraticConvention::statement};
  t.validate();
  return t;
}

TheoremCase TheoremCase::euclidean(double a, double b, QuadraticConvention convention) {
  TheoremCase t{CaseTag::IIB_euclidean, a, b, 0.0, 0.0, convention};
  t.validate();
  return t;
}

TheoremCase TheoremCase::rotational(double a, double c, double c1) {
  TheoremCase t{CaseTag::IV_rotational, a, 0.0, c1, c, QuadraticConvention::statement};
  t.validate();
  return t;
}

TheoremCase TheoremCase::nonexistent(CaseTag tag) {
  if (is_constructive(tag)) throw InvalidParametersError("tag is constructive");
  return TheoremCase{tag, 0.0, 0.0, 0.0, 0.0, QuadraticConvention::statement};
}

void TheoremCase::validate() const {
  switch (tag) {
    case CaseTag::IIA_cylinder:
    case CaseTag::IIB_euclidean:
      if (!(a > 0.0)) throw InvalidParametersError(to_string(tag) + " requires a > 0");
      if (c != 0.0) throw InvalidParametersError(to_string(tag) + " has c = 0");
      break;
    case CaseTag::IV_rotational:
      if (!(a > 0.0)) throw InvalidParametersError("IV requires a > 0");
      if (!(c < 0.0)) throw InvalidParametersError("IV requires c < 0 (beta and mu of the same sign)");
      if (!(c1 > 0.0)) throw InvalidParametersError("IV requires c1 > 0");
      break;
    case CaseTag::I_nonexistent:
    case CaseTag::III_nonexistent:
      break;
  }
}

Classification classify(double beta, double mu) {
  if (beta == 0.0 && mu == 0.0)
    throw InvalidParametersError("(alpha, beta, mu) = (0, 0, 0) is excluded");
  if (beta == 0.0) return {{CaseTag::I_nonexistent}, std::nullopt};
  const double c = -mu / beta;
  if (mu == 0.0) return {{CaseTag::IIA_cylinder, CaseTag::IIB_euclidean}, 0.0};
  if ((beta > 0) != (mu > 0)) return {{CaseTag::III_nonexistent}, c};
  return {{CaseTag::IV_rotational}, c};
}

}  // namespace etype::soliton
