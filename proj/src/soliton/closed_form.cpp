#include "etype/soliton/closed_form.hpp"

#include <cmath>
#include <sstream>

#include "etype/errors.hpp"

namespace etype::soliton {

RadialJet closed_form_potential(const TheoremCase& tc, double r) {
  tc.validate();
  switch (tc.tag) {
    case CaseTag::IIA_cylinder:
      return {tc.a * r + tc.b, tc.a, 0.0, 0.0, 0.0};
    case CaseTag::IIB_euclidean:
      if (tc.convention == QuadraticConvention::statement)
        return {tc.a * r * r + tc.b, 2 * tc.a * r, 2 * tc.a, 0.0, 0.0};
      return {0.5 * tc.a * r * r + tc.b, tc.a * r, tc.a, 0.0, 0.0};
    case CaseTag::IV_rotational: {
      // F = log(k q) / k with k = -c > 0 and q = a r^2 / 2 + c1.
      const double k = -tc.c;
      const double q = 0.5 * tc.a * r * r + tc.c1;
      if (!(k * q > 0.0)) {
        std::ostringstream os;
        os << "log argument c(-(a/2) r^2 - c1) = " << k * q << " is not positive at r = " << r;
        throw OutOfDomainError(os.str());
      }
      const double u = tc.a * r / q;  // q'/q
      const double w = tc.a / q;      // q''/q
      const double l1 = u;
      const double l2 = w - u * u;
      const double l3 = -3 * u * w + 2 * u * u * u;
      const double l4 = -3 * w * w + 12 * u * u * w - 6 * u * u * u * u;
      return {std::log(k * q) / k, l1 / k, l2 / k, l3 / k, l4 / k};
    }
    case CaseTag::I_nonexistent:
    case CaseTag::III_nonexistent:
      break;
  }
  throw NoModelError("case " + to_string(tc.tag) + " has no potential");
}

RadialField closed_form_field(const TheoremCase& tc, Interval interval) {
  tc.validate();
  if (!is_constructive(tc.tag)) throw NoModelError("case " + to_string(tc.tag) + " has no potential");
  RadialField field(RadialField::Representation::closed_form, interval,
                    [tc](double r) { return closed_form_potential(tc, r); }, 4);
  field.set_form("case-" + to_string(tc.tag),
                 {tc.a, tc.b, tc.c1, tc.c, tc.convention == QuadraticConvention::statement ? 0.0 : 1.0});
  return field;
}

Model build_model(const TheoremCase& tc, int dimension, Interval interval, ModelFiber fiber) {
  if (!is_constructive(tc.tag)) {
    const std::string which = tc.tag == CaseTag::I_nonexistent ? "I" : "III";
    throw NoModelError("no non-trivial Einstein-type manifold (Theorem 1 (" + which + "))");
  }
  tc.validate();
  if (dimension < 3) throw DimensionError("models need dimension n >= 3");
  if (fiber == ModelFiber::flat && tc.tag != CaseTag::IIA_cylinder)
    throw UnsupportedChartError("only the cylinder case admits a flat fiber");

  RadialField potential = closed_form_field(tc, interval);
  const double c = tc.tag == CaseTag::IV_rotational ? tc.c : 0.0;
  const auto spec = fiber == ModelFiber::flat ? warped::FiberSpec::flat(dimension - 1)
                                              : warped::FiberSpec::round_sphere(dimension - 1);
  WarpedMetric metric(warped::WarpingProfile::from_potential(potential, c), spec);

  std::vector<std::string> notes;
  auto cone_note = [&](double slope) {
    if (slope != 1.0) {
      std::ostringstream os;
      os << "psi = " << slope << " r: cone angle at the tip (smoothness at r = 0 not assessed)";
      notes.push_back(os.str());
    }
  };
  if (tc.tag == CaseTag::IV_rotational) cone_note(tc.a);
  if (tc.tag == CaseTag::IIB_euclidean)
    cone_note(tc.convention == QuadraticConvention::statement ? 2 * tc.a : tc.a);
  return Model{tc, std::move(metric), std::move(potential), c, std::move(notes)};
}

RadialField potential_from_record(const warped::KeyValueRecord& record) {
  if (record.get("representation") != "closed-form") return warped::sampled_potential_from_record(record);
  const std::string form = record.get("form");
  const std::string prefix = "case-";
  if (form.rfind(prefix, 0) != 0) throw UnknownNameError("unknown potential form '" + form + "'");
  const auto p = record.get_doubles("parameters");
  if (p.size() != 5) throw ParseError("case potentials take parameters a b c1 c convention");
  TheoremCase tc{parse_case_tag(form.substr(prefix.size())), p[0], p[1], p[2], p[3],
                 p[4] == 0.0 ? QuadraticConvention::statement : QuadraticConvention::derivation};
  const auto iv = record.get_doubles("interval");
  if (iv.size() != 2) throw ParseError("interval needs two numbers");
  return closed_form_field(tc, Interval{iv[0], iv[1]});
}

}  // namespace etype::soliton
