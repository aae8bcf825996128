#include "etype/warped/radial_field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/warped/spline.hpp"

namespace etype::warped {

double RadialJet::operator[](int k) const {
  switch (k) {
    case 0: return f;
    case 1: return d1;
    case 2: return d2;
    case 3: return d3;
    case 4: return d4;
    default: throw InvalidParametersError("radial jet index must be 0..4");
  }
}

void require_in_interval(const Interval& interval, double r, const char* what) {
  const double slack = 1e-12 * std::max(1.0, std::abs(interval.hi));
  if (!(r >= interval.lo - slack && r <= interval.hi + slack)) {
    std::ostringstream os;
    os << what << ": r = " << r << " outside [" << interval.lo << ", " << interval.hi << "]";
    throw OutOfDomainError(os.str());
  }
}

RadialField::RadialField(Representation representation, Interval interval, Evaluator evaluator,
                         int max_order)
    : representation_(representation), interval_(interval), evaluator_(std::move(evaluator)),
      max_order_(max_order) {
  if (!(interval_.hi > interval_.lo)) throw InvalidParametersError("radial field interval is empty");
  if (max_order_ < 3 || max_order_ > 4) throw InvalidParametersError("radial field needs F''' at least");
}

RadialJet RadialField::evaluate(double r) const {
  require_in_interval(interval_, r, "radial field");
  return evaluator_(r);
}

RadialField& RadialField::set_form(std::string form, std::vector<double> parameters) {
  form_ = std::move(form);
  parameters_ = std::move(parameters);
  return *this;
}

RadialField& RadialField::set_spline_source(SplineSource source) {
  spline_ = std::make_shared<const SplineSource>(std::move(source));
  return *this;
}

double RadialField::consistency_defect(double r, double h) const {
  // Keep the five-point stencil inside the interval.
  const double lo = interval_.lo + 2 * h, hi = interval_.hi - 2 * h;
  if (hi < lo) throw OutOfDomainError("interval too short for the consistency check");
  const double c = std::clamp(r, lo, hi);
  const RadialJet m2 = evaluate(c - 2 * h), m1 = evaluate(c - h), p1 = evaluate(c + h),
                  p2 = evaluate(c + 2 * h), mid = evaluate(c);
  double worst = 0.0;
  for (int k = 0; k < max_order_; ++k) {
    const double fd = (m2[k] - 8 * m1[k] + 8 * p1[k] - p2[k]) / (12 * h);
    worst = std::max(worst, std::abs(fd - mid[k + 1]));
  }
  return worst;
}

RadialField spline_potential(std::vector<double> knots, std::vector<double> slopes, double value0) {
  auto spline = std::make_shared<const CubicSpline>(knots, slopes);
  const Interval interval{spline->front(), spline->back()};
  RadialField field(
      RadialField::Representation::sampled, interval,
      [spline, value0](double r) {
        const auto s = spline->evaluate(r);
        return RadialJet{value0 + spline->integral(r), s[0], s[1], s[2], s[3]};
      },
      4);
  field.set_spline_source(SplineSource{std::move(knots), std::move(slopes), value0});
  return field;
}

}  // namespace etype::warped
