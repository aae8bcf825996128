#include "etype/warped/profile.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/warped/spline.hpp"

namespace etype::warped {

namespace {

void require_interval(const Interval& iv) {
  if (!(iv.lo > 0.0)) throw InvalidParametersError("warping interval must start at r0 > 0");
  if (!(iv.hi > iv.lo)) throw InvalidParametersError("warping interval is empty");
}

}  // namespace

WarpingProfile::WarpingProfile(Representation rep, Interval interval, Evaluator evaluator,
                               bool has_third, std::string form, std::vector<double> parameters)
    : representation_(rep), interval_(interval), evaluator_(std::move(evaluator)),
      has_third_(has_third), form_(std::move(form)), parameters_(std::move(parameters)) {
  require_interval(interval_);
  // Positivity on a coarse sweep; evaluate() re-checks pointwise.
  constexpr int kSamples = 257;
  for (int i = 0; i < kSamples; ++i) {
    const double r = interval_.lo + (interval_.hi - interval_.lo) * i / (kSamples - 1);
    if (!(evaluator_(r).v > 0.0)) {
      std::ostringstream os;
      os << "warping function is not positive at r = " << r;
      throw InvalidParametersError(os.str());
    }
  }
}

WarpingProfile WarpingProfile::constant(double a, Interval interval) {
  return {Representation::closed_form, interval, [a](double) { return ProfileJet{a, 0, 0, 0}; },
          true, "constant", {a}};
}

WarpingProfile WarpingProfile::linear(double slope, double intercept, Interval interval) {
  return {Representation::closed_form, interval,
          [slope, intercept](double r) { return ProfileJet{slope * r + intercept, slope, 0, 0}; },
          true, "linear", {slope, intercept}};
}

WarpingProfile WarpingProfile::sine(Interval interval, double amplitude) {
  if (!(interval.hi < std::numbers::pi)) throw InvalidParametersError("sine profile needs r < pi");
  return {Representation::closed_form, interval,
          [amplitude](double r) {
            const double s = std::sin(r), c = std::cos(r);
            return ProfileJet{amplitude * s, amplitude * c, -amplitude * s, -amplitude * c};
          },
          true, "sine", {amplitude}};
}

WarpingProfile WarpingProfile::closed_form(Evaluator evaluator, Interval interval, std::string form,
                                           std::vector<double> parameters) {
  return {Representation::closed_form, interval, std::move(evaluator), true, std::move(form),
          std::move(parameters)};
}

WarpingProfile WarpingProfile::sampled(std::vector<double> knots, std::vector<double> values) {
  auto spline = std::make_shared<const CubicSpline>(std::move(knots), std::move(values));
  WarpingProfile p(Representation::sampled_spline, Interval{spline->front(), spline->back()},
                   [spline](double r) {
                     const auto s = spline->evaluate(r);
                     return ProfileJet{s[0], s[1], s[2], s[3]};
                   },
                   false, "spline", {});
  p.spline_ = std::move(spline);
  return p;
}

WarpingProfile WarpingProfile::from_potential(const RadialField& potential, double c) {
  const bool third = potential.max_order() >= 4;
  auto evaluator = [potential, c](double r) {
    const RadialJet F = potential.evaluate(r);
    const double e = std::exp(-c * F.f);
    const double p1 = F.d1, p2 = F.d2, p3 = F.d3;
    ProfileJet out;
    out.v = p1 * e;
    out.d1 = (p2 - c * p1 * p1) * e;
    out.d2 = (p3 - 3 * c * p1 * p2 + c * c * p1 * p1 * p1) * e;
    out.d3 = (F.d4 - 4 * c * p1 * p3 - 3 * c * p2 * p2 + 6 * c * c * p1 * p1 * p2 -
              c * c * c * p1 * p1 * p1 * p1) *
             e;
    return out;
  };
  const auto rep = potential.representation() == RadialField::Representation::closed_form
                       ? Representation::closed_form
                       : Representation::sampled_spline;
  return {rep, potential.interval(), std::move(evaluator), third, "potential", {c}};
}

ProfileJet WarpingProfile::evaluate(double r) const {
  require_in_interval(interval_, r, "warping profile");
  const ProfileJet j = evaluator_(r);
  if (!(j.v > 0.0)) {
    std::ostringstream os;
    os << "warping function is not positive at r = " << r;
    throw DegenerateMetricError(os.str());
  }
  return j;
}

}  // namespace etype::warped
