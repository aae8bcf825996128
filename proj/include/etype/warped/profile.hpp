#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "etype/warped/radial_field.hpp"

namespace etype::warped {

/// psi and its first three derivatives.
struct ProfileJet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
};

class CubicSpline;

/// Warping function psi(r) > 0 on [r0, r1], r0 > 0.
class WarpingProfile {
 public:
  enum class Representation { closed_form, sampled_spline };
  using Evaluator = std::function<ProfileJet(double)>;

  /// psi = a.
  static WarpingProfile constant(double a, Interval interval);
  /// psi = slope * r + intercept.
  static WarpingProfile linear(double slope, double intercept, Interval interval);
  /// psi = amplitude * sin(r); the interval must lie inside (0, pi).
  static WarpingProfile sine(Interval interval, double amplitude = 1.0);
  /// Arbitrary closed form supplying three derivatives.
  static WarpingProfile closed_form(Evaluator evaluator, Interval interval, std::string form,
                                    std::vector<double> parameters = {});
  /// C^2 cubic spline through samples; psi''' is not used (see has_third_derivative).
  static WarpingProfile sampled(std::vector<double> knots, std::vector<double> values);
  /// psi = F' exp(-c F); derivatives follow from the jets of F.
  static WarpingProfile from_potential(const RadialField& potential, double c);

  /// Throws OutOfDomainError outside the interval and DegenerateMetricError
  /// where psi <= 0.
  ProfileJet evaluate(double r) const;

  Representation representation() const { return representation_; }
  const Interval& interval() const { return interval_; }
  bool has_third_derivative() const { return has_third_; }
  const std::string& form() const { return form_; }
  const std::vector<double>& parameters() const { return parameters_; }
  /// Knot data for sampled profiles, null otherwise.
  const CubicSpline* spline() const { return spline_.get(); }

 private:
  WarpingProfile(Representation rep, Interval interval, Evaluator evaluator, bool has_third,
                 std::string form, std::vector<double> parameters);

  Representation representation_;
  Interval interval_;
  Evaluator evaluator_;
  bool has_third_;
  std::string form_;
  std::vector<double> parameters_;
  std::shared_ptr<const CubicSpline> spline_;
};

}  // namespace etype::warped
