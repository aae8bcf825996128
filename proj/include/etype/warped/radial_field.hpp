#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "etype/geometry/patch.hpp"

namespace etype::warped {

using geom::Interval;

/// F and its first four radial derivatives at one point.
struct RadialJet {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d3 = 0.0;
  double d4 = 0.0;

  double operator[](int k) const;
};

/// Knot data behind a spline potential: F' is a cubic spline through
/// `slopes`, F is its integral offset by `value0`.
struct SplineSource {
  std::vector<double> knots;
  std::vector<double> slopes;
  double value0 = 0.0;
};

/// Radial potential F(r) on an interval with derivatives through F''''
/// (or through F''' when max_order == 3).
class RadialField {
 public:
  enum class Representation { closed_form, sampled };
  using Evaluator = std::function<RadialJet(double)>;

  RadialField(Representation representation, Interval interval, Evaluator evaluator,
              int max_order = 4);

  /// Throws OutOfDomainError outside the interval.
  RadialJet evaluate(double r) const;

  Representation representation() const { return representation_; }
  const Interval& interval() const { return interval_; }
  int max_order() const { return max_order_; }

  /// Closed-form descriptor used for serialization ("form" tag + parameters).
  const std::string& form() const { return form_; }
  const std::vector<double>& parameters() const { return parameters_; }
  RadialField& set_form(std::string form, std::vector<double> parameters);

  const SplineSource* spline_source() const { return spline_.get(); }
  RadialField& set_spline_source(SplineSource source);

  /// Largest |D_h F^(k) - F^(k+1)| over the available levels, using a
  /// fourth-order central difference with step h (one-sided points are
  /// shifted inwards near the ends).
  double consistency_defect(double r, double h = 1e-3) const;

 private:
  Representation representation_;
  Interval interval_;
  Evaluator evaluator_;
  int max_order_;
  std::string form_;
  std::vector<double> parameters_;
  std::shared_ptr<const SplineSource> spline_;
};

/// Potential whose derivative is the cubic spline through (knots, slopes).
RadialField spline_potential(std::vector<double> knots, std::vector<double> slopes, double value0);

/// Checks that a r lies in the interval (with a relative slack of 1e-12).
void require_in_interval(const Interval& interval, double r, const char* what);

}  // namespace etype::warped
