#pragma once

#include <array>
#include <optional>
#include <vector>

namespace etype::warped {

/// C^2 cubic interpolating spline with clamped ends. When an end slope is not
/// supplied it is taken from the cubic through the four nearest knots, which
/// keeps the interpolation error O(h^4) up to the boundary.
class CubicSpline {
 public:
  CubicSpline(std::vector<double> knots, std::vector<double> values,
              std::optional<double> start_slope = std::nullopt,
              std::optional<double> end_slope = std::nullopt);

  /// (s, s', s'', s''') at x; s''' is the constant of the containing segment.
  std::array<double, 4> evaluate(double x) const;

  /// Integral of s from the first knot to x.
  double integral(double x) const;

  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& values() const { return y_; }
  double front() const { return x_.front(); }
  double back() const { return x_.back(); }

 private:
  std::size_t segment(double x) const;
  double segment_integral(std::size_t i, double t) const;

  std::vector<double> x_;
  std::vector<double> y_;
  std::vector<double> m_;           // second derivatives at knots
  std::vector<double> cumulative_;  // integral up to each knot
};

}  // namespace etype::warped
