#pragma once

#include <Eigen/Dense>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace etype::geom {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
  double length() const { return hi - lo; }
};

/// Metric g on an open box of R^n given in explicit coordinates.
class CoordinatePatch {
 public:
  using MetricFn = std::function<Matrix(const Point&)>;

  CoordinatePatch(int dimension, MetricFn metric, std::vector<Interval> box,
                  double regularity_margin);

  int dimension() const { return dimension_; }
  const std::vector<Interval>& box() const { return box_; }
  double margin() const { return margin_; }

  /// Metric at x without any validation.
  Matrix metric_raw(const Point& x) const { return metric_(x); }

  /// Metric at x; throws DegenerateMetricError if it is not symmetric or a
  /// Cholesky factorization fails.
  Matrix metric(const Point& x) const;

  /// Smallest distance from x to the box boundary over all coordinates.
  double boundary_distance(const Point& x) const;

 private:
  int dimension_;
  MetricFn metric_;
  std::vector<Interval> box_;
  double margin_;
};

/// Scalar field on a patch. The analytic derivative maps are optional;
/// when absent the engine differentiates the value map.
struct ScalarField {
  std::function<double(const Point&)> value;
  std::optional<std::function<Eigen::VectorXd(const Point&)>> gradient;
  std::optional<std::function<Matrix(const Point&)>> second_derivatives;

  explicit ScalarField(std::function<double(const Point&)> v) : value(std::move(v)) {}
};

/// Constant-coefficient Euclidean patch, handy for tests and examples.
CoordinatePatch euclidean_patch(int dimension, double half_width = 2.0,
                                double margin = 0.1);

/// Round unit 2-sphere in (theta, phi) coordinates, g = diag(1, sin^2 theta).
CoordinatePatch round_s2_patch(double margin = 0.1);

/// Flat plane in polar coordinates (r, theta), g = diag(1, r^2), r in [r_min, r_max].
CoordinatePatch polar_plane_patch(double r_min = 0.5, double r_max = 4.0, double margin = 0.1);

}  // namespace etype::geom
