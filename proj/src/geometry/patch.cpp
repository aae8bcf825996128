#include "etype/geometry/patch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "etype/errors.hpp"

namespace etype::geom {

CoordinatePatch::CoordinatePatch(int dimension, MetricFn metric, std::vector<Interval> box,
                                 double regularity_margin)
    : dimension_(dimension), metric_(std::move(metric)), box_(std::move(box)),
      margin_(regularity_margin) {
  if (dimension_ < 2) throw DimensionError("coordinate patch needs dimension >= 2");
  if (static_cast<int>(box_.size()) != dimension_)
    throw InvalidParametersError("domain box has the wrong number of intervals");
  if (!(margin_ > 0.0)) throw InvalidParametersError("regularity margin must be positive");
  for (const auto& iv : box_)
    if (!(iv.hi - iv.lo > 2 * margin_))
      throw InvalidParametersError("domain box is empty once the margin is removed");
}

Matrix CoordinatePatch::metric(const Point& x) const {
  Matrix g = metric_(x);
  if (g.rows() != dimension_ || g.cols() != dimension_)
    throw DegenerateMetricError("metric has the wrong shape");
  if (!g.allFinite()) throw DegenerateMetricError("metric has non-finite components");
  const double scale = std::max(1.0, g.cwiseAbs().maxCoeff());
  if ((g - g.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DegenerateMetricError("metric is not symmetric");
  Eigen::LLT<Matrix> llt(g);
  if (llt.info() != Eigen::Success) {
    std::ostringstream os;
    os << "metric is not positive definite at x = (" << x.transpose() << ")";
    throw DegenerateMetricError(os.str());
  }
  return g;
}

double CoordinatePatch::boundary_distance(const Point& x) const {
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < dimension_; ++i)
    d = std::min({d, x[i] - box_[i].lo, box_[i].hi - x[i]});
  return d;
}

CoordinatePatch euclidean_patch(int dimension, double half_width, double margin) {
  return CoordinatePatch(
      dimension, [dimension](const Point&) { return Matrix::Identity(dimension, dimension); },
      std::vector<Interval>(static_cast<std::size_t>(dimension), Interval{-half_width, half_width}),
      margin);
}

CoordinatePatch round_s2_patch(double margin) {
  using std::numbers::pi;
  return CoordinatePatch(
      2,
      [](const Point& x) {
        Matrix g = Matrix::Zero(2, 2);
        const double s = std::sin(x[0]);
        g(0, 0) = 1.0;
        g(1, 1) = s * s;
        return g;
      },
      {Interval{0.0, pi}, Interval{-pi, pi}}, margin);
}

CoordinatePatch polar_plane_patch(double r_min, double r_max, double margin) {
  using std::numbers::pi;
  return CoordinatePatch(
      2,
      [](const Point& x) {
        Matrix g = Matrix::Zero(2, 2);
        g(0, 0) = 1.0;
        g(1, 1) = x[0] * x[0];
        return g;
      },
      {Interval{r_min, r_max}, Interval{-pi, pi}}, margin);
}

}  // namespace etype::geom
