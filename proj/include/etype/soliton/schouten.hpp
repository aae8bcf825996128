#pragma once

#include "etype/geometry/tensor_engine.hpp"

namespace etype::soliton {

/// A = (Ric - R/(2(n-1)) g)/(n-2).
geom::Matrix schouten_tensor(const geom::CurvaturePack& curvature, const geom::Matrix& metric);

/// k-th elementary symmetric polynomial of the eigenvalues of A relative to
/// g. Throws DimensionError for n < 3 or a metric of another size, and
/// InvalidParametersError unless 1 <= k <= n.
double schouten_sigma_k(const geom::CurvaturePack& curvature, const geom::Matrix& metric, int n, int k);

/// e_k(values) by the usual recurrence; e_0 = 1.
double elementary_symmetric(const Eigen::VectorXd& values, int k);

}  // namespace etype::soliton
