#include "etype/soliton/schouten.hpp"

#include <Eigen/Eigenvalues>

#include "etype/errors.hpp"

namespace etype::soliton {

geom::Matrix schouten_tensor(const geom::CurvaturePack& curv, const geom::Matrix& g) {
  const auto n = static_cast<double>(g.rows());
  if (g.rows() < 3) throw DimensionError("Schouten tensor needs n >= 3");
  return (curv.ricci - curv.scalar / (2.0 * (n - 1.0)) * g) / (n - 2.0);
}

double elementary_symmetric(const Eigen::VectorXd& values, int k) {
  if (k < 0) return 0.0;
  Eigen::VectorXd e = Eigen::VectorXd::Zero(k + 1);
  e[0] = 1.0;
  for (Eigen::Index i = 0; i < values.size(); ++i)
    for (int j = k; j >= 1; --j) e[j] += values[i] * e[j - 1];
  return e[k];
}

double schouten_sigma_k(const geom::CurvaturePack& curv, const geom::Matrix& g, int n, int k) {
  if (n < 3) throw DimensionError("sigma_k needs n >= 3");
  if (g.rows() != n || g.cols() != n || curv.ricci.rows() != n)
    throw DimensionError("metric size does not match n");
  if (k < 1 || k > n) throw InvalidParametersError("sigma_k needs 1 <= k <= n");
  const geom::Matrix a = schouten_tensor(curv, g);
  const geom::Matrix sym = 0.5 * (a + a.transpose());
  Eigen::GeneralizedSelfAdjointEigenSolver<geom::Matrix> solver(sym, g, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DegenerateMetricError("generalized eigenproblem failed");
  return elementary_symmetric(solver.eigenvalues(), k);
}

}  // namespace etype::soliton
