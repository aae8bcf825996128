#include "etype/geometry/tensor_engine.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "etype/errors.hpp"
#include "etype/kernels.hpp"

namespace etype::geom {

namespace {

// Rejects points whose stencil would leave the box, or that sit closer to
// the boundary than the patch's regularity margin.
void require_inside(const CoordinatePatch& patch, const Point& x, const StencilConfig& stencil,
                    int reach_steps) {
  stencil.validate();
  if (x.size() != patch.dimension())
    throw InvalidParametersError("point dimension does not match the patch");
  if (!(stencil.h < patch.margin()))
    throw OutOfDomainError("stencil step must be smaller than the regularity margin");
  const double reach = reach_steps * stencil.h;
  const double needed = std::max(patch.margin(), reach);
  const double d = patch.boundary_distance(x);
  if (d < needed) {
    std::ostringstream os;
    os << "point (" << x.transpose() << ") is " << d << " from the box boundary; need " << needed;
    throw OutOfDomainError(os.str());
  }
}

struct MetricJet {
  Matrix g;
  Matrix ginv;
  std::vector<Matrix> dg;   // dg[k] = d_k g
  std::vector<Matrix> ddg;  // ddg[k*n + l] = d_k d_l g
};

MetricJet metric_jet(const CoordinatePatch& patch, const Point& x, const StencilConfig& stencil,
                     bool with_second) {
  const int n = patch.dimension();
  auto gfn = [&patch](const Point& y) -> Matrix { return patch.metric(y); };
  MetricJet jet;
  jet.g = gfn(x);
  jet.ginv = jet.g.llt().solve(Matrix::Identity(n, n));
  jet.dg.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    const std::array<int, 1> axes{k};
    jet.dg[static_cast<std::size_t>(k)] = mixed_partial(gfn, x, axes, stencil);
  }
  if (with_second) {
    jet.ddg.resize(static_cast<std::size_t>(n * n));
    for (int k = 0; k < n; ++k)
      for (int l = k; l < n; ++l) {
        const std::array<int, 2> axes{k, l};
        Matrix m = mixed_partial(gfn, x, axes, stencil);
        jet.ddg[static_cast<std::size_t>(k * n + l)] = m;
        jet.ddg[static_cast<std::size_t>(l * n + k)] = m;
      }
  }
  return jet;
}

ConnectionCoefficients connection_from_jet(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  ConnectionCoefficients gamma(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int m = 0; m < n; ++m) {
          const double lowered = 0.5 * (jet.dg[i](m, j) + jet.dg[j](m, i) - jet.dg[m](i, j));
          s += jet.ginv(k, m) * lowered;
        }
        gamma(k, i, j) = s;
        gamma(k, j, i) = s;
      }
  return gamma;
}

// dgamma[l](k, i, j) = d_l Gamma^k_ij.
std::vector<ConnectionCoefficients> connection_derivatives(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  std::vector<ConnectionCoefficients> dgamma(static_cast<std::size_t>(n), ConnectionCoefficients(n));
  for (int l = 0; l < n; ++l) {
    const Matrix dginv = -jet.ginv * jet.dg[l] * jet.ginv;
    auto& out = dgamma[static_cast<std::size_t>(l)];
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) {
            const double lowered = 0.5 * (jet.dg[i](m, j) + jet.dg[j](m, i) - jet.dg[m](i, j));
            const double dlowered =
                0.5 * (jet.ddg[l * n + i](m, j) + jet.ddg[l * n + j](m, i) - jet.ddg[l * n + m](i, j));
            s += dginv(k, m) * lowered + jet.ginv(k, m) * dlowered;
          }
          out(k, i, j) = s;
          out(k, j, i) = s;
        }
  }
  return dgamma;
}

CurvaturePack curvature_from_jet(const MetricJet& jet) {
  const int n = static_cast<int>(jet.g.rows());
  const ConnectionCoefficients gamma = connection_from_jet(jet);
  const std::vector<ConnectionCoefficients> dgamma = connection_derivatives(jet);

  // R_{ijk}^l = d_i G^l_jk - d_j G^l_ik + G^m_jk G^l_im - G^m_ik G^l_jm
  std::vector<double> mixed(static_cast<std::size_t>(n * n * n * n), 0.0);
  auto up = [&](int i, int j, int k, int l) -> double& {
    return mixed[static_cast<std::size_t>(((i * n + j) * n + k) * n + l)];
  };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = dgamma[i](l, j, k) - dgamma[j](l, i, k);
          for (int m = 0; m < n; ++m) s += gamma(m, j, k) * gamma(l, i, m) - gamma(m, i, k) * gamma(l, j, m);
          up(i, j, k, l) = s;
        }

  CurvaturePack pack{RiemannTensor(n), Matrix::Zero(n, n), 0.0};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double s = 0.0;
          for (int m = 0; m < n; ++m) s += up(i, j, k, m) * jet.g(m, l);
          pack.riemann(i, j, k, l) = s;
        }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += up(i, j, k, i);
      pack.ricci(j, k) = s;
    }
  pack.scalar = (jet.ginv.cwiseProduct(pack.ricci)).sum();
  return pack;
}

struct FieldPartials {
  Eigen::VectorXd d1;
  Matrix d2;
};

FieldPartials field_partials(const ScalarField& field, const Point& x, const StencilConfig& stencil) {
  const int n = static_cast<int>(x.size());
  FieldPartials p{Eigen::VectorXd::Zero(n), Matrix::Zero(n, n)};
  if (field.gradient) {
    p.d1 = (*field.gradient)(x);
  } else {
    for (int i = 0; i < n; ++i) {
      const std::array<int, 1> axes{i};
      p.d1[i] = mixed_partial(field.value, x, axes, stencil);
    }
  }
  if (field.second_derivatives) {
    p.d2 = (*field.second_derivatives)(x);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const std::array<int, 2> axes{i, j};
        p.d2(i, j) = p.d2(j, i) = mixed_partial(field.value, x, axes, stencil);
      }
  }
  return p;
}

Matrix covariant_hessian(const ConnectionCoefficients& gamma, const FieldPartials& p) {
  const int n = gamma.dimension();
  Matrix h = p.d2;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) h(i, j) -= gamma(k, i, j) * p.d1[k];
  return h;
}

}  // namespace

double ConnectionCoefficients::symmetry_defect() const {
  double d = 0.0;
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) d = std::max(d, std::abs((*this)(k, i, j) - (*this)(k, j, i)));
  return d;
}

double SymmetryDefects::max() const {
  return std::max({antisymmetry_first, antisymmetry_last, pair_interchange, ricci_symmetry, trace});
}

SymmetryDefects symmetry_defects(const CurvaturePack& pack, const Matrix& metric) {
  const int n = pack.riemann.dimension();
  SymmetryDefects d;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          const double r = pack.riemann(i, j, k, l);
          d.antisymmetry_first = std::max(d.antisymmetry_first, std::abs(r + pack.riemann(j, i, k, l)));
          d.antisymmetry_last = std::max(d.antisymmetry_last, std::abs(r + pack.riemann(i, j, l, k)));
          d.pair_interchange = std::max(d.pair_interchange, std::abs(r - pack.riemann(k, l, i, j)));
        }
  d.ricci_symmetry = (pack.ricci - pack.ricci.transpose()).cwiseAbs().maxCoeff();
  const Matrix ginv = metric.inverse();
  d.trace = std::abs(pack.scalar - ginv.cwiseProduct(pack.ricci).sum());
  return d;
}

ConnectionCoefficients christoffel(const CoordinatePatch& patch, const Point& x,
                                   const StencilConfig& stencil) {
  require_inside(patch, x, stencil, stencil_reach(1, stencil.order));
  return connection_from_jet(metric_jet(patch, x, stencil, false));
}

double metric_compatibility_residual(const CoordinatePatch& patch, const Point& x,
                                     const StencilConfig& stencil) {
  require_inside(patch, x, stencil, stencil_reach(1, stencil.order));
  const int n = patch.dimension();
  const MetricJet jet = metric_jet(patch, x, stencil, false);
  const ConnectionCoefficients gamma = connection_from_jet(jet);
  const MetricJet fine = metric_jet(patch, x, stencil.halved(), false);
  double worst = 0.0;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = fine.dg[k](i, j);
        for (int m = 0; m < n; ++m) s -= gamma(m, k, i) * jet.g(m, j) + gamma(m, k, j) * jet.g(i, m);
        worst = std::max(worst, std::abs(s));
      }
  return worst;
}

CurvaturePack curvature(const CoordinatePatch& patch, const Point& x, const StencilConfig& stencil) {
  require_inside(patch, x, stencil, stencil_reach(2, stencil.order));
  return curvature_from_jet(metric_jet(patch, x, stencil, true));
}

Matrix hessian(const CoordinatePatch& patch, const ScalarField& field, const Point& x,
               const StencilConfig& stencil) {
  require_inside(patch, x, stencil, stencil_reach(2, stencil.order));
  const ConnectionCoefficients gamma = connection_from_jet(metric_jet(patch, x, stencil, false));
  return covariant_hessian(gamma, field_partials(field, x, stencil));
}

GradientData gradient_data(const CoordinatePatch& patch, const ScalarField& field, const Point& x,
                           const StencilConfig& stencil) {
  require_inside(patch, x, stencil, stencil_reach(2, stencil.order));
  const MetricJet jet = metric_jet(patch, x, stencil, false);
  const ConnectionCoefficients gamma = connection_from_jet(jet);
  const FieldPartials p = field_partials(field, x, stencil);
  GradientData out;
  out.gradient = jet.ginv * p.d1;
  out.norm_squared = p.d1.dot(out.gradient);
  out.laplacian = jet.ginv.cwiseProduct(covariant_hessian(gamma, p)).sum();
  return out;
}

Eigen::VectorXd ricci_identity_residual(const CoordinatePatch& patch, const ScalarField& field,
                                        const Point& x, const StencilConfig& stencil) {
  // The Hessian and Laplacian are evaluated independently at each stencil
  // node and then differenced, so the residual measures genuine truncation
  // error rather than cancelling algebraically against the curvature.
  const int inner = stencil_reach(2, stencil.order);
  require_inside(patch, x, stencil, inner + stencil_reach(1, stencil.order));
  const int n = patch.dimension();

  // Rows 0..n-1 hold the covariant Hessian, row n holds (Delta F, 0, ...).
  auto hessian_and_laplacian = [&](const Point& y) -> Matrix {
    const MetricJet jet = metric_jet(patch, y, stencil, false);
    const Matrix h = covariant_hessian(connection_from_jet(jet), field_partials(field, y, stencil));
    Matrix out = Matrix::Zero(n + 1, n);
    out.topRows(n) = h;
    out(n, 0) = jet.ginv.cwiseProduct(h).sum();
    return out;
  };

  const MetricJet jet = metric_jet(patch, x, stencil, true);
  const ConnectionCoefficients gamma = connection_from_jet(jet);
  const CurvaturePack pack = curvature_from_jet(jet);
  const Matrix here = hessian_and_laplacian(x);
  const Matrix hess = here.topRows(n);
  const Eigen::VectorXd grad_up = jet.ginv * field_partials(field, x, stencil).d1;

  std::vector<Matrix> d(static_cast<std::size_t>(n));  // d[j] = d_j (H ; Delta F)
  for (int j = 0; j < n; ++j) {
    const std::array<int, 1> axes{j};
    d[static_cast<std::size_t>(j)] = mixed_partial(hessian_and_laplacian, x, axes, stencil);
  }

  Eigen::VectorXd residual(n);
  for (int i = 0; i < n; ++i) {
    double lap_grad = 0.0;  // g^{jk} nabla_j nabla_k nabla_i F
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        double cov = d[static_cast<std::size_t>(j)](k, i);
        for (int m = 0; m < n; ++m) cov -= gamma(m, j, k) * hess(m, i) + gamma(m, j, i) * hess(k, m);
        lap_grad += jet.ginv(j, k) * cov;
      }
    const double grad_lap = d[static_cast<std::size_t>(i)](n, 0);
    const double ric_grad = pack.ricci.row(i).dot(grad_up);
    residual[i] = lap_grad - grad_lap - ric_grad;
  }
  return residual;
}

std::vector<CurvaturePack> curvature_batch_serial(const CoordinatePatch& patch,
                                                  std::span<const Point> points,
                                                  const StencilConfig& stencil) {
  return map_serial(points, [&](const Point& x) { return curvature(patch, x, stencil); });
}

std::vector<CurvaturePack> curvature_batch(const CoordinatePatch& patch,
                                           std::span<const Point> points,
                                           const StencilConfig& stencil) {
  return map_parallel(points, [&](const Point& x) { return curvature(patch, x, stencil); });
}

}  // namespace etype::geom
