#pragma once

// Finite-difference tensor engine: Levi-Civita connection, Riemann/Ricci/
// scalar curvature, covariant Hessians and the commutation identity
// Delta(grad F) = grad(Delta F) + Ric(grad F) for metrics given in charts.
//
// Curvature convention: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z
// - nabla_[X,Y] Z, Ric(Y,Z) = tr(X -> R(X,Y)Z), so round spheres have
// positive Ricci and scalar curvature.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "etype/geometry/patch.hpp"
#include "etype/geometry/stencil.hpp"

namespace etype::geom {

/// Christoffel symbols Gamma^k_{ij}, stored densely.
class ConnectionCoefficients {
 public:
  explicit ConnectionCoefficients(int n = 0) : n_(n), data_(static_cast<std::size_t>(n * n * n), 0.0) {}

  int dimension() const { return n_; }
  double& operator()(int k, int i, int j) { return data_[index(k, i, j)]; }
  double operator()(int k, int i, int j) const { return data_[index(k, i, j)]; }

  /// max |Gamma^k_ij - Gamma^k_ji|; zero by construction.
  double symmetry_defect() const;

 private:
  std::size_t index(int k, int i, int j) const {
    return static_cast<std::size_t>((k * n_ + i) * n_ + j);
  }
  int n_;
  std::vector<double> data_;
};

/// Four-index array R_{ijkl} = g(R(d_i, d_j) d_k, d_l).
class RiemannTensor {
 public:
  explicit RiemannTensor(int n = 0) : n_(n), data_(static_cast<std::size_t>(n * n * n * n), 0.0) {}

  int dimension() const { return n_; }
  double& operator()(int i, int j, int k, int l) { return data_[index(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return data_[index(i, j, k, l)]; }

 private:
  std::size_t index(int i, int j, int k, int l) const {
    return static_cast<std::size_t>(((i * n_ + j) * n_ + k) * n_ + l);
  }
  int n_;
  std::vector<double> data_;
};

struct CurvaturePack {
  RiemannTensor riemann;
  Matrix ricci;
  double scalar = 0.0;
};

/// Largest violation of the algebraic Riemann symmetries and Ricci symmetry,
/// plus the trace defect |R - g^{ij} R_ij|.
struct SymmetryDefects {
  double antisymmetry_first = 0.0;
  double antisymmetry_last = 0.0;
  double pair_interchange = 0.0;
  double ricci_symmetry = 0.0;
  double trace = 0.0;

  double max() const;
};

SymmetryDefects symmetry_defects(const CurvaturePack& pack, const Matrix& metric);

struct GradientData {
  Eigen::VectorXd gradient;  // contravariant components g^{ij} d_j F
  double norm_squared = 0.0;
  double laplacian = 0.0;
};

ConnectionCoefficients christoffel(const CoordinatePatch& patch, const Point& x,
                                   const StencilConfig& stencil = {});

/// max_{ijk} |nabla_k g_ij| with the partials of g taken at step h/2 and the
/// connection at step h.
double metric_compatibility_residual(const CoordinatePatch& patch, const Point& x,
                                     const StencilConfig& stencil = {});

CurvaturePack curvature(const CoordinatePatch& patch, const Point& x,
                        const StencilConfig& stencil = {});

Matrix hessian(const CoordinatePatch& patch, const ScalarField& field, const Point& x,
               const StencilConfig& stencil = {});

GradientData gradient_data(const CoordinatePatch& patch, const ScalarField& field,
                           const Point& x, const StencilConfig& stencil = {});

/// Componentwise Delta(nabla_i F) - nabla_i(Delta F) - R_ij nabla^j F
/// (covariant index i). Vanishes for smooth data up to stencil error. Needs
/// the point to sit (inner + outer stencil reach) steps inside the box: 4h for
/// the fourth-order stencil, 2h for second order.
Eigen::VectorXd ricci_identity_residual(const CoordinatePatch& patch, const ScalarField& field,
                                        const Point& x, const StencilConfig& stencil = {});

/// Curvature at a batch of points. The parallel version distributes points
/// over OpenMP threads.
std::vector<CurvaturePack> curvature_batch_serial(const CoordinatePatch& patch,
                                                  std::span<const Point> points,
                                                  const StencilConfig& stencil = {});
std::vector<CurvaturePack> curvature_batch(const CoordinatePatch& patch,
                                           std::span<const Point> points,
                                           const StencilConfig& stencil = {});

}  // namespace etype::geom
