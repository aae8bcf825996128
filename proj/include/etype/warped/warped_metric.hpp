#pragma once

// Warped products g = dr^2 + psi(r)^2 g_N over an Einstein fiber with
// Ric_N = (n - 2) kappa g_N, where n is the total dimension. The round unit
// sphere has kappa = 1, so the cone psi = r over it is flat.

#include "etype/geometry/patch.hpp"
#include "etype/warped/profile.hpp"
#include "etype/warped/radial_field.hpp"

namespace etype::warped {

enum class FiberPreset { round_sphere, flat, einstein };

struct FiberSpec {
  int dimension = 3;
  double kappa = 1.0;
  FiberPreset preset = FiberPreset::round_sphere;

  static FiberSpec round_sphere(int dimension) { return {dimension, 1.0, FiberPreset::round_sphere}; }
  static FiberSpec flat(int dimension) { return {dimension, 0.0, FiberPreset::flat}; }
  static FiberSpec einstein(int dimension, double kappa) { return {dimension, kappa, FiberPreset::einstein}; }

  void validate() const;
};

class WarpedMetric {
 public:
  /// Requires total dimension n = fiber dimension + 1 >= 3.
  WarpedMetric(WarpingProfile warping, FiberSpec fiber);

  int dimension() const { return fiber_.dimension + 1; }
  const WarpingProfile& warping() const { return warping_; }
  const FiberSpec& fiber() const { return fiber_; }
  const Interval& interval() const { return warping_.interval(); }

 private:
  WarpingProfile warping_;
  FiberSpec fiber_;
};

/// Ric(d_r, d_r) = -(n-1) psi''/psi.
double ricci_radial(const WarpedMetric& metric, double r);

/// Ricci eigenvalue on unit fiber directions:
/// -psi''/psi - (n-2)(psi'^2 - kappa)/psi^2.
double ricci_fiber(const WarpedMetric& metric, double r);

struct ScalarCurvature {
  double value = 0.0;
  double derivative = 0.0;
  /// Set when psi''' was unavailable and R' came from differencing R.
  bool derivative_from_differencing = false;
};

ScalarCurvature scalar_and_derivative(const WarpedMetric& metric, double r);

/// Radial curvature data used by the identity residuals: Ricci eigenvalues
/// (radial, fiber), the radial derivative of the radial eigenvalue, and R, R'.
struct WarpedCurvature {
  double ricci_radial = 0.0;
  double ricci_fiber = 0.0;
  double ricci_radial_derivative = 0.0;
  double scalar = 0.0;
  double scalar_derivative = 0.0;
  bool differenced = false;
};

WarpedCurvature warped_curvature(const WarpedMetric& metric, double r);

struct RadialHessian {
  double radial = 0.0;  // Hess F(d_r, d_r) = F''
  double fiber = 0.0;   // on unit fiber directions: F' psi'/psi
};

RadialHessian radial_hessian(const WarpedMetric& metric, const RadialField& potential, double r);

/// Delta F = F'' + (n-1)(psi'/psi) F'.
double radial_laplacian(const WarpedMetric& metric, const RadialField& potential, double r);

enum class FiberChart {
  s1_angle,           // fiber S^1; total dimension 2 is excluded, always unsupported
  s2_spherical,       // (theta, phi) on the unit S^2, n = 3
  s3_hyperspherical,  // (chi, theta, phi) on the unit S^3, n = 4
  flat_torus,         // Euclidean coordinates on a flat fiber, any n
};

/// Coordinate patch (r, fiber chart) realizing the warped metric. Fiber
/// chart singularities (angles 0 and pi) are excluded by the margin.
geom::CoordinatePatch to_patch(const WarpedMetric& metric, FiberChart chart, double margin = 0.05);

}  // namespace etype::warped
