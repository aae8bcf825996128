#include "etype/warped/warped_metric.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "etype/errors.hpp"

namespace etype::warped {

void FiberSpec::validate() const {
  if (dimension < 1) throw DimensionError("fiber dimension must be at least 1");
  if (preset == FiberPreset::round_sphere && kappa != 1.0)
    throw InvalidParametersError("round sphere fiber has kappa = 1");
  if (preset == FiberPreset::flat && kappa != 0.0) throw InvalidParametersError("flat fiber has kappa = 0");
}

WarpedMetric::WarpedMetric(WarpingProfile warping, FiberSpec fiber)
    : warping_(std::move(warping)), fiber_(fiber) {
  fiber_.validate();
  if (dimension() < 3) throw DimensionError("warped curvature formulas need total dimension n >= 3");
}

double ricci_radial(const WarpedMetric& metric, double r) {
  const ProfileJet p = metric.warping().evaluate(r);
  return -(metric.dimension() - 1) * p.d2 / p.v;
}

double ricci_fiber(const WarpedMetric& metric, double r) {
  const ProfileJet p = metric.warping().evaluate(r);
  const int n = metric.dimension();
  return -p.d2 / p.v - (n - 2) * (p.d1 * p.d1 - metric.fiber().kappa) / (p.v * p.v);
}

namespace {

double scalar_value(const WarpedMetric& metric, const ProfileJet& p) {
  const int n = metric.dimension();
  return -2.0 * (n - 1) * p.d2 / p.v +
         (n - 1) * (n - 2) * (metric.fiber().kappa - p.d1 * p.d1) / (p.v * p.v);
}

// Second-order difference of g at r; one-sided near the interval ends.
template <class Fn>
double difference(const Interval& iv, double r, Fn&& g) {
  const double step = 1e-4 * std::max(1.0, iv.length());
  if (r - step >= iv.lo && r + step <= iv.hi) return (g(r + step) - g(r - step)) / (2 * step);
  if (r + 2 * step <= iv.hi) return (-3 * g(r) + 4 * g(r + step) - g(r + 2 * step)) / (2 * step);
  return (3 * g(r) - 4 * g(r - step) + g(r - 2 * step)) / (2 * step);
}

}  // namespace

WarpedCurvature warped_curvature(const WarpedMetric& metric, double r) {
  const ProfileJet p = metric.warping().evaluate(r);
  const int n = metric.dimension();
  const double kappa = metric.fiber().kappa;
  WarpedCurvature out;
  out.ricci_radial = -(n - 1) * p.d2 / p.v;
  out.ricci_fiber = -p.d2 / p.v - (n - 2) * (p.d1 * p.d1 - kappa) / (p.v * p.v);
  out.scalar = scalar_value(metric, p);
  if (metric.warping().has_third_derivative()) {
    const double v2 = p.v * p.v;
    out.ricci_radial_derivative = -(n - 1) * (p.d3 * p.v - p.d2 * p.d1) / v2;
    out.scalar_derivative = -2.0 * (n - 1) * (p.d3 * p.v - p.d2 * p.d1) / v2 +
                            (n - 1) * (n - 2) *
                                (-2 * p.d1 * p.d2 / v2 - 2 * (kappa - p.d1 * p.d1) * p.d1 / (v2 * p.v));
  } else {
    const auto& iv = metric.interval();
    out.ricci_radial_derivative =
        difference(iv, r, [&](double s) { return ricci_radial(metric, s); });
    out.scalar_derivative =
        difference(iv, r, [&](double s) { return scalar_value(metric, metric.warping().evaluate(s)); });
    out.differenced = true;
  }
  return out;
}

ScalarCurvature scalar_and_derivative(const WarpedMetric& metric, double r) {
  const WarpedCurvature c = warped_curvature(metric, r);
  return {c.scalar, c.scalar_derivative, c.differenced};
}

RadialHessian radial_hessian(const WarpedMetric& metric, const RadialField& potential, double r) {
  const ProfileJet p = metric.warping().evaluate(r);
  const RadialJet F = potential.evaluate(r);
  return {F.d2, F.d1 * p.d1 / p.v};
}

double radial_laplacian(const WarpedMetric& metric, const RadialField& potential, double r) {
  const RadialHessian h = radial_hessian(metric, potential, r);
  return h.radial + (metric.dimension() - 1) * h.fiber;
}

geom::CoordinatePatch to_patch(const WarpedMetric& metric, FiberChart chart, double margin) {
  using std::numbers::pi;
  const int n = metric.dimension();
  const auto& fiber = metric.fiber();
  const WarpingProfile warping = metric.warping();
  const Interval radial = metric.interval();
  std::vector<geom::Interval> box{radial};

  switch (chart) {
    case FiberChart::s2_spherical:
    case FiberChart::s3_hyperspherical: {
      const int angles = chart == FiberChart::s2_spherical ? 2 : 3;
      if (fiber.preset != FiberPreset::round_sphere || fiber.dimension != angles)
        throw UnsupportedChartError("spherical chart needs a round unit sphere fiber of matching dimension");
      for (int i = 0; i + 1 < angles; ++i) box.push_back({0.0, pi});
      box.push_back({-pi, pi});
      return geom::CoordinatePatch(
          n,
          [warping, n](const geom::Point& x) {
            const double psi = warping.evaluate(x[0]).v;
            geom::Matrix g = geom::Matrix::Zero(n, n);
            g(0, 0) = 1.0;
            double factor = psi * psi;
            for (int i = 1; i < n; ++i) {
              g(i, i) = factor;
              const double s = std::sin(x[i]);
              factor *= s * s;
            }
            return g;
          },
          box, margin);
    }
    case FiberChart::flat_torus: {
      if (fiber.preset != FiberPreset::flat)
        throw UnsupportedChartError("torus chart needs a flat fiber");
      for (int i = 1; i < n; ++i) box.push_back({-pi, pi});
      return geom::CoordinatePatch(
          n,
          [warping, n](const geom::Point& x) {
            const double psi = warping.evaluate(x[0]).v;
            geom::Matrix g = psi * psi * geom::Matrix::Identity(n, n);
            g(0, 0) = 1.0;
            return g;
          },
          box, margin);
    }
    case FiberChart::s1_angle:
      throw UnsupportedChartError("S^1 fibers give total dimension 2, which is excluded");
  }
  throw UnsupportedChartError("unknown fiber chart");
}

}  // namespace etype::warped
