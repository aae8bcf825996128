#include "etype/soliton/residuals.hpp"

#include <cmath>
#include <limits>

#include "etype/errors.hpp"
#include "etype/kernels.hpp"

namespace etype::soliton {

namespace {

struct PhiJet {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// phi and its derivatives from the jets of F; phi'' needs F''''.
PhiJet phi_jet(const warped::RadialJet& F, double c) {
  return {F.d2 - c * F.d1 * F.d1, F.d3 - 2 * c * F.d1 * F.d2,
          F.d4 - 2 * c * F.d2 * F.d2 - 2 * c * F.d1 * F.d3};
}

double phi_second_derivative(const RadialField& potential, double c, double r, bool differenced) {
  if (!differenced) return phi_jet(potential.evaluate(r), c).d2;
  const auto& iv = potential.interval();
  const double step = 1e-4 * std::max(1.0, iv.length());
  auto d1 = [&](double s) { return phi_jet(potential.evaluate(s), c).d1; };
  if (r - step >= iv.lo && r + step <= iv.hi) return (d1(r + step) - d1(r - step)) / (2 * step);
  if (r + 2 * step <= iv.hi) return (-3 * d1(r) + 4 * d1(r + step) - d1(r + 2 * step)) / (2 * step);
  return (3 * d1(r) - 4 * d1(r - step) + d1(r - 2 * step)) / (2 * step);
}

bool needs_fallback(const WarpedMetric& metric, const RadialField& potential, bool allow_fallback) {
  const bool missing = !metric.warping().has_third_derivative() || potential.max_order() < 4;
  if (missing && !allow_fallback)
    throw InsufficientSmoothnessError(
        "identity needs psi''' and F''''; enable the differencing fallback for sampled data");
  return missing;
}

struct Pieces {
  int n;
  warped::RadialJet F;
  warped::ProfileJet psi;
  warped::WarpedCurvature curv;
  double phi, dphi, ddphi;
};

Pieces gather(const WarpedMetric& metric, const RadialField& potential, double c, double r,
              bool allow_fallback) {
  const bool fallback = needs_fallback(metric, potential, allow_fallback);
  Pieces p{metric.dimension(), potential.evaluate(r), metric.warping().evaluate(r),
           warped::warped_curvature(metric, r), 0, 0, 0};
  const PhiJet ph = phi_jet(p.F, c);
  p.phi = ph.v;
  p.dphi = ph.d1;
  p.ddphi = potential.max_order() >= 4 ? ph.d2 : phi_second_derivative(potential, c, r, fallback);
  return p;
}

}  // namespace

double phi(const RadialField& potential, double c, double r) {
  const auto F = potential.evaluate(r);
  return F.d2 - c * F.d1 * F.d1;
}

double psi_from_potential(const RadialField& potential, double c, double r) {
  const auto F = potential.evaluate(r);
  return F.d1 * std::exp(-c * F.f);
}

EinsteinResidual einstein_type_residual(const WarpedMetric& metric, const RadialField& potential,
                                        const ReducedParams& params, double r) {
  const auto& a = metric.interval();
  const auto& b = potential.interval();
  const double slack = 1e-12 * std::max(1.0, std::abs(a.hi));
  if (std::abs(a.lo - b.lo) > slack || std::abs(a.hi - b.hi) > slack)
    throw IntervalMismatchError("warped metric and potential live on different intervals");
  const auto F = potential.evaluate(r);
  const auto psi = metric.warping().evaluate(r);
  const double c = params.c;
  const double ph = F.d2 - c * F.d1 * F.d1;
  return {F.d2 - ph - c * F.d1 * F.d1, F.d1 * psi.d1 / psi.v - ph};
}

double key1_residual(const WarpedMetric& metric, const RadialField& potential, double c, double r) {
  const int n = metric.dimension();
  const auto F = potential.evaluate(r);
  const PhiJet ph = phi_jet(F, c);
  return (n - 1) * ph.d1 - (n - 1) * c * ph.v * F.d1 + warped::ricci_radial(metric, r) * F.d1;
}

Key2Components key2_residual_components(const WarpedMetric& metric, const RadialField& potential,
                                        double c, double r, bool allow_fallback) {
  const Pieces p = gather(metric, potential, c, r, allow_fallback);
  const double m1 = p.n - 1;
  const double A = p.curv.ricci_radial, B = p.curv.ricci_fiber, dA = p.curv.ricci_radial_derivative;
  const double F1 = p.F.d1, h = p.psi.d1 / p.psi.v;
  Key2Components out;
  out.radial = m1 * p.ddphi - m1 * c * p.dphi * F1 - m1 * c * p.phi * p.phi -
               m1 * c * c * p.phi * F1 * F1 + dA * F1 + p.phi * A + c * A * F1 * F1;
  out.fiber = m1 * p.dphi * h - m1 * c * p.phi * p.phi + (A - B) * h * F1 + p.phi * B;
  return out;
}

double key3_residual(const WarpedMetric& metric, const RadialField& potential, double c, double r,
                     bool allow_fallback) {
  const Pieces p = gather(metric, potential, c, r, allow_fallback);
  const double m1 = p.n - 1;
  const double F1 = p.F.d1, h = p.psi.d1 / p.psi.v;
  const double lap_phi = p.ddphi + m1 * h * p.dphi;
  return m1 * lap_phi - m1 * c * p.dphi * F1 - m1 * p.n * c * p.phi * p.phi -
         m1 * c * c * p.phi * F1 * F1 + 0.5 * p.curv.scalar_derivative * F1 + p.phi * p.curv.scalar +
         c * p.curv.ricci_radial * F1 * F1;
}

double key4_residual(const RadialField& potential, double c, double r) {
  const PhiJet ph = phi_jet(potential.evaluate(r), c);
  const double F1 = potential.evaluate(r).d1;
  return ph.d1 - c * ph.v * F1;
}

double lambda_recovery(const ReducedParams& params, double rho, const WarpedMetric& metric,
                       const RadialField& potential, double r) {
  if (params.beta == 0.0) throw BetaZeroError("lambda recovery needs beta != 0");
  return params.beta * phi(potential, params.c, r) -
         rho * warped::scalar_and_derivative(metric, r).value;
}

namespace {

ResidualReport summarize(std::string identity, std::span<const double> grid,
                         std::vector<double> values, double tolerance) {
  ResidualReport rep;
  rep.identity = std::move(identity);
  rep.grid.assign(grid.begin(), grid.end());
  rep.tolerance = tolerance;
  double sumsq = 0.0;
  bool finite = true;
  for (double v : values) {
    if (!std::isfinite(v)) finite = false;
    rep.max_abs = std::max(rep.max_abs, std::abs(v));
    sumsq += v * v;
  }
  if (!finite) rep.max_abs = std::numeric_limits<double>::infinity();
  rep.rms = values.empty() ? 0.0 : std::sqrt(sumsq / static_cast<double>(values.size()));
  rep.residuals = std::move(values);
  rep.pass = finite && rep.max_abs <= tolerance;
  return rep;
}

}  // namespace

ResidualReport make_report(std::string identity, std::span<const double> grid,
                           const std::function<double(double)>& fn, double tolerance) {
  return summarize(std::move(identity), grid, sweep_grid(grid, fn), tolerance);
}

ResidualReport make_report_serial(std::string identity, std::span<const double> grid,
                                  const std::function<double(double)>& fn, double tolerance) {
  return summarize(std::move(identity), grid, sweep_grid_serial(grid, fn), tolerance);
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 2) throw InvalidParametersError("grid needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  out.back() = stop;
  return out;
}

}  // namespace etype::soliton
