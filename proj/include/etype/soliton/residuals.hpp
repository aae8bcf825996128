#pragma once

// Radial reductions of the gradient Einstein-type equation and of the
// identities it implies, evaluated as residuals on warped products.
//
// Throughout, phi denotes the beta-reduced right-hand side, so the equation
// reads Hess F = phi g + c dF (x) dF with c = -mu/beta. For radial F on
// dr^2 + psi^2 g_N this is  F'' = phi + c F'^2  (radial) and
// F' psi'/psi = phi  (fiber), hence phi = F'' - c F'^2.

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "etype/soliton/params.hpp"
#include "etype/warped/radial_field.hpp"
#include "etype/warped/warped_metric.hpp"

namespace etype::soliton {

using warped::RadialField;
using warped::WarpedMetric;

/// phi = F'' - c F'^2.
double phi(const RadialField& potential, double c, double r);

/// psi = F' exp(-c F).
double psi_from_potential(const RadialField& potential, double c, double r);

struct EinsteinResidual {
  double radial = 0.0;  // F'' - phi - c F'^2
  double fiber = 0.0;   // F' psi'/psi - phi
};

/// Throws IntervalMismatchError when the metric and potential live on
/// different intervals.
EinsteinResidual einstein_type_residual(const WarpedMetric& metric, const RadialField& potential,
                                        const ReducedParams& params, double r);

/// Radial component of (n-1) grad phi - (n-1) c phi grad F + Ric(grad F).
double key1_residual(const WarpedMetric& metric, const RadialField& potential, double c, double r);

struct Key2Components {
  double radial = 0.0;  // (d_r, d_r)
  double fiber = 0.0;   // unit fiber direction, diagonal
};

/// The differentiated identity, reduced to its (rr) and fiber-diagonal
/// components (mixed components vanish for radial data). Needs psi''' and
/// F''''; when missing, allow_fallback differences psi'' and F''' instead,
/// otherwise InsufficientSmoothnessError is thrown.
Key2Components key2_residual_components(const WarpedMetric& metric, const RadialField& potential,
                                        double c, double r, bool allow_fallback = false);

/// Trace of the key2 identity.
double key3_residual(const WarpedMetric& metric, const RadialField& potential, double c, double r,
                     bool allow_fallback = false);

/// phi' - c phi F'; equals exp(c F) psi'' for psi = F' exp(-c F).
double key4_residual(const RadialField& potential, double c, double r);

/// lambda = beta phi - rho R.
double lambda_recovery(const ReducedParams& params, double rho, const WarpedMetric& metric,
                       const RadialField& potential, double r);

struct ResidualReport {
  std::string identity;
  std::vector<double> grid;
  std::vector<double> residuals;
  double max_abs = 0.0;
  double rms = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Evaluates fn over the grid (in parallel) and summarizes it.
ResidualReport make_report(std::string identity, std::span<const double> grid,
                           const std::function<double(double)>& fn, double tolerance);

/// Same as make_report with the serial reference sweep.
ResidualReport make_report_serial(std::string identity, std::span<const double> grid,
                                  const std::function<double(double)>& fn, double tolerance);

/// count points from start to stop inclusive; requires count >= 2.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace etype::soliton
