#pragma once

#include <cstddef>

#include "etype/warped/radial_field.hpp"

namespace etype::soliton {

/// (F, F', F'') at one radius.
struct OdeState {
  double f = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

/// F''' from F''' - 3c F'F'' + c^2 F'^3 = 0.
double soliton_ode_rhs(const OdeState& state, double c);

struct ControllerSettings {
  double rtol = 1e-10;
  double atol = 1e-12;
  double initial_step = 0.0;  // 0 selects a starting step automatically
  double min_step = 1e-14;    // relative to max(1, |r|)
  std::size_t max_steps = 1'000'000;
};

struct IntegrationResult {
  /// Sampled field with dense output over [r0, end_r]; F''' and F'''' follow
  /// from the ODE at the interpolated state.
  warped::RadialField field;
  bool domain_exit = false;  // F' reached 0 before the end of the interval
  double end_r = 0.0;
  std::size_t accepted_steps = 0;
  std::size_t rejected_steps = 0;
};

/// Integrates the soliton ODE forward from interval.lo with an embedded
/// Dormand-Prince 5(4) pair. Stops early, with domain_exit set, where F'
/// crosses zero. Throws InvalidParametersError if F'(r0) <= 0 and
/// StiffnessError when the step size underflows.
IntegrationResult integrate_soliton_ode(double c, const OdeState& initial, warped::Interval interval,
                                        const ControllerSettings& settings = {});

}  // namespace etype::soliton
