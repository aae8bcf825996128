#pragma once

#include <string>
#include <vector>

#include "etype/soliton/theorem_case.hpp"
#include "etype/warped/record.hpp"
#include "etype/warped/warped_metric.hpp"

namespace etype::soliton {

using warped::Interval;
using warped::RadialField;
using warped::RadialJet;
using warped::WarpedMetric;

/// Closed-form potentials of the constructive cases with four derivatives:
///   II-A  F = a r + b
///   II-B  F = a r^2 + b  (statement)  or  F = a r^2 / 2 + b  (derivation)
///   IV    F = -(1/c) log(c(-(a/2) r^2 - c1)),  c < 0, c1 > 0
RadialJet closed_form_potential(const TheoremCase& theorem_case, double r);

RadialField closed_form_field(const TheoremCase& theorem_case, Interval interval);

enum class ModelFiber { round_sphere, flat };

struct Model {
  TheoremCase theorem_case;
  WarpedMetric metric;
  RadialField potential;
  double c = 0.0;
  /// Report flags, e.g. a cone angle at the tip.
  std::vector<std::string> notes;
};

inline constexpr Interval kDefaultModelInterval{0.01, 10.0};

/// Warped model of a constructive case: psi = F' exp(-c F) over the unit
/// sphere S^{n-1} (II-B, IV) or the chosen fiber (II-A). Nonexistence tags
/// throw NoModelError.
Model build_model(const TheoremCase& theorem_case, int dimension = 4,
                  Interval interval = kDefaultModelInterval,
                  ModelFiber fiber = ModelFiber::round_sphere);

/// Potentials from key-value records: closed-form case tags or sampled splines.
RadialField potential_from_record(const warped::KeyValueRecord& record);

}  // namespace etype::soliton
