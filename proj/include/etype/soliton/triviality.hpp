#pragma once

#include <span>
#include <string>

#include "etype/warped/radial_field.hpp"

namespace etype::soliton {

enum class TrivialityVerdict {
  forced_trivial,  // m > 1: only constant F can solve the beta = 0 system
  undetermined     // m = 1: the argument does not apply
};

std::string to_string(TrivialityVerdict verdict);

struct TrivialityResult {
  TrivialityVerdict verdict = TrivialityVerdict::undetermined;
  /// (2m - 1) sup F'^2 over the samples; must vanish for a solution.
  double residual = 0.0;
  /// The candidate F is nonconstant and hence cannot be a solution.
  bool candidate_inconsistent = false;
};

/// beta = 0: the trace gives |grad F|^2 = 2m phi, the radial component gives
/// F'^2 = phi, so (2m - 1) F'^2 = 0. Throws InvalidParametersError for m < 1.
TrivialityResult triviality_check_beta_zero(int m, const warped::RadialField& potential,
                                            std::span<const double> samples, double tolerance = 1e-12);

/// Uses 257 equispaced samples over the potential's interval.
TrivialityResult triviality_check_beta_zero(int m, const warped::RadialField& potential,
                                            double tolerance = 1e-12);

}  // namespace etype::soliton
