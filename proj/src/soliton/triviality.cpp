#include "etype/soliton/triviality.hpp"

#include <algorithm>
#include <vector>

#include "etype/errors.hpp"

namespace etype::soliton {

std::string to_string(TrivialityVerdict verdict) {
  return verdict == TrivialityVerdict::forced_trivial ? "forced-trivial" : "undetermined";
}

TrivialityResult triviality_check_beta_zero(int m, const warped::RadialField& potential,
                                            std::span<const double> samples, double tolerance) {
  if (m < 1) throw InvalidParametersError("triviality check needs m >= 1");
  if (samples.empty()) throw InvalidParametersError("triviality check needs samples");
  double sup = 0.0;
  for (double r : samples) {
    const double d1 = potential.evaluate(r).d1;
    sup = std::max(sup, d1 * d1);
  }
  TrivialityResult out;
  out.residual = (2.0 * m - 1.0) * sup;
  out.verdict = m > 1 ? TrivialityVerdict::forced_trivial : TrivialityVerdict::undetermined;
  out.candidate_inconsistent = m > 1 && out.residual > tolerance;
  return out;
}

TrivialityResult triviality_check_beta_zero(int m, const warped::RadialField& potential, double tolerance) {
  const auto& iv = potential.interval();
  std::vector<double> samples(257);
  for (std::size_t i = 0; i < samples.size(); ++i)
    samples[i] = iv.lo + (iv.hi - iv.lo) * static_cast<double>(i) / 256.0;
  return triviality_check_beta_zero(m, potential, samples, tolerance);
}

}  // namespace etype::soliton
