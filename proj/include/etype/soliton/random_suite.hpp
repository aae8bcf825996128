#pragma once

#include <cstdint>
#include <vector>

#include "etype/warped/radial_field.hpp"

namespace etype::soliton {

struct RandomPotential {
  warped::RadialField potential;
  double c = 0.0;
};

struct RandomSuiteOptions {
  std::size_t count = 60;
  std::uint64_t seed = 20240611;
  warped::Interval interval{0.5, 2.0};
  int knots = 40;
};

inline const std::vector<double> kSuiteCValues{-2.0, -1.0, -0.5, 0.0, 0.5, 1.0};

/// Spline potentials with F' > 0: F' interpolates exp of a random smooth sum
/// of sines, F(lo) is uniform in [-0.5, 0.5], and c cycles through
/// kSuiteCValues. Deterministic in the seed.
std::vector<RandomPotential> random_potential_suite(const RandomSuiteOptions& options = {});

}  // namespace etype::soliton
