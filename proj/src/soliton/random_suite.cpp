#include "etype/soliton/random_suite.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "etype/errors.hpp"

namespace etype::soliton {

namespace {

bool positive_on(const warped::RadialField& f, int samples) {
  const auto& iv = f.interval();
  for (int i = 0; i <= samples; ++i) {
    const double r = iv.lo + (iv.hi - iv.lo) * i / samples;
    if (!(f.evaluate(r).d1 > 0.0)) return false;
  }
  return true;
}

}  // namespace

std::vector<RandomPotential> random_potential_suite(const RandomSuiteOptions& o) {
  if (o.knots < 4) throw InvalidParametersError("random suite needs at least 4 knots");
  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> amp(-0.6, 0.6), freq(0.5, 4.0), phase(0.0, 2 * std::numbers::pi),
      offset(-0.5, 0.5), level(-0.7, 0.7);

  std::vector<double> knots(o.knots);
  for (int i = 0; i < o.knots; ++i)
    knots[i] = o.interval.lo + (o.interval.hi - o.interval.lo) * i / (o.knots - 1);

  std::vector<RandomPotential> out;
  out.reserve(o.count);
  while (out.size() < o.count) {
    double a[3], w[3], p[3];
    for (int j = 0; j < 3; ++j) {
      a[j] = amp(rng);
      w[j] = freq(rng);
      p[j] = phase(rng);
    }
    const double base = level(rng);
    std::vector<double> slopes(o.knots);
    for (int i = 0; i < o.knots; ++i) {
      double s = base;
      for (int j = 0; j < 3; ++j) s += a[j] * std::sin(w[j] * knots[i] + p[j]);
      slopes[i] = std::exp(s);
    }
    auto field = warped::spline_potential(knots, slopes, offset(rng));
    if (!positive_on(field, 50 * o.knots)) continue;
    const double c = kSuiteCValues[out.size() % kSuiteCValues.size()];
    out.push_back(RandomPotential{std::move(field), c});
  }
  return out;
}

}  // namespace etype::soliton
