#include "etype/soliton/ode.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <sstream>
#include <vector>

#include "etype/errors.hpp"

namespace etype::soliton {

namespace {

using Vec = std::array<double, 3>;

Vec rhs(const Vec& y, double c) {
  return {y[1], y[2], soliton_ode_rhs(OdeState{y[0], y[1], y[2]}, c)};
}

Vec axpy(const Vec& y, double h, std::initializer_list<std::pair<double, const Vec*>> terms) {
  Vec out = y;
  for (const auto& [w, k] : terms)
    for (int i = 0; i < 3; ++i) out[i] += h * w * (*k)[i];
  return out;
}

bool finite(const Vec& y) { return std::isfinite(y[0]) && std::isfinite(y[1]) && std::isfinite(y[2]); }

// Dormand-Prince 5(4) tableau with the continuous extension of Hairer,
// Norsett and Wanner.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double a71 = 35.0 / 384, a73 = 500.0 / 1113, a74 = 125.0 / 192, a75 = -2187.0 / 6784,
                 a76 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

struct DenseStep {
  double r0 = 0.0;
  double h = 0.0;
  std::array<Vec, 5> coeff{};

  Vec at(double r) const {
    const double t = (r - r0) / h, t1 = 1.0 - t;
    Vec y;
    for (int i = 0; i < 3; ++i)
      y[i] = coeff[0][i] +
             t * (coeff[1][i] + t1 * (coeff[2][i] + t * (coeff[3][i] + t1 * coeff[4][i])));
    return y;
  }
};

struct Trajectory {
  std::vector<DenseStep> steps;

  Vec at(double r) const {
    auto it = std::upper_bound(steps.begin(), steps.end(), r,
                               [](double x, const DenseStep& s) { return x < s.r0; });
    const DenseStep& s = (it == steps.begin()) ? steps.front() : *(it - 1);
    return s.at(r);
  }
};

double error_norm(const Vec& err, const Vec& y0, const Vec& y1, const ControllerSettings& s) {
  double sum = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double sc = s.atol + s.rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    sum += (err[i] / sc) * (err[i] / sc);
  }
  return std::sqrt(sum / 3.0);
}

double initial_step(const Vec& y0, const Vec& f0, double c, double span, const ControllerSettings& s) {
  auto norm = [&](const Vec& v) {
    double sum = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double sc = s.atol + s.rtol * std::abs(y0[i]);
      sum += (v[i] / sc) * (v[i] / sc);
    }
    return std::sqrt(sum / 3.0);
  };
  const double n0 = norm(y0), n1 = norm(f0);
  double h0 = (n0 < 1e-5 || n1 < 1e-5) ? 1e-6 : 0.01 * n0 / n1;
  h0 = std::min(h0, span);
  const Vec y1 = axpy(y0, h0, {{1.0, &f0}});
  const Vec f1 = rhs(y1, c);
  Vec df;
  for (int i = 0; i < 3; ++i) df[i] = f1[i] - f0[i];
  const double n2 = norm(df) / h0;
  const double big = std::max(n1, n2);
  const double h1 = big <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / big, 0.2);
  return std::min({100 * h0, h1, span});
}

}  // namespace

double soliton_ode_rhs(const OdeState& s, double c) {
  return 3 * c * s.d1 * s.d2 - c * c * s.d1 * s.d1 * s.d1;
}

IntegrationResult integrate_soliton_ode(double c, const OdeState& initial, warped::Interval interval,
                                        const ControllerSettings& settings) {
  if (!(initial.d1 > 0.0)) throw InvalidParametersError("integration needs F'(r0) > 0");
  if (!(interval.hi > interval.lo)) throw InvalidParametersError("integration interval is empty");
  if (!(settings.rtol > 0.0) || !(settings.atol > 0.0))
    throw InvalidParametersError("tolerances must be positive");

  auto traj = std::make_shared<Trajectory>();
  double r = interval.lo;
  Vec y{initial.f, initial.d1, initial.d2};
  Vec k1 = rhs(y, c);
  double h = settings.initial_step > 0.0 ? settings.initial_step
                                         : initial_step(y, k1, c, interval.hi - interval.lo, settings);
  bool domain_exit = false;
  double end_r = interval.hi;
  std::size_t accepted = 0, rejected = 0;

  while (r < interval.hi) {
    if (accepted + rejected >= settings.max_steps) {
      std::ostringstream os;
      os << "step budget exhausted at r = " << r;
      throw StiffnessError(os.str(), r);
    }
    const bool last = r + h >= interval.hi;
    if (last) h = interval.hi - r;
    if (h < settings.min_step * std::max(1.0, std::abs(r))) {
      std::ostringstream os;
      os << "step size underflow at r = " << r;
      throw StiffnessError(os.str(), r);
    }

    const Vec k2 = rhs(axpy(y, h, {{a21, &k1}}), c);
    const Vec k3 = rhs(axpy(y, h, {{a31, &k1}, {a32, &k2}}), c);
    const Vec k4 = rhs(axpy(y, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}), c);
    const Vec k5 = rhs(axpy(y, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}), c);
    const Vec k6 = rhs(axpy(y, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}), c);
    const Vec y1 = axpy(y, h, {{a71, &k1}, {a73, &k3}, {a74, &k4}, {a75, &k5}, {a76, &k6}});
    const Vec k7 = rhs(y1, c);
    Vec err;
    for (int i = 0; i < 3; ++i)
      err[i] = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
    const double en = finite(y1) && finite(k7) ? error_norm(err, y, y1, settings)
                                                : std::numeric_limits<double>::infinity();

    if (!(en <= 1.0)) {
      ++rejected;
      const double fac = std::isfinite(en) ? std::max(0.2, 0.9 * std::pow(en, -0.2)) : 0.2;
      h *= fac;
      continue;
    }

    DenseStep step;
    step.r0 = r;
    step.h = h;
    for (int i = 0; i < 3; ++i) {
      const double diff = y1[i] - y[i];
      const double bspl = h * k1[i] - diff;
      step.coeff[0][i] = y[i];
      step.coeff[1][i] = diff;
      step.coeff[2][i] = bspl;
      step.coeff[3][i] = diff - h * k7[i] - bspl;
      step.coeff[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] + d6 * k6[i] + d7 * k7[i]);
    }
    traj->steps.push_back(step);
    ++accepted;

    if (!(y1[1] > 0.0)) {
      // Bisect the dense output for F' = 0 inside this step.
      double lo = r, hi = r + h;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi)); ++it) {
        const double mid = 0.5 * (lo + hi);
        (step.at(mid)[1] > 0.0 ? lo : hi) = mid;
      }
      domain_exit = true;
      end_r = lo;
      break;
    }

    r = last ? interval.hi : r + h;
    y = y1;
    k1 = k7;
    h *= std::min(5.0, std::max(0.2, 0.9 * std::pow(std::max(en, 1e-10), -0.2)));
  }

  warped::RadialField field(
      warped::RadialField::Representation::sampled, warped::Interval{interval.lo, end_r},
      [traj, c](double x) {
        const Vec y = traj->at(x);
        const double d3 = soliton_ode_rhs(OdeState{y[0], y[1], y[2]}, c);
        const double d4 = 3 * c * y[2] * y[2] + 3 * c * y[1] * d3 - 3 * c * c * y[1] * y[1] * y[2];
        return warped::RadialJet{y[0], y[1], y[2], d3, d4};
      },
      4);
  return IntegrationResult{std::move(field), domain_exit, end_r, accepted, rejected};
}

}  // namespace etype::soliton
