#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "etype/errors.hpp"
#include "etype/geometry/tensor_engine.hpp"
#include "etype/warped/profile.hpp"
#include "etype/warped/record.hpp"
#include "etype/warped/spline.hpp"
#include "etype/warped/warped_metric.hpp"

using namespace etype;
using namespace etype::warped;
using std::numbers::pi;

namespace {

WarpedMetric sphere_metric(const WarpingProfile& p, int n = 4) {
  return WarpedMetric(p, FiberSpec::round_sphere(n - 1));
}

geom::Point s3_point(double r) {
  geom::Point x(4);
  x << r, 1.2, 1.1, 0.4;
  return x;
}

// psi = exp(s), s a random sum of sines, with three analytic derivatives.
WarpingProfile random_profile(std::mt19937_64& rng, Interval iv) {
  std::uniform_real_distribution<double> amp(-0.4, 0.4), freq(0.3, 2.0), phase(0.0, 2 * pi);
  std::array<double, 3> a{}, w{}, p{};
  for (int j = 0; j < 3; ++j) {
    a[j] = amp(rng);
    w[j] = freq(rng);
    p[j] = phase(rng);
  }
  return WarpingProfile::closed_form(
      [=](double r) {
        double s = 0, s1 = 0, s2 = 0, s3 = 0;
        for (int j = 0; j < 3; ++j) {
          const double t = w[j] * r + p[j];
          s += a[j] * std::sin(t);
          s1 += a[j] * w[j] * std::cos(t);
          s2 -= a[j] * w[j] * w[j] * std::sin(t);
          s3 -= a[j] * w[j] * w[j] * w[j] * std::cos(t);
        }
        const double e = std::exp(s);
        return ProfileJet{e, s1 * e, (s2 + s1 * s1) * e, (s3 + 3 * s1 * s2 + s1 * s1 * s1) * e};
      },
      iv, "random-exp-sines");
}

}  // namespace

TEST_CASE("closed-form curvature of the cylinder, cone and round sphere") {
  const int n = 4;
  const double a = 1.7;
  const auto cyl = sphere_metric(WarpingProfile::constant(a, {0.1, 5}));
  CHECK(ricci_radial(cyl, 1.0) == 0.0);
  CHECK(ricci_fiber(cyl, 1.0) == doctest::Approx(2.0 / (a * a)).epsilon(1e-14));
  const auto sc = scalar_and_derivative(cyl, 2.0);
  CHECK(sc.value == doctest::Approx(6.0 / (a * a)).epsilon(1e-14));
  CHECK(sc.derivative == 0.0);

  for (int dim : {3, 4, 6}) {
    const auto cone = sphere_metric(WarpingProfile::linear(1.0, 0.0, {0.01, 10}), dim);
    for (double r : {0.05, 1.0, 7.0}) {
      CHECK(std::abs(ricci_radial(cone, r)) < 1e-15);
      CHECK(std::abs(ricci_fiber(cone, r)) < 1e-12);
      const auto s = scalar_and_derivative(cone, r);
      CHECK(std::abs(s.value) < 1e-12);
      CHECK(std::abs(s.derivative) < 1e-12);
    }
  }

  const auto sphere = sphere_metric(WarpingProfile::sine({0.1, 3.0}));
  CHECK(ricci_radial(sphere, pi / 4) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(ricci_fiber(sphere, pi / 4) == doctest::Approx(3.0).epsilon(1e-13));
  const auto ss = scalar_and_derivative(sphere, pi / 4);
  CHECK(ss.value == doctest::Approx(n * (n - 1.0)).epsilon(1e-13));
  CHECK(std::abs(ss.derivative) < 1e-12);
}

TEST_CASE("radial Hessian and Laplacian") {
  const auto cone = sphere_metric(WarpingProfile::linear(1.0, 0.0, {0.1, 5}));
  const RadialField half_square(RadialField::Representation::closed_form, {0.1, 5},
                                [](double r) { return RadialJet{r * r / 2, r, 1, 0, 0}; });
  const auto h = radial_hessian(cone, half_square, 1.3);
  CHECK(h.radial == doctest::Approx(1.0));
  CHECK(h.fiber == doctest::Approx(1.0));
  CHECK(radial_laplacian(cone, half_square, 1.3) == doctest::Approx(4.0));

  const auto cyl = sphere_metric(WarpingProfile::constant(2.0, {0.1, 5}));
  const RadialField linear(RadialField::Representation::closed_form, {0.1, 5},
                           [](double r) { return RadialJet{3 * r, 3, 0, 0, 0}; });
  CHECK(radial_hessian(cyl, linear, 2.0).radial == 0.0);
  CHECK(radial_hessian(cyl, linear, 2.0).fiber == 0.0);
  CHECK(radial_laplacian(cyl, linear, 2.0) == 0.0);

  // F = log(r^2/2 + 1): F'(1) = 2/3, F''(1) = 2/9.
  const RadialField logf(RadialField::Representation::closed_form, {0.1, 5}, [](double r) {
    const double q = r * r / 2 + 1;
    return RadialJet{std::log(q), r / q, 1 / q - r * r / (q * q), 0, 0};
  });
  const auto hl = radial_hessian(cone, logf, 1.0);
  CHECK(hl.radial == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK(hl.fiber == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(radial_laplacian(cone, logf, 1.0) == doctest::Approx(20.0 / 9).epsilon(1e-15));

  // Laplacian is the metric trace of the Hessian on any profile.
  std::mt19937_64 rng(7);
  const auto w = sphere_metric(random_profile(rng, {0.5, 3}));
  for (double r : {0.7, 1.5, 2.9}) {
    const auto hh = radial_hessian(w, logf, r);
    CHECK(radial_laplacian(w, logf, r) == doctest::Approx(hh.radial + 3 * hh.fiber).epsilon(1e-15));
  }
}

TEST_CASE("finite-difference curvature of to_patch matches the closed forms") {
  struct Case {
    const char* name;
    WarpingProfile profile;
  };
  const std::vector<Case> cases{{"cylinder", WarpingProfile::constant(1.0, {0.2, 4})},
                                {"cylinder a=1.6", WarpingProfile::constant(1.6, {0.2, 4})},
                                {"cone", WarpingProfile::linear(1.0, 0.0, {0.2, 4})},
                                {"sine", WarpingProfile::sine({0.2, 3.0})}};
  for (const auto& c : cases) {
    CAPTURE(c.name);
    const auto w = sphere_metric(c.profile);
    const auto patch = to_patch(w, FiberChart::s3_hyperspherical);
    for (double r : {0.8, 1.3, 2.1}) {
      const auto x = s3_point(r);
      const auto pack = geom::curvature(patch, x);
      const auto g = patch.metric(x);
      CHECK(std::abs(pack.scalar - scalar_and_derivative(w, r).value) < 1e-4);
      CHECK(std::abs(pack.ricci(0, 0) - ricci_radial(w, r)) < 1e-4);
      for (int i = 1; i < 4; ++i) CHECK(std::abs(pack.ricci(i, i) / g(i, i) - ricci_fiber(w, r)) < 1e-4);
    }
  }
}

TEST_CASE("stencil halving improves the cross-check at fourth order") {
  for (const auto& profile : {WarpingProfile::constant(1.3, {0.2, 4}), WarpingProfile::linear(1.0, 0.0, {0.2, 4}),
                              WarpingProfile::sine({0.2, 3.0})}) {
    const auto w = sphere_metric(profile);
    const auto patch = to_patch(w, FiberChart::s3_hyperspherical);
    const auto x = s3_point(1.1);
    const double exact = scalar_and_derivative(w, 1.1).value;
    geom::StencilConfig coarse;
    coarse.h = 4e-2;
    const double e1 = std::abs(geom::curvature(patch, x, coarse).scalar - exact);
    const double e2 = std::abs(geom::curvature(patch, x, coarse.halved()).scalar - exact);
    CHECK(e2 * 3.5 <= e1);
  }
}

TEST_CASE("flat torus fiber over the cone is not flat") {
  const int n = 4;
  const WarpedMetric w(WarpingProfile::linear(1.0, 0.0, {0.5, 3}), FiberSpec::flat(n - 1));
  const auto patch = to_patch(w, FiberChart::flat_torus);
  for (double r : {1.0, 2.0}) {
    CHECK(ricci_fiber(w, r) == doctest::Approx(-(n - 2) / (r * r)).epsilon(1e-14));
    geom::Point x(4);
    x << r, 0.3, -0.2, 1.0;
    const auto pack = geom::curvature(patch, x);
    const auto g = patch.metric(x);
    for (int i = 1; i < n; ++i) CHECK(std::abs(pack.ricci(i, i) / g(i, i) + (n - 2) / (r * r)) < 1e-4);
    CHECK(std::abs(pack.scalar - scalar_and_derivative(w, r).value) < 1e-4);
  }
}

TEST_CASE("randomized profiles: oracle agreement and the contracted Bianchi identity") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> pick(0.9, 2.1);
  for (int trial = 0; trial < 24; ++trial) {
    CAPTURE(trial);
    const auto w = sphere_metric(random_profile(rng, {0.5, 2.5}));
    const auto patch = to_patch(w, FiberChart::s3_hyperspherical);
    const double r = pick(rng);
    const auto pack = geom::curvature(patch, s3_point(r));
    const auto wc = warped_curvature(w, r);
    CHECK_FALSE(wc.differenced);
    CHECK(std::abs(pack.ricci(0, 0) - wc.ricci_radial) < 1e-4);
    CHECK(std::abs(pack.scalar - wc.scalar) < 1e-4);
    // div Ric = dR / 2, radial component.
    const auto j = w.warping().evaluate(r);
    const double lhs = wc.ricci_radial_derivative + 3 * (wc.ricci_radial - wc.ricci_fiber) * j.d1 / j.v;
    CHECK(lhs == doctest::Approx(0.5 * wc.scalar_derivative).epsilon(1e-12).scale(1.0));
    // R' against a central difference of R.
    const double step = 1e-5;
    const double fd = (scalar_and_derivative(w, r + step).value - scalar_and_derivative(w, r - step).value) / (2 * step);
    CHECK(std::abs(fd - wc.scalar_derivative) < 1e-6);
  }
}

TEST_CASE("cubic spline interpolation") {
  std::vector<double> knots(200), values(200);
  for (int i = 0; i < 200; ++i) {
    knots[i] = 0.1 + 9.9 * i / 199;
    values[i] = std::sin(knots[i]);
  }
  const CubicSpline s(knots, values);
  double worst = 0.0, worst_d1 = 0.0;
  for (int i = 0; i <= 5000; ++i) {
    const double x = 0.1 + 9.9 * i / 5000;
    const auto v = s.evaluate(x);
    worst = std::max(worst, std::abs(v[0] - std::sin(x)));
    worst_d1 = std::max(worst_d1, std::abs(v[1] - std::cos(x)));
  }
  CHECK(worst < 1e-6);
  CHECK(worst_d1 < 1e-4);
  CHECK(s.integral(10.0) == doctest::Approx(std::cos(0.1) - std::cos(10.0)).epsilon(1e-8));
  CHECK_THROWS_AS(s.evaluate(10.5), OutOfDomainError);
  CHECK_THROWS_AS(CubicSpline({0, 1, 2}, {0, 1, 2}), InvalidParametersError);
}

TEST_CASE("sampled profiles reproduce closed forms and difference R'") {
  std::vector<double> knots(200), values(200);
  for (int i = 0; i < 200; ++i) {
    knots[i] = 0.1 + 2.9 * i / 199;
    values[i] = std::sin(knots[i]);
  }
  const auto sampled = WarpingProfile::sampled(knots, values);
  CHECK_FALSE(sampled.has_third_derivative());
  for (double r : {0.3, 1.0, 2.5}) CHECK(std::abs(sampled.evaluate(r).v - std::sin(r)) < 1e-6);
  const auto w = sphere_metric(sampled);
  const auto wc = warped_curvature(w, 1.2);
  CHECK(wc.differenced);
  CHECK(wc.scalar == doctest::Approx(12.0).epsilon(1e-3));
  CHECK(scalar_and_derivative(w, 1.2).derivative_from_differencing);
}

TEST_CASE("profile and potential records round-trip") {
  for (const auto& p : {WarpingProfile::constant(1.5, {0.1, 2}), WarpingProfile::linear(2.0, 0.5, {0.1, 2}),
                        WarpingProfile::sine({0.2, 2.0}, 1.25),
                        WarpingProfile::sampled({0.1, 0.5, 1.0, 1.5, 2.0}, {1.0, 1.2, 1.1, 1.4, 1.3})}) {
    const auto rec = KeyValueRecord::parse(profile_to_record(p).to_string());
    const auto back = profile_from_record(rec);
    CHECK(back.interval().lo == p.interval().lo);
    CHECK(back.interval().hi == p.interval().hi);
    for (double r : {0.3, 1.1, 1.9}) {
      CHECK(back.evaluate(r).v == p.evaluate(r).v);
      CHECK(back.evaluate(r).d2 == p.evaluate(r).d2);
    }
  }
  const auto f = spline_potential({0.5, 1.0, 1.5, 2.0, 2.5}, {1.0, 0.8, 1.3, 1.1, 0.9}, 0.25);
  const auto back = sampled_potential_from_record(KeyValueRecord::parse(potential_to_record(f).to_string()));
  for (double r : {0.6, 1.7, 2.4}) {
    CHECK(back.evaluate(r).f == f.evaluate(r).f);
    CHECK(back.evaluate(r).d3 == f.evaluate(r).d3);
  }
  CHECK_THROWS_AS(KeyValueRecord::parse("a = 1\na = 2\n"), ParseError);
  CHECK_THROWS_AS(KeyValueRecord::parse("no equals sign\n"), ParseError);
}

TEST_CASE("radial field consistency") {
  const RadialField f(RadialField::Representation::closed_form, {0.5, 3}, [](double r) {
    return RadialJet{std::exp(r), std::exp(r), std::exp(r), std::exp(r), std::exp(r)};
  });
  CHECK(f.consistency_defect(1.0) < 1e-6);
  CHECK(f.consistency_defect(0.5) < 1e-6);
  const RadialField bad(RadialField::Representation::closed_form, {0.5, 3},
                        [](double r) { return RadialJet{r * r, 2 * r, 3, 0, 0}; });
  CHECK(bad.consistency_defect(1.0) > 0.5);
  CHECK_THROWS_AS(f.evaluate(3.5), OutOfDomainError);
}

TEST_CASE("invalid profiles, metrics and charts") {
  CHECK_THROWS_AS(WarpingProfile::constant(-1.0, {0.1, 1}), InvalidParametersError);
  CHECK_THROWS_AS(WarpingProfile::constant(1.0, {0.0, 1}), InvalidParametersError);
  CHECK_THROWS_AS(WarpingProfile::sine({0.1, 3.5}), InvalidParametersError);
  CHECK_THROWS_AS(WarpingProfile::linear(-1.0, 0.5, {0.1, 1}), InvalidParametersError);
  const auto p = WarpingProfile::constant(1.0, {0.1, 1});
  CHECK_THROWS(WarpedMetric(p, FiberSpec::round_sphere(1)));
  CHECK_THROWS_AS(ricci_radial(sphere_metric(p), 1.5), OutOfDomainError);
  CHECK_THROWS_AS(to_patch(sphere_metric(p, 3), FiberChart::s3_hyperspherical), UnsupportedChartError);
  CHECK_THROWS_AS(to_patch(sphere_metric(p, 4), FiberChart::flat_torus), UnsupportedChartError);
  CHECK_THROWS_AS(to_patch(sphere_metric(p, 4), FiberChart::s1_angle), UnsupportedChartError);
  CHECK_NOTHROW(to_patch(sphere_metric(p, 3), FiberChart::s2_spherical));
}
