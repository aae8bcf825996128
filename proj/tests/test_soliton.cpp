#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "etype/errors.hpp"
#include "etype/geometry/tensor_engine.hpp"
#include "etype/soliton/closed_form.hpp"
#include "etype/soliton/ode.hpp"
#include "etype/soliton/params.hpp"
#include "etype/soliton/random_suite.hpp"
#include "etype/soliton/residuals.hpp"
#include "etype/soliton/schouten.hpp"
#include "etype/soliton/soliton_types.hpp"
#include "etype/soliton/triviality.hpp"

using namespace etype;
using namespace etype::soliton;
using warped::FiberSpec;
using warped::WarpingProfile;

namespace {

RadialField poly(double c0, double c1, double c2, double c3, warped::Interval iv = {0.1, 5}) {
  // c0 + c1 r + c2 r^2 + c3 r^3
  return RadialField(RadialField::Representation::closed_form, iv, [=](double r) {
    return RadialJet{c0 + r * (c1 + r * (c2 + r * c3)), c1 + r * (2 * c2 + 3 * c3 * r), 2 * c2 + 6 * c3 * r,
                     6 * c3, 0.0};
  });
}

WarpedMetric metric_for(const RadialField& f, double c, int n = 4) {
  return WarpedMetric(WarpingProfile::from_potential(f, c), FiberSpec::round_sphere(n - 1));
}

const TheoremCase kIV = TheoremCase::rotational(1.0, -1.0, 1.0);

}  // namespace

TEST_CASE("reduce") {
  CHECK(reduce(EinsteinTypeParams(1, 0, 0)).c == 0.0);
  CHECK(reduce(EinsteinTypeParams(1, -1.0 / 2, 1)).c == 0.5);
  CHECK(reduce(EinsteinTypeParams(2, 3, 0)).c == -1.5);
  CHECK(reduce(EinsteinTypeParams(2, 3, 0)).beta == 2.0);
  CHECK(reduce(EinsteinTypeParams(2, 3, 0)).phi_divided_by_beta);
  CHECK_THROWS_AS(reduce(EinsteinTypeParams(0, 1, 0)), BetaZeroError);
  CHECK_THROWS_AS(EinsteinTypeParams(0, 0, 1), InvalidParametersError);
  CHECK_THROWS_AS(EinsteinTypeParams(0.5, 1, 0, 1), InvalidParametersError);
}

TEST_CASE("phi and psi") {
  CHECK(phi(poly(1.5, 0, 0.7, 0), 0.0, 2.3) == doctest::Approx(1.4));
  CHECK(phi(poly(1.5, 0.7, 0, 0), 0.0, 2.3) == 0.0);
  const auto iv = closed_form_field(kIV, {0.1, 5});
  CHECK(phi(iv, -1.0, 1.0) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(psi_from_potential(poly(1.5, 0.7, 0, 0), 0.0, 2.0) == doctest::Approx(0.7));
  CHECK(psi_from_potential(poly(1.5, 0, 0.7, 0), 0.0, 2.0) == doctest::Approx(2.8));
  for (double r : {0.1, 0.5, 1.0, 3.0, 5.0}) CHECK(psi_from_potential(iv, -1.0, r) == doctest::Approx(r).epsilon(1e-14));
  CHECK_THROWS_AS(phi(iv, -1.0, 6.0), OutOfDomainError);
}

TEST_CASE("closed-form potentials") {
  const auto j = closed_form_potential(kIV, 1.0);
  CHECK(j.f == doctest::Approx(std::log(1.5)).epsilon(1e-15));
  CHECK(j.d1 == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(j.d2 == doctest::Approx(2.0 / 9).epsilon(1e-15));
  CHECK(j.d3 == doctest::Approx(-20.0 / 27).epsilon(1e-15));
  const auto a = closed_form_potential(TheoremCase::cylinder(2.0, 0.0), 3.0);
  CHECK(a.f == 6.0);
  CHECK(a.d1 == 2.0);
  CHECK(a.d2 == 0.0);
  const auto b = closed_form_potential(TheoremCase::euclidean(1.5, 0.5), 2.0);
  CHECK(b.f == doctest::Approx(6.5));
  CHECK(b.d1 == doctest::Approx(6.0));
  const auto bd = closed_form_potential(TheoremCase::euclidean(1.5, 0.5, QuadraticConvention::derivation), 2.0);
  CHECK(bd.d1 == doctest::Approx(3.0));
  CHECK(bd.d2 == doctest::Approx(1.5));
  CHECK_THROWS_AS(TheoremCase::rotational(1.0, -1.0, -1.0), InvalidParametersError);
  CHECK_THROWS_AS(TheoremCase::rotational(1.0, 1.0, 1.0), InvalidParametersError);
  CHECK_THROWS_AS(TheoremCase::cylinder(0.0), InvalidParametersError);
  CHECK_THROWS_AS(TheoremCase::euclidean(-1.0), InvalidParametersError);

  // Fourth derivative against a central difference of the third.
  const double h = 1e-4;
  for (double r : {0.3, 1.0, 4.0}) {
    const double fd = (closed_form_potential(kIV, r + h).d3 - closed_form_potential(kIV, r - h).d3) / (2 * h);
    CHECK(closed_form_potential(kIV, r).d4 == doctest::Approx(fd).epsilon(1e-6));
  }
  CHECK(closed_form_field(kIV, {0.1, 5}).consistency_defect(1.0) < 1e-6);
}

TEST_CASE("closed forms solve the soliton ODE") {
  std::vector<TheoremCase> cases;
  for (double a : {0.3, 1.0, 2.5})
    for (double b : {-1.0, 0.0, 2.0}) {
      cases.push_back(TheoremCase::cylinder(a, b));
      cases.push_back(TheoremCase::euclidean(a, b));
      cases.push_back(TheoremCase::euclidean(a, b, QuadraticConvention::derivation));
    }
  for (double a : {0.3, 1.0, 2.5})
    for (double c : {-2.0, -1.0, -0.1})
      for (double c1 : {0.2, 1.0, 3.0}) cases.push_back(TheoremCase::rotational(a, c, c1));
  for (const auto& tc : cases)
    for (double r : linspace(0.1, 10.0, 25)) {
      const auto j = closed_form_potential(tc, r);
      const double rhs = soliton_ode_rhs({j.f, j.d1, j.d2}, tc.c);
      CHECK(std::abs(rhs - j.d3) <= 1e-10 * std::max(1.0, std::abs(j.d3)));
    }
}

TEST_CASE("soliton ODE right-hand side") {
  CHECK(soliton_ode_rhs({1.0, 2.0, 3.0}, 0.0) == 0.0);
  CHECK(soliton_ode_rhs({std::log(1.5), 2.0 / 3, 2.0 / 9}, -1.0) == doctest::Approx(-20.0 / 27).epsilon(1e-15));
  CHECK(soliton_ode_rhs({0.0, 1.0, 0.0}, 1.0) == -1.0);
}

TEST_CASE("Einstein-type residual") {
  // psi built from F solves the equation identically.
  const auto f = poly(0.2, 1.0, 0.3, -0.05, {0.5, 2.0});
  for (double c : {-1.0, 0.0, 0.5}) {
    const auto w = metric_for(f, c);
    for (double r : {0.5, 1.2, 2.0}) {
      const auto e = einstein_type_residual(w, f, ReducedParams{c, 1.0, true}, r);
      CHECK(std::abs(e.radial) < 1e-14);
      CHECK(std::abs(e.fiber) < 1e-12);
    }
  }
  const WarpedMetric cyl(WarpingProfile::constant(2.0, {0.1, 5}), FiberSpec::round_sphere(3));
  const auto lin = poly(0.5, 2.0, 0, 0);
  const auto e = einstein_type_residual(cyl, lin, ReducedParams{0.0, 1.0, true}, 1.0);
  CHECK(e.radial == 0.0);
  CHECK(e.fiber == 0.0);
  // Mismatch: F = r^2 on the cylinder. phi = F'' = 2 but F' psi'/psi = 0.
  const auto sq = poly(0, 0, 1, 0);
  for (double r : {0.5, 1.0, 4.0}) {
    const auto m = einstein_type_residual(cyl, sq, ReducedParams{0.0, 1.0, true}, r);
    CHECK(m.fiber == doctest::Approx(-2.0));
    CHECK(std::abs(m.radial) + std::abs(m.fiber) > 1.0);
  }
  const WarpedMetric other(WarpingProfile::constant(2.0, {0.2, 5}), FiberSpec::round_sphere(3));
  CHECK_THROWS_AS(einstein_type_residual(other, lin, ReducedParams{}, 1.0), IntervalMismatchError);
}

TEST_CASE("identities on the constructive models") {
  for (const auto& tc : {TheoremCase::cylinder(1.0), TheoremCase::cylinder(0.6, 1.0), TheoremCase::euclidean(1.0),
                         TheoremCase::euclidean(0.8, 0.0, QuadraticConvention::derivation), kIV,
                         TheoremCase::rotational(2.0, -0.5, 0.3)}) {
    CAPTURE(to_string(tc.tag));
    const auto m = build_model(tc, 4, {0.1, 5});
    for (double r : linspace(0.1, 5.0, 40)) {
      CHECK(std::abs(key1_residual(m.metric, m.potential, m.c, r)) < 1e-10);
      const auto k2 = key2_residual_components(m.metric, m.potential, m.c, r);
      CHECK(std::abs(k2.radial) < 1e-9);
      CHECK(std::abs(k2.fiber) < 1e-9);
      CHECK(std::abs(key3_residual(m.metric, m.potential, m.c, r)) < 1e-8);
      CHECK(std::abs(key4_residual(m.potential, m.c, r)) < 1e-12);
    }
  }
  // Cylinder and flat cases: every term vanishes exactly.
  const auto cyl = build_model(TheoremCase::cylinder(1.0), 4, {0.1, 5});
  CHECK(key1_residual(cyl.metric, cyl.potential, 0.0, 1.0) == 0.0);
  CHECK(key3_residual(cyl.metric, cyl.potential, 0.0, 1.0) == 0.0);
  const auto iv = build_model(kIV, 4, {0.1, 5});
  const auto k2 = key2_residual_components(iv.metric, iv.potential, -1.0, 1.0);
  CHECK(std::abs(k2.radial) < 1e-9);
  CHECK(std::abs(k2.fiber) < 1e-9);
}

TEST_CASE("key identities detect non-solutions of the warped system") {
  // A potential whose psi is not built from it: identities must fail.
  const WarpedMetric sphere(WarpingProfile::sine({0.2, 3.0}), FiberSpec::round_sphere(3));
  const auto f = poly(0, 1.0, 0.5, 0, {0.2, 3.0});
  CHECK(std::abs(key1_residual(sphere, f, 0.0, 1.0)) > 1e-3);
}

TEST_CASE("key4 and psi''") {
  CHECK(key4_residual(poly(0.2, 1.5, 0, 0), 0.0, 1.0) == 0.0);
  const RadialField log1p(RadialField::Representation::closed_form, {0.1, 5}, [](double r) {
    const double q = 1 + r;
    return RadialJet{std::log(q), 1 / q, -1 / (q * q), 2 / (q * q * q), -6 / (q * q * q * q)};
  });
  for (double r : {0.2, 1.0, 4.0}) CHECK(std::abs(key4_residual(log1p, -1.0, r)) < 1e-15);
  CHECK(key4_residual(poly(0, 1, 0, 1), 0.0, 1.3) == doctest::Approx(6.0));
  for (double r : {0.5, 1.0, 3.0}) CHECK(std::abs(key4_residual(closed_form_field(kIV, {0.1, 5}), -1.0, r)) < 1e-15);
}

TEST_CASE("smoothness requirements of key2 and key3") {
  const RadialField third_only(RadialField::Representation::sampled, {0.5, 2},
                               [](double r) { return RadialJet{r + r * r / 4, 1 + r / 2, 0.5, 0, 0}; }, 3);
  const auto w = metric_for(third_only, 0.0);
  CHECK_THROWS_AS(key2_residual_components(w, third_only, 0.0, 1.0), InsufficientSmoothnessError);
  CHECK_THROWS_AS(key3_residual(w, third_only, 0.0, 1.0), InsufficientSmoothnessError);
  CHECK(std::abs(key3_residual(w, third_only, 0.0, 1.0, true)) < 1e-6);
  const auto k2 = key2_residual_components(w, third_only, 0.0, 1.0, true);
  CHECK(std::abs(k2.radial) < 1e-6);
  CHECK(std::abs(k2.fiber) < 1e-6);
}

TEST_CASE("solution-family property on the random spline suite") {
  const auto suite = random_potential_suite();
  REQUIRE(suite.size() >= 50);
  std::vector<int> seen(kSuiteCValues.size(), 0);
  const auto grid = linspace(0.5, 2.0, 61);
  double worst_einstein = 0, worst_key = 0, worst_key4 = 0;
  for (const auto& inst : suite) {
    for (std::size_t i = 0; i < kSuiteCValues.size(); ++i) seen[i] += inst.c == kSuiteCValues[i];
    const auto w = metric_for(inst.potential, inst.c);
    for (double r : grid) {
      const auto e = einstein_type_residual(w, inst.potential, ReducedParams{inst.c, 1.0, true}, r);
      worst_einstein = std::max({worst_einstein, std::abs(e.radial), std::abs(e.fiber)});
      worst_key = std::max({worst_key, std::abs(key1_residual(w, inst.potential, inst.c, r)),
                            std::abs(key3_residual(w, inst.potential, inst.c, r))});
      const double psi2 = w.warping().evaluate(r).d2;
      const double expect = std::exp(inst.c * inst.potential.evaluate(r).f) * psi2;
      worst_key4 = std::max(worst_key4, std::abs(key4_residual(inst.potential, inst.c, r) - expect));
    }
  }
  for (int s : seen) CHECK(s > 0);
  CHECK(worst_einstein <= 1e-10);
  CHECK(worst_key <= 1e-6);
  CHECK(worst_key4 <= 1e-12);
}

TEST_CASE("random suite is deterministic and positive") {
  RandomSuiteOptions o;
  o.count = 8;
  const auto a = random_potential_suite(o);
  const auto b = random_potential_suite(o);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].c == b[i].c);
    CHECK(a[i].potential.evaluate(1.3).f == b[i].potential.evaluate(1.3).f);
    for (double r : linspace(0.5, 2.0, 301)) CHECK(a[i].potential.evaluate(r).d1 > 0.0);
  }
  o.seed += 1;
  CHECK(random_potential_suite(o)[0].potential.evaluate(1.3).f != a[0].potential.evaluate(1.3).f);
}

TEST_CASE("classification") {
  auto tags = [](double b, double m) { return classify(b, m).tags; };
  CHECK(tags(0, 5) == std::vector{CaseTag::I_nonexistent});
  CHECK_FALSE(classify(0, 5).c.has_value());
  CHECK(tags(1, 0) == std::vector{CaseTag::IIA_cylinder, CaseTag::IIB_euclidean});
  CHECK(tags(1, -2) == std::vector{CaseTag::III_nonexistent});
  CHECK(*classify(1, -2).c == 2.0);
  CHECK(tags(2, 3) == std::vector{CaseTag::IV_rotational});
  CHECK(classify(-2, -3) == classify(2, 3));
  CHECK(*classify(2, 3).c == -1.5);
  const std::vector<double> values{-3.0, -1.0, -0.25, 0.0, 0.5, 2.0};
  for (double b : values)
    for (double m : values) {
      if (b == 0 && m == 0) {
        CHECK_THROWS_AS(classify(b, m), InvalidParametersError);
        continue;
      }
      CHECK(classify(b, m) == classify(-b, -m));
      CHECK(classify(b, m).tags.size() >= 1);
    }
}

TEST_CASE("model construction") {
  const auto cyl = build_model(TheoremCase::cylinder(1.0));
  for (double r : {0.1, 2.0, 9.0}) CHECK(cyl.metric.warping().evaluate(r).v == doctest::Approx(1.0));
  const auto torus = build_model(TheoremCase::cylinder(1.0), 4, kDefaultModelInterval, ModelFiber::flat);
  CHECK(torus.metric.fiber().kappa == 0.0);
  const auto cone = build_model(kIV);
  for (double r : {0.01, 1.0, 10.0}) CHECK(cone.metric.warping().evaluate(r).v == doctest::Approx(r).epsilon(1e-14));
  CHECK(cone.notes.empty());
  CHECK(build_model(TheoremCase::rotational(2.0, -1.0, 1.0)).notes.size() == 1);
  CHECK(build_model(TheoremCase::euclidean(0.5)).notes.empty());
  CHECK(build_model(TheoremCase::euclidean(0.5, 0, QuadraticConvention::derivation)).notes.size() == 1);
  try {
    build_model(TheoremCase::nonexistent(CaseTag::I_nonexistent));
    FAIL("expected NoModelError");
  } catch (const NoModelError& e) {
    CHECK(std::string(e.what()) == "no non-trivial Einstein-type manifold (Theorem 1 (I))");
  }
  CHECK_THROWS_AS(build_model(TheoremCase::nonexistent(CaseTag::III_nonexistent)), NoModelError);
  CHECK_THROWS_AS(build_model(kIV, 2), DimensionError);
  for (const auto& tc : {TheoremCase::cylinder(1.3), TheoremCase::euclidean(1.0), kIV}) {
    const auto m = build_model(tc);
    for (double r : linspace(0.01, 10, 50)) {
      const auto e = einstein_type_residual(m.metric, m.potential, ReducedParams{m.c, 1, true}, r);
      CHECK(std::abs(e.radial) < 1e-10);
      CHECK(std::abs(e.fiber) < 1e-10);
    }
  }
}

TEST_CASE("built models agree with finite-difference curvature") {
  for (const auto& tc : {TheoremCase::cylinder(1.2), TheoremCase::euclidean(0.7), TheoremCase::rotational(1.5, -1, 1)}) {
    const auto m = build_model(tc, 4, {0.3, 4});
    const auto patch = warped::to_patch(m.metric, warped::FiberChart::s3_hyperspherical);
    for (double r : {0.9, 2.0, 3.2}) {
      geom::Point x(4);
      x << r, 1.2, 1.1, 0.4;
      CHECK(std::abs(geom::curvature(patch, x).scalar - warped::scalar_and_derivative(m.metric, r).value) < 1e-4);
    }
  }
}

TEST_CASE("beta = 0 triviality") {
  const auto lin = poly(0, 1, 0, 0);
  const auto r2 = triviality_check_beta_zero(2, lin);
  CHECK(r2.verdict == TrivialityVerdict::forced_trivial);
  CHECK(r2.residual == doctest::Approx(3.0));
  CHECK(r2.candidate_inconsistent);
  const auto flat = triviality_check_beta_zero(2, poly(4.0, 0, 0, 0));
  CHECK(flat.verdict == TrivialityVerdict::forced_trivial);
  CHECK(flat.residual == 0.0);
  CHECK_FALSE(flat.candidate_inconsistent);
  const auto one = triviality_check_beta_zero(1, lin);
  CHECK(one.verdict == TrivialityVerdict::undetermined);
  CHECK_FALSE(one.candidate_inconsistent);
  for (int m : {2, 3, 4, 7}) {
    const auto res = triviality_check_beta_zero(m, poly(0, 0.5, 0.1, 0));
    CHECK(res.verdict == TrivialityVerdict::forced_trivial);
    CHECK(res.candidate_inconsistent);
  }
  CHECK_THROWS_AS(triviality_check_beta_zero(0, lin), InvalidParametersError);
}

TEST_CASE("soliton type table") {
  const auto table = soliton_type_table();
  REQUIRE(table.size() == 5);
  const std::vector<std::string> names{"gradient Yamabe soliton", "gradient almost Yamabe soliton",
                                       "gradient k-Yamabe soliton", "gradient conformal soliton",
                                       "gradient quasi-Yamabe soliton"};
  for (std::size_t i = 0; i < names.size(); ++i) CHECK(table[i].name == names[i]);
  const auto yam = lookup("gradient Yamabe soliton");
  CHECK((yam.alpha == 0 && yam.beta == 1 && yam.mu == 0 && yam.rho == 1));
  CHECK(yam.lambda.kind == LambdaSemantics::Kind::constant);
  CHECK(lookup("gradient almost Yamabe soliton").lambda.kind == LambdaSemantics::Kind::unconstrained);
  const auto conf = lookup("gradient conformal soliton");
  CHECK((conf.beta == 1 && conf.mu == 0 && conf.rho == 0));
  CHECK(conf.lambda.kind == LambdaSemantics::Kind::unconstrained);
  SolitonTypeOptions o;
  o.quasi_k = 3;
  const auto q = lookup("gradient quasi-Yamabe soliton", o);
  CHECK((q.beta == 1 && q.mu == doctest::Approx(-1.0 / 3) && q.rho == 1));
  CHECK(q.lambda.kind == LambdaSemantics::Kind::constant);
  o.dimension = 4;
  o.sigma_index = 2;
  o.nu = 0.5;
  const auto ky = lookup("gradient k-Yamabe soliton", o);
  CHECK(ky.beta == doctest::Approx(1.0 / 6));
  CHECK((ky.mu == 0 && ky.rho == 0));
  CHECK(ky.lambda.kind == LambdaSemantics::Kind::sigma_k_minus_nu);
  CHECK(ky.lambda.k == 2);
  CHECK(ky.lambda.nu == 0.5);
  CHECK_THROWS_AS(lookup("gradient Ricci soliton"), UnknownNameError);
  o.quasi_k = 0;
  CHECK_THROWS_AS(soliton_type_table(o), InvalidParametersError);

  for (const auto& e : soliton_type_table()) {
    const auto back = soliton_type_from_record(warped::KeyValueRecord::parse(to_record(e).to_string()));
    CHECK(back.name == e.name);
    CHECK(back.beta == e.beta);
    CHECK(back.mu == e.mu);
    CHECK(back.lambda.kind == e.lambda.kind);
  }
  const auto tc = TheoremCase::rotational(1.5, -0.5, 2.0);
  const auto tb = theorem_case_from_record(warped::KeyValueRecord::parse(to_record(tc).to_string()));
  CHECK((tb.tag == tc.tag && tb.a == tc.a && tb.c == tc.c && tb.c1 == tc.c1));
}

TEST_CASE("lambda recovery") {
  // Cylinder under Yamabe parameters: lambda = -R = -6/a^2 and lambda + R = 0.
  const double a = 1.4;
  const auto cyl = build_model(TheoremCase::cylinder(a), 4, {0.1, 5});
  const auto yam = lookup("gradient Yamabe soliton").params();
  const auto rp = reduce(yam);
  for (double r : linspace(0.1, 5, 20)) {
    const double lam = lambda_recovery(rp, yam.rho(), cyl.metric, cyl.potential, r);
    CHECK(lam == doctest::Approx(-6.0 / (a * a)).epsilon(1e-14));
    CHECK(std::abs(lam + warped::scalar_and_derivative(cyl.metric, r).value) < 1e-12);
  }
  // Complex Euclidean space under conformal parameters: lambda = beta phi = 2a.
  const auto flat = build_model(TheoremCase::euclidean(0.8), 4, {0.1, 5});
  const auto conf = lookup("gradient conformal soliton").params();
  for (double r : linspace(0.1, 5, 20))
    CHECK(lambda_recovery(reduce(conf), conf.rho(), flat.metric, flat.potential, r) == doctest::Approx(1.6));
  // Case IV with rho = 0: lambda = beta phi varies with r.
  const auto iv = build_model(kIV, 4, {0.1, 5});
  const ReducedParams rp4{-1.0, 2.0, true};
  CHECK(lambda_recovery(rp4, 0.0, iv.metric, iv.potential, 1.0) == doctest::Approx(4.0 / 3));
  CHECK(std::abs(lambda_recovery(rp4, 0.0, iv.metric, iv.potential, 3.0) - 4.0 / 3) > 0.1);
  // Quasi-Yamabe with c = -1 (k = -1): phi = C exp(cF) is nonconstant and R vanishes on the
  // flat model, so lambda is not constant.
  SolitonTypeOptions o;
  o.quasi_k = -1;
  const auto q = lookup("gradient quasi-Yamabe soliton", o).params();
  CHECK(reduce(q).c == -1.0);
  const double l1 = lambda_recovery(reduce(q), q.rho(), iv.metric, iv.potential, 0.5);
  const double l2 = lambda_recovery(reduce(q), q.rho(), iv.metric, iv.potential, 2.0);
  CHECK(std::abs(l1 - l2) > 0.1);
}

TEST_CASE("Schouten sigma_k") {
  CHECK(elementary_symmetric(Eigen::Vector3d(1, 2, 3), 2) == doctest::Approx(11.0));
  CHECK(elementary_symmetric(Eigen::Vector3d(1, 2, 3), 3) == doctest::Approx(6.0));
  // Round unit S^n with exact curvature data: sigma_k = C(n, k) / 2^k.
  for (int n : {3, 4, 5}) {
    geom::CurvaturePack pack;
    const geom::Matrix g = geom::Matrix::Identity(n, n) * 1.7;
    pack.ricci = (n - 1.0) * g;
    pack.scalar = n * (n - 1.0);
    double binom = 1;
    for (int k = 1; k <= n; ++k) {
      binom = binom * (n - k + 1) / k;
      CHECK(schouten_sigma_k(pack, g, n, k) == doctest::Approx(binom / std::pow(2.0, k)).epsilon(1e-12));
    }
  }
  // Round S^4 as sin r over S^3, finite-difference path.
  const WarpedMetric s4(WarpingProfile::sine({0.2, 2.9}), FiberSpec::round_sphere(3));
  const auto patch = warped::to_patch(s4, warped::FiberChart::s3_hyperspherical);
  geom::Point x(4);
  x << 1.3, 1.2, 1.1, 0.4;
  const auto pack = geom::curvature(patch, x);
  const auto g = patch.metric(x);
  CHECK(std::abs(schouten_sigma_k(pack, g, 4, 1) - 2.0) < 1e-6);
  CHECK(std::abs(schouten_sigma_k(pack, g, 4, 2) - 1.5) < 1e-6);
  // Cylinder a = 1: sigma_1 = R/6 = 1.
  const WarpedMetric cyl(WarpingProfile::constant(1.0, {0.2, 2.9}), FiberSpec::round_sphere(3));
  const auto cpatch = warped::to_patch(cyl, warped::FiberChart::s3_hyperspherical);
  CHECK(std::abs(schouten_sigma_k(geom::curvature(cpatch, x), cpatch.metric(x), 4, 1) - 1.0) < 1e-6);
  // Flat space.
  const auto flat = geom::euclidean_patch(4);
  const geom::Point o = geom::Point::Zero(4);
  for (int k = 1; k <= 4; ++k) CHECK(std::abs(schouten_sigma_k(geom::curvature(flat, o), flat.metric(o), 4, k)) < 1e-10);
  const auto flat2 = geom::euclidean_patch(2);
  const geom::Point o2 = geom::Point::Zero(2);
  CHECK_THROWS_AS(schouten_sigma_k(geom::curvature(flat2, o2), flat2.metric(o2), 2, 1), DimensionError);
  CHECK_THROWS_AS(schouten_sigma_k(geom::curvature(flat, o), flat.metric(o), 4, 5), InvalidParametersError);
}
