#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "etype/errors.hpp"
#include "etype/geometry/tensor_engine.hpp"
#include "random_fields.hpp"

using namespace etype;
using namespace etype::geom;
using std::numbers::pi;

namespace {

Point pt(std::initializer_list<double> xs) {
  Point p(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) p[i++] = x;
  return p;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

}  // namespace

TEST_CASE("stencils differentiate polynomials exactly") {
  // Sum of w_k k^p must equal p! for p == derivative order and vanish below.
  for (int acc : {2, 4})
    for (int d = 1; d <= 3; ++d) {
      const Stencil1D s = central_stencil(d, acc);
      for (int p = 0; p <= d; ++p) {
        double sum = 0.0;
        for (std::size_t i = 0; i < s.offsets.size(); ++i) sum += s.weights[i] * std::pow(s.offsets[i], p);
        const double expect = (p == d) ? std::tgamma(d + 1.0) : 0.0;
        CHECK(sum == doctest::Approx(expect).epsilon(1e-14));
      }
    }
  CHECK(stencil_reach(3, 4) == 3);
  CHECK(stencil_reach(2, 4) == 2);
  CHECK_THROWS_AS(central_stencil(4, 4), InvalidParametersError);
}

TEST_CASE("christoffel: flat metric vanishes") {
  const auto patch = euclidean_patch(3);
  const auto gamma = christoffel(patch, pt({0.3, -0.2, 0.7}));
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(gamma(k, i, j) == doctest::Approx(0.0));
}

TEST_CASE("christoffel: polar plane at r = 2") {
  const auto patch = polar_plane_patch();
  const Point x = pt({2.0, 0.4});
  const auto gamma = christoffel(patch, x);
  CHECK(gamma(0, 1, 1) == doctest::Approx(-2.0).epsilon(1e-10));
  CHECK(gamma(1, 0, 1) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(gamma(1, 1, 0) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(std::abs(gamma(0, 0, 0)) < 1e-12);
  CHECK(std::abs(gamma(0, 0, 1)) < 1e-12);
  CHECK(std::abs(gamma(1, 1, 1)) < 1e-12);
  CHECK(gamma.symmetry_defect() == 0.0);
  CHECK(metric_compatibility_residual(patch, x) < 1e-8);
}

TEST_CASE("christoffel: round 2-sphere at theta = pi/4") {
  const auto patch = round_s2_patch();
  const Point x = pt({pi / 4, 0.3});
  const auto gamma = christoffel(patch, x);
  CHECK(gamma(0, 1, 1) == doctest::Approx(-std::sin(pi / 4) * std::cos(pi / 4)).epsilon(1e-8));
  CHECK(gamma(1, 0, 1) == doctest::Approx(std::cos(pi / 4) / std::sin(pi / 4)).epsilon(1e-8));
  CHECK(metric_compatibility_residual(patch, x) < 1e-7);
}

TEST_CASE("curvature: flat and round 2-sphere") {
  {
    const auto patch = euclidean_patch(4);
    const auto pack = curvature(patch, pt({0.1, 0.2, -0.3, 0.4}));
    CHECK(std::abs(pack.scalar) < 1e-10);
    CHECK(pack.ricci.cwiseAbs().maxCoeff() < 1e-10);
  }
  const auto patch = round_s2_patch();
  for (double theta : {0.5, pi / 4, 1.3, 2.2}) {
    const Point x = pt({theta, -0.7});
    const auto pack = curvature(patch, x);
    CHECK(pack.scalar == doctest::Approx(2.0).epsilon(1e-7));
    const Matrix g = patch.metric(x);
    CHECK((pack.ricci - g).cwiseAbs().maxCoeff() < 1e-7);
    // R_{theta phi theta phi} = sin^2 theta with the chosen convention.
    CHECK(pack.riemann(0, 1, 1, 0) == doctest::Approx(std::pow(std::sin(theta), 2)).epsilon(1e-7));
    CHECK(symmetry_defects(pack, g).max() < 1e-7);
  }
}

TEST_CASE("hessian and gradient data") {
  const auto flat = euclidean_patch(3);
  const Point x = pt({0.4, -0.1, 0.6});
  ScalarField half_square([](const Point& y) { return 0.5 * y.squaredNorm(); });
  ScalarField linear([](const Point& y) { return 2.0 * y[0] - y[1] + 0.5 * y[2]; });
  ScalarField first_coord([](const Point& y) { return y[0]; });

  CHECK((hessian(flat, half_square, x) - Matrix::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(hessian(flat, linear, x).cwiseAbs().maxCoeff() < 1e-9);
  CHECK(gradient_data(flat, half_square, x).laplacian == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(gradient_data(flat, first_coord, x).norm_squared == doctest::Approx(1.0).epsilon(1e-12));

  // Polar chart, F = r^2/2: Hess F = g = diag(1, r^2).
  const auto polar = polar_plane_patch();
  ScalarField radial([](const Point& y) { return 0.5 * y[0] * y[0]; });
  const Point p = pt({1.7, 0.2});
  const Matrix h = hessian(polar, radial, p);
  CHECK((h - polar.metric(p)).cwiseAbs().maxCoeff() < 1e-9);
  const auto gd = gradient_data(polar, radial, p);
  CHECK(gd.laplacian == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(gd.norm_squared == doctest::Approx(1.7 * 1.7).epsilon(1e-9));

  // Analytic derivative maps take precedence and agree with differencing.
  ScalarField analytic([](const Point& y) { return 0.5 * y[0] * y[0]; });
  analytic.gradient = [](const Point& y) { Eigen::VectorXd g(2); g << y[0], 0.0; return g; };
  analytic.second_derivatives = [](const Point&) { Matrix m = Matrix::Zero(2, 2); m(0, 0) = 1.0; return m; };
  CHECK((hessian(polar, analytic, p) - h).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("ricci identity residual") {
  {
    const auto flat = euclidean_patch(3);
    ScalarField cubic([](const Point& y) {
      return y[0] * y[0] * y[1] - 0.3 * y[2] * y[2] * y[2] + y[0] * y[1] * y[2] + 2.0 * y[1];
    });
    CHECK(ricci_identity_residual(flat, cubic, pt({0.2, 0.5, -0.4})).cwiseAbs().maxCoeff() < 1e-8);
  }
  {
    const auto sphere = round_s2_patch();
    ScalarField cos_theta([](const Point& y) { return std::cos(y[0]); });
    CHECK(ricci_identity_residual(sphere, cos_theta, pt({1.1, 0.4})).cwiseAbs().maxCoeff() < 1e-4);
    // Without the Ricci term the commutator would be Ric(grad F) = -sin(theta) != 0, so the
    // identity is not trivially satisfied here.
    const auto gd = gradient_data(sphere, cos_theta, pt({1.1, 0.4}));
    CHECK(gd.norm_squared > 0.5);
  }
}

TEST_CASE("random smooth metrics: symmetries, trace coherence, ricci identity") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + trial % 3;
    auto c = etype::testing::random_patch_case(rng, n);
    const Matrix g = c.patch.metric(c.point);
    const auto pack = curvature(c.patch, c.point);
    const auto defects = symmetry_defects(pack, g);
    CHECK(defects.antisymmetry_first < 1e-12);
    CHECK(defects.antisymmetry_last < 1e-6);
    CHECK(defects.pair_interchange < 1e-6);
    CHECK(defects.ricci_symmetry < 1e-6);
    CHECK(defects.trace < 1e-12);
    CHECK(christoffel(c.patch, c.point).symmetry_defect() == 0.0);
    CHECK(metric_compatibility_residual(c.patch, c.point) < 1e-7);
    const auto gd = gradient_data(c.patch, c.field, c.point);
    CHECK(gd.laplacian == doctest::Approx(g.inverse().cwiseProduct(hessian(c.patch, c.field, c.point)).sum()));
    CHECK(ricci_identity_residual(c.patch, c.field, c.point).cwiseAbs().maxCoeff() < 1e-4);
  }
}

TEST_CASE("stencil convergence: halving h shrinks residuals by the order factor") {
  std::mt19937_64 rng(77);
  std::vector<double> identity2, identity4, compat2;
  const StencilConfig second{2e-2, 2, 1e-4};
  const StencilConfig fourth{4e-2, 4, 1e-4};
  for (int trial = 0; trial < 20; ++trial) {
    auto c = etype::testing::random_patch_case(rng, 3, 0.3);
    auto worst = [&](const StencilConfig& s) {
      return ricci_identity_residual(c.patch, c.field, c.point, s).cwiseAbs().maxCoeff();
    };
    identity2.push_back(worst(second) / worst(second.halved()));
    identity4.push_back(worst(fourth) / worst(fourth.halved()));
    compat2.push_back(metric_compatibility_residual(c.patch, c.point, second) /
                      metric_compatibility_residual(c.patch, c.point, second.halved()));
  }
  CHECK(median(identity2) >= 3.5);
  CHECK(median(compat2) >= 3.5);
  CHECK(median(identity4) >= 12.0);
}

TEST_CASE("domain and degeneracy errors") {
  const auto flat = euclidean_patch(2, 1.0, 0.1);
  CHECK_THROWS_AS(curvature(flat, pt({0.95, 0.0})), OutOfDomainError);
  // Margin respected but the nested reach of the identity check (4h) is not.
  CHECK_THROWS_AS(ricci_identity_residual(flat, ScalarField([](const Point& y) { return y[0]; }),
                                          pt({0.85, 0.0}), StencilConfig{0.05, 4, 1e-4}),
                  OutOfDomainError);
  CHECK_NOTHROW(curvature(flat, pt({0.85, 0.0}), StencilConfig{0.05, 4, 1e-4}));
  CHECK_THROWS_AS(christoffel(flat, pt({0.0, 0.0}), StencilConfig{0.2, 4, 1e-4}), OutOfDomainError);
  CHECK_THROWS_AS(christoffel(flat, pt({0.0, 0.0}), StencilConfig{0.01, 3, 1e-4}), InvalidParametersError);

  CoordinatePatch degenerate(
      2, [](const Point& y) { Matrix g = Matrix::Identity(2, 2); g(1, 1) = y[0]; return g; },
      {Interval{-1.0, 1.0}, Interval{-1.0, 1.0}}, 0.1);
  CHECK_THROWS_AS(christoffel(degenerate, pt({0.0, 0.0})), DegenerateMetricError);
  CHECK_NOTHROW(christoffel(degenerate, pt({0.5, 0.0})));

  CoordinatePatch asymmetric(
      2, [](const Point&) { Matrix g = Matrix::Identity(2, 2); g(0, 1) = 0.1; return g; },
      {Interval{-1.0, 1.0}, Interval{-1.0, 1.0}}, 0.1);
  CHECK_THROWS_AS(christoffel(asymmetric, pt({0.0, 0.0})), DegenerateMetricError);
}
