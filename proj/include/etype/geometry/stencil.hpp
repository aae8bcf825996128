#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace etype::geom {

struct StencilConfig {
  double h = 1e-2;
  int order = 4;  // 2 or 4
  double tolerance_scale = 1e-4;

  void validate() const;
  StencilConfig halved() const { return {h / 2, order, tolerance_scale}; }
};

/// One-dimensional central difference stencil for the derivative of the
/// given order (1..3). Offsets are in units of h.
struct Stencil1D {
  std::vector<int> offsets;
  std::vector<double> weights;

  int reach() const;
};

Stencil1D central_stencil(int derivative_order, int accuracy_order);

/// Largest offset (in units of h) touched by a mixed partial of total order
/// up to max_derivative_order.
int stencil_reach(int max_derivative_order, int accuracy_order);

/// Mixed partial derivative of f at x along the listed axes (repeats allowed,
/// so {0, 0, 1} is d^3/dx0^2 dx1). f may return any type closed under
/// addition and scalar multiplication (double, Eigen matrices).
template <class Fn>
auto mixed_partial(const Fn& f, const Eigen::VectorXd& x, std::span<const int> axes,
                   const StencilConfig& stencil) -> decltype(f(x)) {
  using Value = decltype(f(x));
  // Collapse repeated axes into (axis, multiplicity).
  std::vector<std::pair<int, int>> groups;
  for (int a : axes) {
    bool found = false;
    for (auto& g : groups)
      if (g.first == a) {
        ++g.second;
        found = true;
      }
    if (!found) groups.emplace_back(a, 1);
  }
  std::vector<Stencil1D> stencils;
  stencils.reserve(groups.size());
  for (const auto& g : groups) stencils.push_back(central_stencil(g.second, stencil.order));

  const double h = stencil.h;
  double scale = 1.0;
  for (std::size_t i = 0; i < axes.size(); ++i) scale /= h;

  std::vector<std::size_t> idx(groups.size(), 0);
  Value acc{};
  bool first = true;
  Eigen::VectorXd y = x;
  while (true) {
    double w = 1.0;
    y = x;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      w *= stencils[g].weights[idx[g]];
      y[groups[g].first] += stencils[g].offsets[idx[g]] * h;
    }
    if (w != 0.0) {
      if (first) {
        acc = w * f(y);
        first = false;
      } else {
        acc += w * f(y);
      }
    }
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (++idx[g] < stencils[g].offsets.size()) break;
      idx[g] = 0;
    }
    if (g == groups.size()) break;
  }
  return scale * acc;
}

}  // namespace etype::geom
