#include "etype/geometry/stencil.hpp"

#include <algorithm>
#include <cmath>

#include "etype/errors.hpp"

namespace etype::geom {

void StencilConfig::validate() const {
  if (!(h > 0.0) || !std::isfinite(h)) throw InvalidParametersError("stencil step must be positive");
  if (order != 2 && order != 4) throw InvalidParametersError("stencil order must be 2 or 4");
  if (!(tolerance_scale > 0.0)) throw InvalidParametersError("tolerance scale must be positive");
}

int Stencil1D::reach() const {
  int r = 0;
  for (int o : offsets) r = std::max(r, std::abs(o));
  return r;
}

Stencil1D central_stencil(int derivative_order, int accuracy_order) {
  if (accuracy_order == 2) {
    switch (derivative_order) {
      case 1: return {{-1, 1}, {-0.5, 0.5}};
      case 2: return {{-1, 0, 1}, {1.0, -2.0, 1.0}};
      case 3: return {{-2, -1, 1, 2}, {-0.5, 1.0, -1.0, 0.5}};
      default: break;
    }
  } else if (accuracy_order == 4) {
    switch (derivative_order) {
      case 1: return {{-2, -1, 1, 2}, {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12}};
      case 2:
        return {{-2, -1, 0, 1, 2}, {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12}};
      case 3:
        return {{-3, -2, -1, 1, 2, 3}, {1.0 / 8, -1.0, 13.0 / 8, -13.0 / 8, 1.0, -1.0 / 8}};
      default: break;
    }
  }
  throw InvalidParametersError("unsupported stencil (derivative order 1..3, accuracy 2 or 4)");
}

int stencil_reach(int max_derivative_order, int accuracy_order) {
  int r = 0;
  for (int d = 1; d <= max_derivative_order; ++d)
    r = std::max(r, central_stencil(d, accuracy_order).reach());
  return r;
}

}  // namespace etype::geom
