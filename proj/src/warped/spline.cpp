#include "etype/warped/spline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "etype/errors.hpp"

namespace etype::warped {

namespace {

// Derivative at nodes[at] of the cubic through four nodes.
double lagrange_slope(const double* xs, const double* ys, int at) {
  double slope = 0.0;
  for (int j = 0; j < 4; ++j) {
    double dl = 0.0;
    if (j == at) {
      for (int k = 0; k < 4; ++k)
        if (k != j) dl += 1.0 / (xs[at] - xs[k]);
    } else {
      double num = 1.0, den = 1.0;
      for (int k = 0; k < 4; ++k) {
        if (k == j) continue;
        den *= xs[j] - xs[k];
        if (k != at) num *= xs[at] - xs[k];
      }
      dl = num / den;
    }
    slope += ys[j] * dl;
  }
  return slope;
}

}  // namespace

CubicSpline::CubicSpline(std::vector<double> knots, std::vector<double> values,
                         std::optional<double> start_slope, std::optional<double> end_slope)
    : x_(std::move(knots)), y_(std::move(values)) {
  const std::size_t n = x_.size();
  if (n < 4) throw InvalidParametersError("cubic spline needs at least four knots");
  if (y_.size() != n) throw InvalidParametersError("spline knots and values differ in length");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i + 1] > x_[i])) throw InvalidParametersError("spline knots must be strictly increasing");
  for (double v : y_)
    if (!std::isfinite(v)) throw InvalidParametersError("spline values must be finite");

  const double s0 = start_slope ? *start_slope : lagrange_slope(x_.data(), y_.data(), 0);
  const double sn = end_slope ? *end_slope : lagrange_slope(x_.data() + n - 4, y_.data() + n - 4, 3);

  // Tridiagonal system for the knot second derivatives (Thomas algorithm).
  std::vector<double> lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0);
  const double h0 = x_[1] - x_[0];
  diag[0] = 2 * h0;
  upper[0] = h0;
  rhs[0] = 6 * ((y_[1] - y_[0]) / h0 - s0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hl = x_[i] - x_[i - 1], hr = x_[i + 1] - x_[i];
    lower[i] = hl;
    diag[i] = 2 * (hl + hr);
    upper[i] = hr;
    rhs[i] = 6 * ((y_[i + 1] - y_[i]) / hr - (y_[i] - y_[i - 1]) / hl);
  }
  const double hn = x_[n - 1] - x_[n - 2];
  lower[n - 1] = hn;
  diag[n - 1] = 2 * hn;
  rhs[n - 1] = 6 * (sn - (y_[n - 1] - y_[n - 2]) / hn);

  for (std::size_t i = 1; i < n; ++i) {
    const double w = lower[i] / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  m_.assign(n, 0.0);
  m_[n - 1] = rhs[n - 1] / diag[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) m_[i] = (rhs[i] - upper[i] * m_[i + 1]) / diag[i];

  cumulative_.assign(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i)
    cumulative_[i + 1] = cumulative_[i] + segment_integral(i, x_[i + 1] - x_[i]);
}

std::size_t CubicSpline::segment(double x) const {
  const double slack = 1e-12 * std::max(1.0, std::abs(x_.back() - x_.front()));
  if (!(x >= x_.front() - slack && x <= x_.back() + slack)) {
    std::ostringstream os;
    os << "spline evaluated at " << x << " outside [" << x_.front() << ", " << x_.back() << "]";
    throw OutOfDomainError(os.str());
  }
  auto it = std::upper_bound(x_.begin(), x_.end(), x);
  std::size_t i = (it == x_.begin()) ? 0 : static_cast<std::size_t>(it - x_.begin()) - 1;
  return std::min(i, x_.size() - 2);
}

std::array<double, 4> CubicSpline::evaluate(double x) const {
  const std::size_t i = segment(x);
  const double h = x_[i + 1] - x_[i];
  const double t = x - x_[i];
  const double third = (m_[i + 1] - m_[i]) / h;
  const double b = (y_[i + 1] - y_[i]) / h - h * (2 * m_[i] + m_[i + 1]) / 6;
  return {y_[i] + t * (b + t * (m_[i] / 2 + t * third / 6)),
          b + t * (m_[i] + t * third / 2),
          m_[i] + t * third,
          third};
}

double CubicSpline::segment_integral(std::size_t i, double t) const {
  const double h = x_[i + 1] - x_[i];
  const double b = (y_[i + 1] - y_[i]) / h - h * (2 * m_[i] + m_[i + 1]) / 6;
  const double third = (m_[i + 1] - m_[i]) / h;
  return t * (y_[i] + t * (b / 2 + t * (m_[i] / 6 + t * third / 24)));
}

double CubicSpline::integral(double x) const {
  const std::size_t i = segment(x);
  return cumulative_[i] + segment_integral(i, x - x_[i]);
}

}  // namespace etype::warped
