#include "fessi/spline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fessi {

CubicSpline::CubicSpline(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n != y_.size() || n < 2)
    throw std::invalid_argument("CubicSpline: need >= 2 matching knots");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1]))
      throw std::invalid_argument("CubicSpline: knots must strictly increase");

  b_.assign(n, 0.0);
  c_.assign(n, 0.0);
  d_.assign(n, 0.0);

  if (n == 2) {  // linear
    b_[0] = (y_[1] - y_[0]) / (x_[1] - x_[0]);
    return;
  }

  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = x_[i + 1] - x_[i];

  if (n == 3) {  // the unique parabola through three points
    const double d0 = (y_[1] - y_[0]) / h[0];
    const double d1 = (y_[2] - y_[1]) / h[1];
    const double cc = (d1 - d0) / (h[0] + h[1]);
    b_[0] = d0 - cc * h[0];
    c_[0] = cc;
    b_[1] = d0 + cc * h[0];
    c_[1] = cc;
    return;
  }

  // Second derivatives m_i. Not-a-knot ties the boundary values to their
  // neighbours (third derivative continuous at x_1 and x_{n-2}):
  //   m_0     = m_1 (1 + h_0/h_1) - m_2 h_0/h_1
  //   m_{n-1} = m_{n-2} (1 + h_{n-2}/h_{n-3}) - m_{n-3} h_{n-2}/h_{n-3}
  // which leaves a tridiagonal system for m_1 .. m_{n-2}.
  const std::size_t k = n - 2;  // interior unknowns
  std::vector<double> sub(k, 0.0), diag(k, 0.0), sup(k, 0.0), rhs(k, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t r = i - 1;
    sub[r] = h[i - 1];
    diag[r] = 2.0 * (h[i - 1] + h[i]);
    sup[r] = h[i];
    rhs[r] = 6.0 * ((y_[i + 1] - y_[i]) / h[i] - (y_[i] - y_[i - 1]) / h[i - 1]);
  }
  {
    const double r01 = h[0] / h[1];
    diag[0] += h[0] * (1.0 + r01);
    sup[0] -= h[0] * r01;
    sub[0] = 0.0;
    const double rn = h[n - 2] / h[n - 3];
    diag[k - 1] += h[n - 2] * (1.0 + rn);
    sub[k - 1] -= h[n - 2] * rn;
    sup[k - 1] = 0.0;
  }

  // Thomas algorithm
  std::vector<double> mi(k, 0.0);
  for (std::size_t i = 1; i < k; ++i) {
    const double f = sub[i] / diag[i - 1];
    diag[i] -= f * sup[i - 1];
    rhs[i] -= f * rhs[i - 1];
  }
  mi[k - 1] = rhs[k - 1] / diag[k - 1];
  for (std::size_t i = k - 1; i-- > 0;)
    mi[i] = (rhs[i] - sup[i] * mi[i + 1]) / diag[i];

  std::vector<double> m(n, 0.0);
  for (std::size_t i = 0; i < k; ++i) m[i + 1] = mi[i];
  m[0] = m[1] * (1.0 + h[0] / h[1]) - m[2] * (h[0] / h[1]);
  m[n - 1] = m[n - 2] * (1.0 + h[n - 2] / h[n - 3]) -
             m[n - 3] * (h[n - 2] / h[n - 3]);

  for (std::size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (y_[i + 1] - y_[i]) / h[i] - h[i] * (2.0 * m[i] + m[i + 1]) / 6.0;
    c_[i] = m[i] / 2.0;
    d_[i] = (m[i + 1] - m[i]) / (6.0 * h[i]);
  }
}

double CubicSpline::operator()(double x) const {
  const std::size_t n = x_.size();
  if (n == 0) throw std::logic_error("CubicSpline: empty");
  // clamp to the boundary polynomials for gentle extrapolation
  std::size_t i;
  if (x <= x_[0])
    i = 0;
  else if (x >= x_[n - 1])
    i = n - 2;
  else {
    i = static_cast<std::size_t>(
            std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
  }
  const double dx = x - x_[i];
  return y_[i] + dx * (b_[i] + dx * (c_[i] + dx * d_[i]));
}

}  // namespace fessi
