#pragma once

#include <vector>

namespace fessi {

// Not-a-knot cubic spline interpolant on strictly increasing knots.
// Reproduces cubic polynomials exactly, which matters for dense phase
// evaluation between concatenation lattice points. Falls back to the unique
// quadratic for n = 3 and to linear interpolation for n = 2.
class CubicSpline {
 public:
  CubicSpline() = default;
  CubicSpline(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  std::size_t size() const { return x_.size(); }

 private:
  std::vector<double> x_, y_, b_, c_, d_;  // y + b dx + c dx^2 + d dx^3
};

}  // namespace fessi
