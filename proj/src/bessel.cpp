#include "fessi/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace fessi::bessel {

std::vector<double> j_array(int nmax, double x) {
  if (nmax < 0) throw std::invalid_argument("bessel::j_array: nmax < 0");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  const double ax = std::fabs(x);
  if (ax == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // start the recurrence well above both nmax and the turning point ~|x|
  int mstart = nmax + static_cast<int>(std::ceil(std::sqrt(40.0 * (nmax + 1)))) +
               static_cast<int>(std::ceil(ax)) + 20;
  if (mstart % 2 == 1) ++mstart;

  double jp1 = 0.0, jn = 1e-300;
  double sum = 0.0;  // accumulates J_0 + 2 sum_{k>=1} J_2k
  for (int k = mstart; k >= 1; --k) {
    const double jm1 = (2.0 * k / ax) * jn - jp1;
    jp1 = jn;
    jn = jm1;
    if (k - 1 <= nmax) out[k - 1] = jn;
    if ((k - 1) % 2 == 0) sum += (k - 1 == 0) ? jn : 2.0 * jn;
    // rescale to avoid overflow during deep recurrences
    if (std::fabs(jn) > 1e250) {
      jn *= 1e-250;
      jp1 *= 1e-250;
      sum *= 1e-250;
      for (auto& v : out) v *= 1e-250;
    }
  }
  for (auto& v : out) v /= sum;
  if (x < 0.0)  // J_n(-x) = (-1)^n J_n(x)
    for (int n = 1; n <= nmax; n += 2) out[n] = -out[n];
  return out;
}

double j(int n, double x) {
  const int an = n < 0 ? -n : n;
  const double v = j_array(an, x)[an];
  return (n < 0 && an % 2 == 1) ? -v : v;
}

}  // namespace fessi::bessel
