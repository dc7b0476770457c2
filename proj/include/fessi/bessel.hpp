#pragma once

#include <vector>

namespace fessi::bessel {

// J_0..J_nmax(x) by Miller's downward recurrence with sum normalisation
// (J_0 + 2 sum J_2k = 1). Accurate to better than 1e-13 for the arguments this
// project uses (|x| <= ~20). Negative orders follow J_{-n} = (-1)^n J_n.
std::vector<double> j_array(int nmax, double x);

double j(int n, double x);

}  // namespace fessi::bessel
