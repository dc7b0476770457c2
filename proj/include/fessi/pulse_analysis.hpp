#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace fessi {

// Closed-form pulse-duration model. phi2 and phi3 are Taylor coefficients of
// the spectral phase about E0,
//   phi(E) = phi0 + phi1 q + (1/2) phi2 q^2 + (1/6) phi3 q^3,  q = E - E0,
// in rad/eV^n. (Polynomial coefficients c_n as used by SpectralPhaseSpec
// convert as phi_n = n! c_n.) phi0 and phi1 do not enter: both are gauge.
struct DurationModel {
  double sigma_t0 = 0.0;       // fs, intrinsic rms hbar / (2 sigma_E)
  double phi2 = 0.0;           // rad / eV^2
  double phi3 = 0.0;           // rad / eV^3
  double optical_period = 0.0; // fs, T = lambda_L / c

  static DurationModel from_sigma_e(double sigma_e, double phi2, double phi3,
                                    double lambda_um = 10.33);
  void validate() const;
};

// rms duration with the hbar^n units bridge (phi_n in rad/eV^n):
//   sigma_t = sigma_t0 sqrt( 1 + (hbar^2 phi2 / (2 sigma_t0^2))^2
//                              + (1/2) (hbar^3 phi3 / (4 sigma_t0^3))^2 )
// Exact for Gaussian spectra; reduces to the pure-chirp law at phi3 = 0.
double duration(const DurationModel& model);

struct LocalityReport {
  double sigma_t = 0.0;       // fs
  double quarter_period = 0.0;  // T/4, fs
  double margin = 0.0;        // T/4 - sigma_t (fs); positive = pass
  bool pass = false;
  // advisory sub-conditions from the chirp analysis (not gates)
  bool intrinsic_ok = false;   // sigma_t0 < T/4
  bool chirp_term_ok = false;  // |phi2| hbar^2 < sigma_t0 T / 2
  bool chirp_abs_ok = false;   // phi2 hbar^2 < T^2 / 64
};

// Eq. criterion sigma_t < T/4 plus advisory diagnostics.
LocalityReport locality_check(const DurationModel& model);

struct ParameterDiagram {
  std::vector<double> sigma_e;    // axis 1 (eV)
  std::vector<double> coeff;      // axis 2 (phi2 or phi3, rad/eV^n)
  std::vector<double> sigma_t;    // row-major [coeff][sigma_e] (fs)
  double contour_level = 0.0;     // T/4 (fs)
  // contour polyline segments (sigma_e, coeff, sigma_e, coeff) from marching
  // squares at sigma_t = T/4
  std::vector<std::array<double, 4>> contour_segments;
};

enum class PhaseOrder { second, third };

ParameterDiagram parameter_diagram(double sigma_e_min, double sigma_e_max,
                                   std::size_t sigma_e_count, double coeff_min,
                                   double coeff_max, std::size_t coeff_count,
                                   PhaseOrder order, double lambda_um = 10.33);

}  // namespace fessi
