#pragma once

#include <cstdint>
#include <vector>

#include "fessi/wavefunction.hpp"

namespace fessi {

// Wien-filter delay, shear setting, spectrometer resolution and shot-to-shot
// timing jitter of one measurement.
struct MeasurementConfig {
  double tau = 30.0;             // fs
  double delta_e = 0.1;          // eV
  double resolution = 0.010;     // eV, Gaussian response fwhm
  double jitter_fraction = 0.0;  // std of delta-tau as a fraction of tau
  std::uint32_t shots = 1;       // jitter ensemble size
  std::uint64_t seed = 0;        // pseudorandom stream for the ensemble

  void validate() const;
};

struct Interferogram {
  EnergyGrid grid;
  std::vector<double> intensity;  // >= 0 everywhere
  MeasurementConfig config;
  bool fringes_unresolvable = false;  // resolution wider than the fringe period

  void validate() const;
};

// Wien filter as an ideal group delay: samples multiplied by exp(-i E tau /
// hbar) at the absolute grid energies. Magnitudes are untouched.
SpectralWavefunction delay(const SpectralWavefunction& psi, double tau);

// I(E) = |arm_a + arm_b|^2 pointwise; arms must share a grid.
Interferogram interfere(const SpectralWavefunction& arm_a,
                        const SpectralWavefunction& arm_b);

// Full measurement: ensemble average over `shots` draws of
// delta-tau ~ Normal(0, jitter_fraction * tau) applied to the delayed arm as a
// complete re-delay, then convolution with the Gaussian spectrometer response.
// Deterministic for a fixed config.seed; shots accumulate in index order.
Interferogram measure(const SpectralWavefunction& psi,
                      const SpectralWavefunction& sheared_arm,
                      const MeasurementConfig& config);

// Gaussian response applied alone (used for single-arm reference spectra).
std::vector<double> apply_spectrometer_response(const std::vector<double>& I,
                                                const EnergyGrid& grid,
                                                double resolution_fwhm);

struct ConstraintReport {
  double tau_lower = 0.0;       // pi hbar / sigma_E (fs)
  double tau_upper = 0.0;       // 2 pi hbar / delta_E-resolution (fs)
  bool tau_ok = false;
  double shear_limit = 0.0;     // 2 sigma_E (eV)
  double shear_ratio = 0.0;     // delta_E / (2 sigma_E)
  bool shear_ok = false;
  double visibility_estimate = 0.0;  // exp(-delta_E^2 / 4 sigma_E^2)
  bool visibility_borderline = false;  // delta_E >= 2 sigma_E
  bool all_ok() const { return tau_ok && shear_ok; }
};

ConstraintReport check_constraints(double sigma_e,
                                   const MeasurementConfig& config);

}  // namespace fessi
