#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "fessi/grids.hpp"

namespace fessi {

using complexd = std::complex<double>;

// Polynomial spectral phase about the grid centre plus an optional sinusoidal
// ripple:
//
//   phi(E) = sum_n c_n (E - E0)^n  +  A sin(2 pi (E - E0 - offset) / period)
//
// Coefficients c_n are the direct polynomial coefficients in rad/eV^n, the
// form the phase curves are usually quoted in. Orders 0 and 1 are rejected:
// a constant is a global phase and a linear term only shifts the arrival
// time, so neither is a physical degree of freedom here.
struct OscillatoryPhase {
  double amplitude = 0.0;  // rad
  double period = 0.0;     // eV
  double offset = 0.0;     // eV
};

class SpectralPhaseSpec {
 public:
  SpectralPhaseSpec() = default;
  // terms: (order n >= 2, coefficient in rad / eV^n); orders must be unique
  explicit SpectralPhaseSpec(
      std::vector<std::pair<int, double>> poly,
      std::optional<OscillatoryPhase> oscillatory = std::nullopt);

  double operator()(double e_minus_e0) const;
  const std::vector<std::pair<int, double>>& poly() const { return poly_; }
  const std::optional<OscillatoryPhase>& oscillatory() const {
    return oscillatory_;
  }
  double coefficient(int order) const;  // 0 if absent

 private:
  std::vector<std::pair<int, double>> poly_;
  std::optional<OscillatoryPhase> oscillatory_;
};

// Complex spectral amplitude psi(E) on an EnergyGrid, normalised so that
// sum |psi|^2 dE = 1 (samples carry eV^-1/2).
struct SpectralWavefunction {
  EnergyGrid grid;
  std::vector<complexd> samples;

  double norm() const;  // sum |psi|^2 dE
  std::vector<double> density() const;
};

// Complex temporal envelope psi(t) on a TimeGrid (fs^-1/2 normalisation),
// taken in the rotating frame of grid.reference_energy.
struct TemporalWavefunction {
  TimeGrid grid;
  std::vector<complexd> samples;

  double norm() const;  // sum |psi|^2 dt
  std::vector<double> intensity() const;
};

// Gaussian spectrum |psi| ~ exp(-(E-E0)^2 / 4 sigma^2) with the given phase,
// renormalised on the lattice. Rejects grids narrower than 8 sigma or whose
// truncated tail mass exceeds 1e-6.
SpectralWavefunction make_gaussian_spectrum(const EnergyGrid& grid,
                                            double sigma_e,
                                            const SpectralPhaseSpec& phase = {});

// Unitary Fourier pair with kernel exp(-i E t / hbar):
//   psi(t) = (2 pi hbar)^(-1/2) sum dE psi(E) exp(-i E t / hbar)
//   psi(E) = (2 pi hbar)^(-1/2) sum dt psi(t) exp(+i E t / hbar)
// Parseval holds exactly on the discrete pair.
TemporalWavefunction to_time_domain(const SpectralWavefunction& psi,
                                    double center_time = 0.0);
SpectralWavefunction to_energy_domain(const TemporalWavefunction& psi);

struct IntensityMoments {
  double mean = 0.0;   // fs
  double rms = 0.0;    // fs
  double fwhm = 0.0;   // fs; outermost half-max crossing span if multimodal
  bool multimodal = false;  // more than two half-maximum crossings
};

// <t^n> by the trapezoid rule over |psi(t)|^2; fwhm by linear interpolation
// of the half-maximum crossings.
IntensityMoments intensity_moments(const TemporalWavefunction& psi);

}  // namespace fessi
