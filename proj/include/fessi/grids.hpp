#pragma once

#include <cstddef>
#include <vector>

namespace fessi {

// Uniform energy lattice. Sample i sits at center_energy + (i - count/2) * spacing.
struct EnergyGrid {
  double center_energy = 0.0;  // eV
  double spacing = 0.0;        // eV
  std::size_t count = 0;

  double value(std::size_t i) const {
    return center_energy +
           (static_cast<double>(i) - static_cast<double>(count / 2)) * spacing;
  }
  double min() const { return value(0); }
  double max() const { return value(count - 1); }
  double span() const { return spacing * static_cast<double>(count - 1); }
  std::vector<double> values() const;

  bool operator==(const EnergyGrid&) const = default;

  // throws std::invalid_argument on spacing <= 0 or count < 16
  void validate() const;
};

// Uniform time lattice, conjugate to an EnergyGrid under the Fourier pair.
// reference_energy records the centre of the conjugate energy grid; temporal
// samples are envelopes in the rotating frame exp(-i reference_energy t/hbar),
// which makes the transform pair invertible without extra bookkeeping.
struct TimeGrid {
  double center_time = 0.0;       // fs
  double spacing = 0.0;           // fs
  std::size_t count = 0;
  double reference_energy = 0.0;  // eV

  double value(std::size_t i) const {
    return center_time +
           (static_cast<double>(i) - static_cast<double>(count / 2)) * spacing;
  }
  double span() const { return spacing * static_cast<double>(count - 1); }
  std::vector<double> values() const;

  bool operator==(const TimeGrid&) const = default;

  void validate() const;
};

// dt * N = 2 pi hbar / dE  (conjugate-grid relation)
TimeGrid conjugate_time_grid(const EnergyGrid& g, double center_time = 0.0);
EnergyGrid conjugate_energy_grid(const TimeGrid& g);

// default lattice for a Gaussian of width sigma_E: N = 4096, span = 16 sigma_E
EnergyGrid default_energy_grid(double sigma_e, double center_energy = 0.0,
                               std::size_t count = 4096,
                               double span_sigmas = 16.0);

}  // namespace fessi
