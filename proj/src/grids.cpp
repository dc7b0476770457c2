#include "fessi/grids.hpp"

#include <stdexcept>

#include "fessi/constants.hpp"

namespace fessi {

std::vector<double> EnergyGrid::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

void EnergyGrid::validate() const {
  if (!(spacing > 0.0))
    throw std::invalid_argument("EnergyGrid: spacing must be > 0");
  if (count < 16)
    throw std::invalid_argument("EnergyGrid: count must be >= 16");
}

std::vector<double> TimeGrid::values() const {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) v[i] = value(i);
  return v;
}

void TimeGrid::validate() const {
  if (!(spacing > 0.0))
    throw std::invalid_argument("TimeGrid: spacing must be > 0");
  if (count < 16)
    throw std::invalid_argument("TimeGrid: count must be >= 16");
}

TimeGrid conjugate_time_grid(const EnergyGrid& g, double center_time) {
  g.validate();
  const double dt = 2.0 * constants::pi * constants::hbar_ev_fs /
                    (static_cast<double>(g.count) * g.spacing);
  return TimeGrid{center_time, dt, g.count, g.center_energy};
}

EnergyGrid conjugate_energy_grid(const TimeGrid& g) {
  g.validate();
  const double de = 2.0 * constants::pi * constants::hbar_ev_fs /
                    (static_cast<double>(g.count) * g.spacing);
  return EnergyGrid{g.reference_energy, de, g.count};
}

EnergyGrid default_energy_grid(double sigma_e, double center_energy,
                               std::size_t count, double span_sigmas) {
  if (!(sigma_e > 0.0))
    throw std::invalid_argument("default_energy_grid: sigma_e must be > 0");
  EnergyGrid g{center_energy, span_sigmas * sigma_e / static_cast<double>(count),
               count};
  g.validate();
  return g;
}

}  // namespace fessi
