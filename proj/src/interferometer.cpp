#include "fessi/interferometer.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "fessi/constants.hpp"
#include "fessi/fft.hpp"

namespace fessi {

namespace {
constexpr double kHbar = constants::hbar_ev_fs;
constexpr double kTwoPi = 2.0 * constants::pi;
}  // namespace

void MeasurementConfig::validate() const {
  if (!(tau > 0.0)) throw std::invalid_argument("MeasurementConfig: tau <= 0");
  if (!(resolution > 0.0))
    throw std::invalid_argument("MeasurementConfig: resolution <= 0");
  if (jitter_fraction < 0.0)
    throw std::invalid_argument("MeasurementConfig: jitter_fraction < 0");
  if (shots < 1) throw std::invalid_argument("MeasurementConfig: shots < 1");
}

void Interferogram::validate() const {
  grid.validate();
  if (intensity.size() != grid.count)
    throw std::invalid_argument("Interferogram: sample count mismatch");
  for (double v : intensity)
    if (v < 0.0) throw std::invalid_argument("Interferogram: negative intensity");
}

SpectralWavefunction delay(const SpectralWavefunction& psi, double tau) {
  SpectralWavefunction out = psi;
  for (std::size_t i = 0; i < out.grid.count; ++i)
    out.samples[i] *= std::polar(1.0, -out.grid.value(i) * tau / kHbar);
  return out;
}

Interferogram interfere(const SpectralWavefunction& arm_a,
                        const SpectralWavefunction& arm_b) {
  if (!(arm_a.grid == arm_b.grid))
    throw std::invalid_argument("interfere: arms must share one energy grid");
  Interferogram ig;
  ig.grid = arm_a.grid;
  ig.intensity.resize(ig.grid.count);
  for (std::size_t i = 0; i < ig.grid.count; ++i)
    ig.intensity[i] = std::norm(arm_a.samples[i] + arm_b.samples[i]);
  return ig;
}

std::vector<double> apply_spectrometer_response(const std::vector<double>& I,
                                                const EnergyGrid& grid,
                                                double resolution_fwhm) {
  if (!(resolution_fwhm > 0.0)) return I;
  const std::size_t n = grid.count;
  if (I.size() != n)
    throw std::invalid_argument("apply_spectrometer_response: size mismatch");
  // Multiply the conjugate-domain transform by the response's characteristic
  // function exp(-(sigma_g t / hbar)^2 / 2); circular convolution with an
  // exact Gaussian kernel.
  fft::cvec a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = I[i];
  fft::centered_dft_inplace(a, +1);
  const double sigma_g = resolution_fwhm / (2.0 * std::sqrt(2.0 * std::log(2.0)));
  const double dt = kTwoPi * kHbar / (static_cast<double>(n) * grid.spacing);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    const double damp = std::exp(-0.5 * (sigma_g * t / kHbar) * (sigma_g * t / kHbar));
    a[j] *= damp / static_cast<double>(n);
  }
  fft::centered_dft_inplace(a, -1);
  std::vector<double> out(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) peak = std::max(peak, std::abs(a[i].real()));
  for (std::size_t i = 0; i < n; ++i) {
    double v = a[i].real();
    if (v < 0.0 && v > -1e-12 * peak) v = 0.0;  // convolution round-off
    out[i] = v;
  }
  return out;
}

Interferogram measure(const SpectralWavefunction& psi,
                      const SpectralWavefunction& sheared_arm,
                      const MeasurementConfig& config) {
  config.validate();
  if (!(psi.grid == sheared_arm.grid))
    throw std::invalid_argument("measure: arms must share one energy grid");
  const std::size_t n = psi.grid.count;

  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> jitter(0.0, config.jitter_fraction * config.tau);

  std::vector<double> acc(n, 0.0);
  std::vector<double> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = psi.grid.value(i);

  for (std::uint32_t s = 0; s < config.shots; ++s) {
    const double tau_s =
        config.tau + (config.jitter_fraction > 0.0 ? jitter(rng) : 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const complexd a = psi.samples[i] * std::polar(1.0, -e[i] * tau_s / kHbar);
      acc[i] += std::norm(a + sheared_arm.samples[i]);
    }
  }
  const double inv_shots = 1.0 / static_cast<double>(config.shots);
  for (auto& v : acc) v *= inv_shots;

  Interferogram ig;
  ig.grid = psi.grid;
  ig.config = config;
  ig.fringes_unresolvable = config.resolution > kTwoPi * kHbar / config.tau;
  ig.intensity = apply_spectrometer_response(acc, psi.grid, config.resolution);
  return ig;
}

ConstraintReport check_constraints(double sigma_e,
                                   const MeasurementConfig& config) {
  if (!(sigma_e > 0.0))
    throw std::invalid_argument("check_constraints: sigma_e <= 0");
  config.validate();
  ConstraintReport r;
  r.tau_lower = constants::pi * kHbar / sigma_e;
  r.tau_upper = kTwoPi * kHbar / config.resolution;
  r.tau_ok = config.tau > r.tau_lower && config.tau < r.tau_upper;
  r.shear_limit = 2.0 * sigma_e;
  r.shear_ratio = std::abs(config.delta_e) / r.shear_limit;
  r.shear_ok = std::abs(config.delta_e) < r.shear_limit;
  const double x = config.delta_e / (2.0 * sigma_e);
  r.visibility_estimate = std::exp(-x * x);
  r.visibility_borderline = !r.shear_ok;
  return r;
}

}  // namespace fessi
