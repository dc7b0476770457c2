#include "fessi/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fessi/constants.hpp"
#include "fessi/fft.hpp"

namespace fessi {

namespace {
constexpr double kHbar = constants::hbar_ev_fs;
constexpr double kTwoPi = 2.0 * constants::pi;

// compensated (Kahan) trapezoid sum; moment differences sit near the 1e-12
// budget, plain accumulation over 4096 terms does not
double trapezoid(const std::vector<double>& y, double dx) {
  if (y.size() < 2) return 0.0;
  double s = 0.5 * (y.front() + y.back());
  double c = 0.0;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    const double v = y[i] - c;
    const double t = s + v;
    c = (t - s) - v;
    s = t;
  }
  return s * dx;
}
}  // namespace

SpectralPhaseSpec::SpectralPhaseSpec(std::vector<std::pair<int, double>> poly,
                                     std::optional<OscillatoryPhase> oscillatory)
    : poly_(std::move(poly)), oscillatory_(oscillatory) {
  for (std::size_t i = 0; i < poly_.size(); ++i) {
    if (poly_[i].first < 2)
      throw std::invalid_argument(
          "SpectralPhaseSpec: orders 0 and 1 are gauge terms and are rejected");
    for (std::size_t j = i + 1; j < poly_.size(); ++j)
      if (poly_[i].first == poly_[j].first)
        throw std::invalid_argument("SpectralPhaseSpec: duplicate order");
  }
  if (oscillatory_ && oscillatory_->amplitude != 0.0 &&
      !(oscillatory_->period > 0.0))
    throw std::invalid_argument("SpectralPhaseSpec: oscillatory period must be > 0");
}

double SpectralPhaseSpec::operator()(double q) const {
  double phi = 0.0;
  for (const auto& [n, c] : poly_) phi += c * std::pow(q, n);
  if (oscillatory_ && oscillatory_->amplitude != 0.0)
    phi += oscillatory_->amplitude *
           std::sin(kTwoPi * (q - oscillatory_->offset) / oscillatory_->period);
  return phi;
}

double SpectralPhaseSpec::coefficient(int order) const {
  for (const auto& [n, c] : poly_)
    if (n == order) return c;
  return 0.0;
}

double SpectralWavefunction::norm() const {
  double s = 0.0;
  for (const auto& z : samples) s += std::norm(z);
  return s * grid.spacing;
}

std::vector<double> SpectralWavefunction::density() const {
  std::vector<double> d(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) d[i] = std::norm(samples[i]);
  return d;
}

double TemporalWavefunction::norm() const {
  double s = 0.0;
  for (const auto& z : samples) s += std::norm(z);
  return s * grid.spacing;
}

std::vector<double> TemporalWavefunction::intensity() const {
  std::vector<double> d(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) d[i] = std::norm(samples[i]);
  return d;
}

SpectralWavefunction make_gaussian_spectrum(const EnergyGrid& grid,
                                            double sigma_e,
                                            const SpectralPhaseSpec& phase) {
  grid.validate();
  if (!(sigma_e > 0.0))
    throw std::invalid_argument("make_gaussian_spectrum: sigma_e must be > 0");
  if (grid.span() < 8.0 * sigma_e)
    throw std::invalid_argument(
        "make_gaussian_spectrum: grid span must cover >= 8 sigma_E");

  const std::size_t n = grid.count;
  std::vector<complexd> samples(n);
  const double amp0 = std::pow(kTwoPi * sigma_e * sigma_e, -0.25);
  double raw_norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = grid.value(i) - grid.center_energy;
    const double a = amp0 * std::exp(-q * q / (4.0 * sigma_e * sigma_e));
    raw_norm += a * a;
    samples[i] = std::polar(a, phase(q));
  }
  raw_norm *= grid.spacing;
  // the analytic profile integrates to one; missing mass means the lattice
  // clips the tails
  if (std::abs(1.0 - raw_norm) > 1e-6)
    throw std::invalid_argument(
        "make_gaussian_spectrum: grid too narrow, truncated norm deviates by "
        "more than 1e-6");
  const double scale = 1.0 / std::sqrt(raw_norm);
  for (auto& z : samples) z *= scale;
  return SpectralWavefunction{grid, std::move(samples)};
}

TemporalWavefunction to_time_domain(const SpectralWavefunction& psi,
                                    double center_time) {
  psi.grid.validate();
  const std::size_t n = psi.grid.count;
  if (psi.samples.size() != n)
    throw std::invalid_argument("to_time_domain: sample count mismatch");
  TimeGrid tg = conjugate_time_grid(psi.grid, center_time);

  fft::cvec a = psi.samples;
  if (center_time != 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double de_off = psi.grid.value(i) - psi.grid.center_energy;
      a[i] *= std::polar(1.0, -de_off * center_time / kHbar);
    }
  }
  fft::centered_dft_inplace(a, -1);
  const double scale = psi.grid.spacing / std::sqrt(kTwoPi * kHbar);
  TemporalWavefunction out{tg, std::move(a)};
  for (std::size_t j = 0; j < n; ++j)
    out.samples[j] *= scale * std::polar(1.0, -psi.grid.center_energy *
                                                  tg.value(j) / kHbar);
  return out;
}

SpectralWavefunction to_energy_domain(const TemporalWavefunction& psi) {
  psi.grid.validate();
  const std::size_t n = psi.grid.count;
  if (psi.samples.size() != n)
    throw std::invalid_argument("to_energy_domain: sample count mismatch");
  EnergyGrid eg = conjugate_energy_grid(psi.grid);

  fft::cvec a = psi.samples;
  for (std::size_t j = 0; j < n; ++j)
    a[j] *= std::polar(1.0, +eg.center_energy * psi.grid.value(j) / kHbar);
  fft::centered_dft_inplace(a, +1);
  const double scale = psi.grid.spacing / std::sqrt(kTwoPi * kHbar);
  SpectralWavefunction out{eg, std::move(a)};
  if (psi.grid.center_time != 0.0) {
    for (std::size_t i = 0; i < n; ++i) {
      const double de_off = eg.value(i) - eg.center_energy;
      out.samples[i] *= scale * std::polar(1.0, +de_off * psi.grid.center_time / kHbar);
    }
  } else {
    for (auto& z : out.samples) z *= scale;
  }
  return out;
}

IntensityMoments intensity_moments(const TemporalWavefunction& psi) {
  const std::size_t n = psi.grid.count;
  if (psi.samples.size() != n || n < 2)
    throw std::invalid_argument("intensity_moments: invalid input");
  const double dt = psi.grid.spacing;
  std::vector<double> rho = psi.intensity();
  std::vector<double> t1(n), t2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = psi.grid.value(i);
    t1[i] = t * rho[i];
    t2[i] = t * t * rho[i];
  }
  const double n0 = trapezoid(rho, dt);
  if (!(n0 > 0.0))
    throw std::invalid_argument("intensity_moments: zero intensity");
  IntensityMoments m;
  m.mean = trapezoid(t1, dt) / n0;
  // two-pass variance: immune to the mean^2 cancellation for shifted pulses
  for (std::size_t i = 0; i < n; ++i) {
    const double dtau = psi.grid.value(i) - m.mean;
    t2[i] = dtau * dtau * rho[i];
  }
  m.rms = std::sqrt(std::max(0.0, trapezoid(t2, dt) / n0));

  // half-maximum crossings, linearly interpolated
  const double peak = *std::max_element(rho.begin(), rho.end());
  const double half = 0.5 * peak;
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const bool lo = rho[i] < half, hi = rho[i + 1] >= half;
    if (lo == (rho[i + 1] < half)) continue;  // no crossing in this cell
    const double frac = (half - rho[i]) / (rho[i + 1] - rho[i]);
    crossings.push_back(psi.grid.value(i) + frac * dt);
    (void)hi;
  }
  if (crossings.size() >= 2) {
    m.fwhm = crossings.back() - crossings.front();
    m.multimodal = crossings.size() > 2;
  } else {
    // peak at the grid edge or pathologically flat: report the span above half
    m.fwhm = psi.grid.span();
    m.multimodal = false;
  }
  return m;
}

}  // namespace fessi
