#include "fessi/lem.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fessi/bessel.hpp"
#include "fessi/constants.hpp"
#include "fessi/fft.hpp"

namespace fessi {

namespace {
constexpr double kHbar = constants::hbar_ev_fs;
constexpr double kTwoPi = 2.0 * constants::pi;
}  // namespace

double LemParams::photon_energy() const {
  return constants::photon_energy_ev(lambda_um);
}

double LemParams::laser_omega() const { return photon_energy() / kHbar; }

double LemParams::optical_period() const {
  return constants::optical_period_fs(lambda_um);
}

double LemParams::velocity() const { return beta * constants::c_nm_per_fs; }

void LemParams::validate() const {
  if (!(lambda_um > 0.0)) throw std::invalid_argument("LemParams: lambda_um <= 0");
  if (!(foil_thickness > 0.0))
    throw std::invalid_argument("LemParams: foil_thickness <= 0");
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("LemParams: beta must lie in (0, 1)");
  const double g = 1.0 / std::sqrt(1.0 - beta * beta);
  if (std::abs(g - gamma) > 1e-12 * g + 1e-4)
    throw std::invalid_argument(
        "LemParams: gamma inconsistent with 1/sqrt(1-beta^2)");
  if (!(kinetic_energy > 0.0))
    throw std::invalid_argument("LemParams: kinetic_energy <= 0");
}

CouplingStrength coupling_from_field(const LemParams& params,
                                     const FieldProfile& profile) {
  params.validate();
  const std::size_t n = profile.z.size();
  if (n == 0 || profile.force.size() != n)
    throw std::invalid_argument("coupling_from_field: empty or ragged profile");
  const double w = params.laser_omega();
  const double v0 = params.velocity();
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double dz = profile.z[i + 1] - profile.z[i];
    const std::complex<double> fa =
        profile.force[i] * std::polar(1.0, -w * profile.z[i] / v0);
    const std::complex<double> fb =
        profile.force[i + 1] * std::polar(1.0, -w * profile.z[i + 1] / v0);
    acc += 0.5 * (fa + fb) * dz;
  }
  // 2|g| e^{i arg} = acc / (hbar omega_L)
  return CouplingStrength{0.5 * acc / params.photon_energy()};
}

FieldProfile uniform_foil_profile(const LemParams& params, double edge_nm,
                                  std::size_t samples) {
  const double L = params.foil_thickness;
  const double lo = -L / 2.0 - 8.0 * edge_nm;
  const double hi = +L / 2.0 + 8.0 * edge_nm;
  FieldProfile p;
  p.z.resize(samples);
  p.force.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double z = lo + (hi - lo) * static_cast<double>(i) /
                              static_cast<double>(samples - 1);
    p.z[i] = z;
    p.force[i] = params.field_peak * 0.5 *
                 (std::erf((z + L / 2.0) / edge_nm) -
                  std::erf((z - L / 2.0) / edge_nm));
  }
  return p;
}

double field_for_coupling(const LemParams& params, double two_g,
                          double edge_nm) {
  LemParams unit = params;
  unit.field_peak = 1.0;
  const double per_unit =
      coupling_from_field(unit, uniform_foil_profile(unit, edge_nm)).two_g_mag();
  if (!(per_unit > 0.0))
    throw std::invalid_argument("field_for_coupling: degenerate profile");
  return two_g / per_unit;
}

int default_max_order(double two_g_mag) {
  const auto jn = bessel::j_array(34, two_g_mag);
  for (int order = 1; order <= 32; ++order) {
    double s = jn[0] * jn[0];
    for (int n = 1; n <= order; ++n) s += 2.0 * jn[n] * jn[n];
    // the completeness rule bounds the dropped weight; the extra tail bound
    // keeps the first-order interference of the dropped orders with the kept
    // ones below the 1e-9 norm budget
    if (s > 1.0 - 1e-12 && std::fabs(jn[order + 1]) < 1e-10) return order;
  }
  return 32;
}

SpectralWavefunction pinem_modulate(const SpectralWavefunction& psi,
                                    const CouplingStrength& g,
                                    double photon_energy_ev, int max_order) {
  psi.grid.validate();
  if (!(photon_energy_ev > 0.0))
    throw std::invalid_argument("pinem_modulate: photon energy must be > 0");
  const double two_g = g.two_g_mag();
  if (max_order < 0) max_order = default_max_order(two_g);
  if (two_g == 0.0) return psi;  // J_n(0) = delta_n0

  const double headroom =
      (static_cast<double>(max_order) + 4.0) * photon_energy_ev;
  if (psi.grid.center_energy - headroom < psi.grid.min() ||
      psi.grid.center_energy + headroom > psi.grid.max())
    throw std::invalid_argument(
        "pinem_modulate: grid span must cover E0 +- (max_order + 4) photon "
        "energies; required half-span " + std::to_string(headroom) + " eV");

  const std::size_t n = psi.grid.count;
  const auto jn = bessel::j_array(max_order, two_g);

  // psi_f(t) = psi(t) * sum_n J_n(2|g|) exp(-i n w_L t): every sideband shift
  // enters as an exact off-lattice translation.
  fft::cvec a = psi.samples;
  fft::centered_dft_inplace(a, -1);  // conjugate domain (unnormalised)
  const double dt = kTwoPi * kHbar / (static_cast<double>(n) * psi.grid.spacing);
  const double w = photon_energy_ev / kHbar;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    std::complex<double> f{jn[0], 0.0};
    for (int m = 1; m <= max_order; ++m) {
      // J_{-m} = (-1)^m J_m
      const double c = std::cos(m * w * t), s = std::sin(m * w * t);
      const double sign = (m % 2 == 0) ? 1.0 : -1.0;
      f += jn[m] * (std::complex<double>{c, -s} +
                    sign * std::complex<double>{c, s});
    }
    a[j] *= f;
  }
  fft::centered_dft_inplace(a, +1);
  SpectralWavefunction out{psi.grid, std::move(a)};
  const double inv_n = 1.0 / static_cast<double>(n);
  for (auto& z : out.samples) z *= inv_n;
  return out;
}

SpectralWavefunction shear(const SpectralWavefunction& psi, double delta_e) {
  psi.grid.validate();
  if (delta_e == 0.0) return psi;
  if (std::abs(delta_e) >= psi.grid.span() / 4.0)
    throw std::invalid_argument(
        "shear: |delta_E| must stay below a quarter of the grid span");
  const std::size_t n = psi.grid.count;
  fft::cvec a = psi.samples;
  fft::centered_dft_inplace(a, -1);
  const double dt = kTwoPi * kHbar / (static_cast<double>(n) * psi.grid.spacing);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    a[j] *= std::polar(1.0 / static_cast<double>(n), -delta_e * t / kHbar);
  }
  fft::centered_dft_inplace(a, +1);
  return SpectralWavefunction{psi.grid, std::move(a)};
}

TdseResult tdse_propagate(const SpectralWavefunction& psi,
                          const LemParams& params, const TdseOptions& options) {
  params.validate();
  psi.grid.validate();
  if (options.steps_per_cycle < 200.0)
    throw std::invalid_argument(
        "tdse_propagate: need at least 200 steps per optical cycle");

  const double v0 = params.velocity();
  const double w = params.laser_omega();
  const double period = params.optical_period();
  const double L = params.foil_thickness;
  const double m3 = params.gamma * params.gamma * params.gamma *
                    constants::electron_mass;

  // packet extent from the spectral width: sigma_z = v0 hbar / (2 sigma_E)
  const SpectralWavefunction* in = &psi;
  double e_mean = 0.0, e_sq = 0.0, wsum = 0.0;
  for (std::size_t i = 0; i < psi.grid.count; ++i) {
    const double rho = std::norm(psi.samples[i]);
    e_mean += rho * psi.grid.value(i);
    e_sq += rho * psi.grid.value(i) * psi.grid.value(i);
    wsum += rho;
  }
  e_mean /= wsum;
  const double sigma_e = std::sqrt(std::max(1e-300, e_sq / wsum - e_mean * e_mean));
  const double sigma_z = v0 * kHbar / (2.0 * sigma_e);

  // co-moving lattice
  const std::size_t nz = options.grid_count;
  const double span_z = 2.0 * options.center_span_sigmas * sigma_z + 8.0 * L;
  const double dz = span_z / static_cast<double>(nz);

  // initial envelope u(z) by direct semi-DFT from the spectral samples:
  //   u(z) = (2 pi hbar v0)^(-1/2) sum dE psi(E) exp(+i (E - E0) z / (hbar v0))
  // (z = -v0 t with the adopted exp(-iEt/hbar) kernel; leading edge at z > 0)
  fft::cvec u(nz);
  {
    const double de = in->grid.spacing;
    const double e0 = in->grid.center_energy;
    for (std::size_t zi = 0; zi < nz; ++zi) {
      const double z =
          (static_cast<double>(zi) - static_cast<double>(nz / 2)) * dz;
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t i = 0; i < in->grid.count; ++i) {
        const double k = (in->grid.value(i) - e0) / (kHbar * v0);
        acc += in->samples[i] * std::polar(1.0, k * z);
      }
      u[zi] = acc * (de / std::sqrt(kTwoPi * kHbar * v0));
    }
  }
  double norm0 = 0.0;
  for (const auto& z : u) norm0 += std::norm(z);
  norm0 *= dz;

  // sweep: foil centre starts pad ahead of the packet and exits behind it
  const double start = options.pad_sigmas * sigma_z + L;
  const double t_total = 2.0 * start / v0;
  const double dt = period / options.steps_per_cycle;
  const std::size_t nsteps = static_cast<std::size_t>(std::ceil(t_total / dt));

  // kinetic phase per half step, FFT ordering
  std::vector<std::complex<double>> kin(nz);
  {
    const double dp = kTwoPi * kHbar / span_z;
    for (std::size_t i = 0; i < nz; ++i) {
      const double pi_ = (i < nz / 2)
                             ? dp * static_cast<double>(i)
                             : dp * (static_cast<double>(i) -
                                     static_cast<double>(nz));
      kin[i] = std::polar(1.0, -(pi_ * pi_ / (2.0 * m3)) * dt / (2.0 * kHbar));
    }
  }

  const double v_amp = v0 * params.field_peak / w;  // e v0 A0 amplitude (eV)
  const double edge = options.edge_nm;

  fftw_plan fwd, bwd;
  {
    auto* ptr = reinterpret_cast<fftw_complex*>(u.data());
    fwd = fftw_plan_dft_1d(static_cast<int>(nz), ptr, ptr, FFTW_FORWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
    bwd = fftw_plan_dft_1d(static_cast<int>(nz), ptr, ptr, FFTW_BACKWARD,
                           FFTW_ESTIMATE | FFTW_UNALIGNED);
  }
  auto* uptr = reinterpret_cast<fftw_complex*>(u.data());
  const double inv_nz = 1.0 / static_cast<double>(nz);

  for (std::size_t step = 0; step < nsteps; ++step) {
    const double tm = (static_cast<double>(step) + 0.5) * dt;
    // half kinetic
    fftw_execute_dft(fwd, uptr, uptr);
    for (std::size_t i = 0; i < nz; ++i) u[i] *= kin[i] * inv_nz;
    fftw_execute_dft(bwd, uptr, uptr);
    // interaction: V(z, t) = + e v0 (F0/omega) sin(w t + phi_L) W(z - z_foil)
    const double amp = v_amp * std::sin(w * tm + params.phase_delay);
    const double zf = start - v0 * tm;
    for (std::size_t i = 0; i < nz; ++i) {
      const double z =
          (static_cast<double>(i) - static_cast<double>(nz / 2)) * dz - zf;
      const double win = 0.5 * (std::erf((z + L / 2.0) / edge) -
                                std::erf((z - L / 2.0) / edge));
      if (win > 1e-14) u[i] *= std::polar(1.0, -amp * win * dt / kHbar);
    }
    // half kinetic
    fftw_execute_dft(fwd, uptr, uptr);
    for (std::size_t i = 0; i < nz; ++i) u[i] *= kin[i] * inv_nz;
    fftw_execute_dft(bwd, uptr, uptr);
  }
  fftw_destroy_plan(fwd);
  fftw_destroy_plan(bwd);

  double norm1 = 0.0;
  for (const auto& z : u) norm1 += std::norm(z);
  norm1 *= dz;

  // back onto the input energy grid by the inverse semi-DFT
  SpectralWavefunction out{psi.grid, std::vector<complexd>(psi.grid.count)};
  {
    const double e0 = psi.grid.center_energy;
    for (std::size_t i = 0; i < psi.grid.count; ++i) {
      const double k = (psi.grid.value(i) - e0) / (kHbar * v0);
      std::complex<double> acc{0.0, 0.0};
      for (std::size_t zi = 0; zi < nz; ++zi) {
        const double z =
            (static_cast<double>(zi) - static_cast<double>(nz / 2)) * dz;
        acc += u[zi] * std::polar(1.0, -k * z);
      }
      out.samples[i] = acc * (dz / std::sqrt(kTwoPi * kHbar * v0));
    }
  }

  TdseResult res;
  res.norm_drift = std::abs(norm1 - norm0);
  res.under_resolved = res.norm_drift > 1e-6;
  res.steps = nsteps;
  res.psi = std::move(out);
  return res;
}

}  // namespace fessi
