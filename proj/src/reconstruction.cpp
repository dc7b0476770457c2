#include "fessi/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fessi/constants.hpp"
#include "fessi/fft.hpp"
#include "fessi/spline.hpp"

namespace fessi {

namespace {

constexpr double kHbar = constants::hbar_ev_fs;
constexpr double kTwoPi = 2.0 * constants::pi;

// pseudo-time transform of a real interferogram:
//   Itil(t) = (2 pi hbar)^(-1/2) sum dE I(E) exp(+i E t / hbar)
// With this kernel the Eq.-8 cross term psi(E) psi*(E - dE) e^{-iE tau/hbar}
// transforms to a peak at t = +tau, where the paper's filter sits.
fft::cvec interferogram_to_pseudotime(const Interferogram& ig) {
  const std::size_t n = ig.grid.count;
  fft::cvec a(n);
  for (std::size_t i = 0; i < n; ++i) a[i] = ig.intensity[i];
  fft::centered_dft_inplace(a, +1);
  const double dt = kTwoPi * kHbar / (static_cast<double>(n) * ig.grid.spacing);
  const double scale = ig.grid.spacing / std::sqrt(kTwoPi * kHbar);
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    a[j] *= scale * std::polar(1.0, +ig.grid.center_energy * t / kHbar);
  }
  return a;
}

// inverse of the above, returning complex samples over the energy grid
fft::cvec pseudotime_to_energy(const fft::cvec& d, const EnergyGrid& grid,
                               double pseudo_dt) {
  const std::size_t n = grid.count;
  fft::cvec a = d;
  for (std::size_t j = 0; j < n; ++j) {
    const double t =
        (static_cast<double>(j) - static_cast<double>(n / 2)) * pseudo_dt;
    a[j] *= std::polar(1.0, -grid.center_energy * t / kHbar);
  }
  fft::centered_dft_inplace(a, -1);
  const double scale = pseudo_dt / std::sqrt(kTwoPi * kHbar);
  for (auto& z : a) z *= scale;
  return a;
}

double wrap_to_pi(double x) {
  x = std::fmod(x + constants::pi, kTwoPi);
  if (x < 0) x += kTwoPi;
  return x - constants::pi;
}

}  // namespace

AcExtraction extract_ac(const Interferogram& ig, double tau) {
  ig.validate();
  if (!(tau > 0.0)) throw std::invalid_argument("extract_ac: tau must be > 0");
  const std::size_t n = ig.grid.count;
  const double dt = kTwoPi * kHbar / (static_cast<double>(n) * ig.grid.spacing);

  fft::cvec pseudo = interferogram_to_pseudotime(ig);

  // d.c. reference: the global peak sits at t = 0 for any physical I(E)
  double dc_peak = 0.0;
  for (const auto& z : pseudo) dc_peak = std::max(dc_peak, std::abs(z));

  // a.c. peak: largest magnitude within +-25% of the nominal tau
  double ac_peak = 0.0, ac_time = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    if (t < 0.75 * tau || t > 1.25 * tau) continue;
    const double m = std::abs(pseudo[j]);
    if (m > ac_peak) {
      ac_peak = m;
      ac_time = t;
    }
  }
  // reject when the located maximum hugs the search boundary: the true peak
  // then lies outside +-25% of tau
  if (ac_peak == 0.0 || ac_time <= 0.75 * tau + dt || ac_time >= 1.25 * tau - dt)
    throw std::invalid_argument(
        "extract_ac: a.c. peak not locatable within 25% of tau");
  const double ratio = ac_peak / dc_peak;
  if (ratio < kWeakSignalRatio)
    throw std::invalid_argument(
        "extract_ac: interference too weak (a.c./d.c. = " +
        std::to_string(ratio) + ")");

  AcExtraction out;
  out.energy_grid = ig.grid;
  out.pseudo_dt = dt;
  out.filter_center = tau;
  out.filter_fwhm = tau;
  out.filter_order = 4;
  out.ac_peak_time = ac_time;
  out.ac_dc_ratio = ratio;
  out.tau_outside_window = ig.fringes_unresolvable;

  out.filtered.resize(n);
  double energy = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double t = (static_cast<double>(j) - static_cast<double>(n / 2)) * dt;
    const double u = 2.0 * (t - tau) / tau;
    const double u2 = u * u;
    const double u8 = u2 * u2 * u2 * u2;
    out.filtered[j] = pseudo[j] * std::exp(-std::log(2.0) * u8);
    energy += std::norm(out.filtered[j]);
  }
  // integrated fringe strength: strictly decreasing under jitter damping,
  // unlike the peak sample which carries sub-bin discretisation noise
  out.ac_energy_ratio = std::sqrt(energy) / dc_peak;
  return out;
}

MaskedPhase phase_difference(const AcExtraction& ac) {
  const std::size_t n = ac.energy_grid.count;
  if (ac.filtered.size() != n)
    throw std::invalid_argument("phase_difference: inconsistent extraction");
  fft::cvec r = pseudotime_to_energy(ac.filtered, ac.energy_grid, ac.pseudo_dt);

  MaskedPhase mp;
  mp.grid = ac.energy_grid;
  mp.phase.resize(n, 0.0);
  mp.amplitude.resize(n, 0.0);
  mp.valid.assign(n, false);

  double peak = 0.0;
  std::size_t ipeak = 0;
  for (std::size_t i = 0; i < n; ++i) {
    mp.amplitude[i] = std::abs(r[i]);
    if (mp.amplitude[i] > peak) {
      peak = mp.amplitude[i];
      ipeak = i;
    }
  }
  const double floor = kAmplitudeFloor * peak;
  for (std::size_t i = 0; i < n; ++i) mp.valid[i] = mp.amplitude[i] >= floor;

  // nearest-branch unwrapping seeded at the amplitude peak
  mp.phase[ipeak] = std::arg(r[ipeak]);
  for (std::size_t i = ipeak + 1; i < n; ++i)
    mp.phase[i] =
        mp.phase[i - 1] + wrap_to_pi(std::arg(r[i]) - mp.phase[i - 1]);
  for (std::size_t i = ipeak; i-- > 0;)
    mp.phase[i] =
        mp.phase[i + 1] + wrap_to_pi(std::arg(r[i]) - mp.phase[i + 1]);
  return mp;
}

MaskedPhase calibrate(const MaskedPhase& signal_phase,
                      const MaskedPhase& calibration_phase) {
  if (!(signal_phase.grid == calibration_phase.grid))
    throw std::invalid_argument("calibrate: phases must share one grid");
  MaskedPhase theta = signal_phase;
  for (std::size_t i = 0; i < theta.phase.size(); ++i) {
    theta.phase[i] -= calibration_phase.phase[i];
    theta.valid[i] = theta.valid[i] && calibration_phase.valid[i];
    theta.amplitude[i] = std::min(theta.amplitude[i],
                                  calibration_phase.amplitude[i]);
  }
  return theta;
}

PhaseSamples concatenate(const MaskedPhase& theta, double delta_e,
                         double anchor) {
  if (!(delta_e > 0.0))
    throw std::invalid_argument("concatenate: delta_e must be > 0");
  // contiguous valid block around the anchor
  std::vector<double> xs, ys;
  xs.reserve(theta.grid.count);
  for (std::size_t i = 0; i < theta.grid.count; ++i) {
    if (!theta.valid[i]) continue;
    xs.push_back(theta.grid.value(i));
    ys.push_back(theta.phase[i]);
  }
  if (xs.size() < 2)
    throw std::invalid_argument("concatenate: no valid theta support");
  CubicSpline spline(xs, ys);
  const double lo = xs.front(), hi = xs.back();
  auto inside = [&](double e) { return e >= lo && e <= hi; };

  // Eq.-S6 sums: forward from the anchor, then backward
  std::vector<double> epos, vpos, eneg, vneg;
  double acc = 0.0;
  for (int n = 1;; ++n) {
    const double e = anchor + n * delta_e;
    if (!inside(e)) break;
    acc += spline(e);
    epos.push_back(e);
    vpos.push_back(acc);
  }
  acc = 0.0;
  for (int n = -1;; --n) {
    const double e = anchor + n * delta_e;
    // theta(anchor + (n+1) dE) must be available for the backward sum
    if (!inside(anchor + (n + 1) * delta_e) || !inside(e)) break;
    acc -= spline(anchor + (n + 1) * delta_e);
    eneg.push_back(e);
    vneg.push_back(acc);
  }

  PhaseSamples out;
  out.anchor = anchor;
  out.delta_e = delta_e;
  out.energies.reserve(eneg.size() + 1 + epos.size());
  out.values.reserve(eneg.size() + 1 + epos.size());
  for (std::size_t i = eneg.size(); i-- > 0;) {
    out.energies.push_back(eneg[i]);
    out.values.push_back(vneg[i]);
  }
  out.energies.push_back(anchor);
  out.values.push_back(0.0);
  for (std::size_t i = 0; i < epos.size(); ++i) {
    out.energies.push_back(epos[i]);
    out.values.push_back(vpos[i]);
  }
  if (out.energies.size() < 2)
    throw std::invalid_argument(
        "concatenate: lattice degenerate, shear too large for the support");
  return out;
}

namespace {

// weighted least-squares constant + linear fit of d over q
std::pair<double, double> fit_const_linear(const std::vector<double>& q,
                                           const std::vector<double>& d,
                                           const std::vector<double>& w) {
  double s0 = 0, s1 = 0, s2 = 0, t0 = 0, t1 = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    s0 += w[i];
    s1 += w[i] * q[i];
    s2 += w[i] * q[i] * q[i];
    t0 += w[i] * d[i];
    t1 += w[i] * d[i] * q[i];
  }
  const double det = s0 * s2 - s1 * s1;
  if (det == 0.0) return {t0 / std::max(s0, 1e-300), 0.0};
  return {(t0 * s2 - t1 * s1) / det, (s0 * t1 - s1 * t0) / det};
}

}  // namespace

FidelityResult fidelity(const std::vector<double>& phi_original,
                        const std::vector<double>& phi_reconstructed,
                        const std::vector<double>& amplitude_weights,
                        const std::vector<double>& energies) {
  const std::size_t n = phi_original.size();
  if (phi_reconstructed.size() != n || amplitude_weights.size() != n ||
      energies.size() != n)
    throw std::invalid_argument("fidelity: size mismatch");
  double apeak = 0.0;
  for (double a : amplitude_weights) apeak = std::max(apeak, a);
  if (!(apeak > 0.0)) throw std::invalid_argument("fidelity: zero amplitude");

  std::vector<double> q, d, w, po;
  double qc = 0.0, wc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (amplitude_weights[i] >= 0.01 * apeak) {
      qc += amplitude_weights[i] * amplitude_weights[i] * energies[i];
      wc += amplitude_weights[i] * amplitude_weights[i];
    }
  qc /= wc;  // weighted centroid keeps the fit well conditioned
  for (std::size_t i = 0; i < n; ++i) {
    if (amplitude_weights[i] < 0.01 * apeak) continue;
    q.push_back(energies[i] - qc);
    d.push_back(phi_reconstructed[i] - phi_original[i]);
    w.push_back(amplitude_weights[i] * amplitude_weights[i]);
    po.push_back(phi_original[i]);
  }
  if (q.size() < 3) throw std::invalid_argument("fidelity: support too small");

  const auto [c0, c1] = fit_const_linear(q, d, w);
  double sum_ref = 0.0, sum_err = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double r = d[i] - c0 - c1 * q[i];
    sum_err += r * r;
    sum_ref += po[i] * po[i];
  }
  FidelityResult res;
  res.rms_error = std::sqrt(sum_err / static_cast<double>(q.size()));
  if (sum_ref <= 1e-24 * static_cast<double>(q.size())) {
    res.degenerate = true;
    res.value = sum_err == 0.0 ? 1.0 : 0.0;
    return res;
  }
  res.value = sum_ref / (sum_err + sum_ref);
  return res;
}

ReconstructionResult reconstruct(const Interferogram& signal,
                                 const Interferogram& calibration,
                                 const std::vector<double>& single_arm_spectrum,
                                 const MeasurementConfig& config,
                                 const std::vector<double>* reference_phase) {
  if (!(signal.grid == calibration.grid))
    throw std::invalid_argument("reconstruct: grids differ");
  const std::size_t n = signal.grid.count;
  if (single_arm_spectrum.size() != n)
    throw std::invalid_argument("reconstruct: single-arm spectrum size mismatch");

  const AcExtraction ac_sig = extract_ac(signal, config.tau);
  const AcExtraction ac_cal = extract_ac(calibration, config.tau);
  const MaskedPhase ph_sig = phase_difference(ac_sig);
  const MaskedPhase ph_cal = phase_difference(ac_cal);
  const MaskedPhase theta = calibrate(ph_sig, ph_cal);

  ReconstructionResult out;
  out.phase = concatenate(theta, config.delta_e, signal.grid.center_energy);

  // dense phase on the fine grid; amplitude from the measured spectrum
  CubicSpline dense_spline(out.phase.energies, out.phase.values);
  out.dense_phase.resize(n, 0.0);
  out.dense_valid.assign(n, false);
  out.amplitude.resize(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    out.amplitude[i] = std::sqrt(std::max(0.0, single_arm_spectrum[i]));
    const double e = signal.grid.value(i);
    if (e >= out.phase.energies.front() && e <= out.phase.energies.back()) {
      out.dense_phase[i] = dense_spline(e);
      out.dense_valid[i] = true;
    }
  }
  // gauge normal form: remove the amplitude^2-weighted constant + linear part
  {
    std::vector<double> q, d, w;
    for (std::size_t i = 0; i < n; ++i) {
      if (!out.dense_valid[i]) continue;
      q.push_back(signal.grid.value(i) - signal.grid.center_energy);
      d.push_back(out.dense_phase[i]);
      w.push_back(out.amplitude[i] * out.amplitude[i]);
    }
    if (q.size() >= 3) {
      const auto [c0, c1] = fit_const_linear(q, d, w);
      for (std::size_t i = 0; i < n; ++i)
        if (out.dense_valid[i])
          out.dense_phase[i] -=
              c0 + c1 * (signal.grid.value(i) - signal.grid.center_energy);
    }
  }

  out.spectral.grid = signal.grid;
  out.spectral.samples.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.spectral.samples[i] =
        std::polar(out.amplitude[i], out.dense_valid[i] ? out.dense_phase[i] : 0.0);
  const double nrm = out.spectral.norm();
  if (nrm > 0.0) {
    const double s = 1.0 / std::sqrt(nrm);
    for (auto& z : out.spectral.samples) z *= s;
    for (std::size_t i = 0; i < n; ++i)
      out.amplitude[i] = std::abs(out.spectral.samples[i]);
  }
  out.temporal = to_time_domain(out.spectral);

  if (reference_phase) {
    const FidelityResult f =
        fidelity(*reference_phase, out.dense_phase, out.amplitude,
                 signal.grid.values());
    out.fidelity_value = f.degenerate ? std::optional<double>{} : f.value;
    out.rms_phase_error = f.rms_error;
  }
  return out;
}

}  // namespace fessi
