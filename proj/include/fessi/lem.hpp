#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "fessi/wavefunction.hpp"

namespace fessi {

// Laser / interaction description of the light-electron modulator.
// gamma and beta must satisfy gamma = 1/sqrt(1-beta^2) to 1e-12; the photon
// energy is always computed from lambda_um, never stored separately.
struct LemParams {
  double lambda_um = 10.33;     // laser central wavelength (micrometres)
  double field_peak = 0.0;      // peak acceleration gradient e*F (eV / nm)
  double foil_thickness = 50.0; // nm
  double phase_delay = 0.0;     // rad (phi_L)
  double kinetic_energy = 1e4;  // eV (epsilon_0)
  double beta = 0.1949;         // v0 / c
  double gamma = 1.0195;        // Lorentz factor

  double photon_energy() const;   // hbar omega_L (eV)
  double laser_omega() const;     // omega_L (rad / fs)
  double optical_period() const;  // T (fs)
  double velocity() const;        // v0 (nm / fs)

  void validate() const;
};

struct CouplingStrength {
  std::complex<double> g{0.0, 0.0};
  double two_g_mag() const { return 2.0 * std::abs(g); }
};

// Sampled acceleration-gradient profile e*F(z) across the foil, z in nm.
struct FieldProfile {
  std::vector<double> z;      // nm, ascending, spanning [-L/2, L/2]
  std::vector<double> force;  // eV / nm
};

// 2|g| = (1/ hbar omega_L) | integral F(z) exp(-i omega_L z / v0) dz |
// evaluated by trapezoid quadrature over the sampled profile.
CouplingStrength coupling_from_field(const LemParams& params,
                                     const FieldProfile& profile);

// Uniform field of strength params.field_peak over a foil with smooth
// (erf) edges of width edge_nm; used by the split-step propagator and by the
// calibration helpers so both sides integrate the same profile.
FieldProfile uniform_foil_profile(const LemParams& params,
                                  double edge_nm = 5.0,
                                  std::size_t samples = 4001);

// Peak gradient that realises a requested 2|g| for the uniform foil profile.
double field_for_coupling(const LemParams& params, double two_g,
                          double edge_nm = 5.0);

// Smallest max_order with sum_{|n|<=order} J_n(2|g|)^2 > 1 - 1e-12, capped at 32.
int default_max_order(double two_g_mag);

// PINEM sideband modulation: psi_f(E) = sum_n J_n(2|g|) psi(E - n hbar w_L),
// realised as one conjugate-domain multiplication by the truncated
// Jacobi-Anger factor (each shifted copy enters with full Fourier-shift
// interpolation). Requires grid headroom of (max_order + 4) photon energies.
SpectralWavefunction pinem_modulate(const SpectralWavefunction& psi,
                                    const CouplingStrength& g,
                                    double photon_energy_ev,
                                    int max_order = -1);

// Exact spectral translation psi(E - delta_E) via the Fourier-shift theorem.
// delta_E must stay below a quarter of the grid span.
SpectralWavefunction shear(const SpectralWavefunction& psi, double delta_e);

// --- first-principles split-step propagation -------------------------------

struct TdseOptions {
  std::size_t grid_count = 2048;     // co-moving spatial samples
  double steps_per_cycle = 1000.0;   // >= 200 per optical cycle
  double pad_sigmas = 6.0;           // start distance of the foil, in sigma_z
  double edge_nm = 5.0;              // foil edge smoothing
  double center_span_sigmas = 16.0;  // spatial window half-width factor
};

struct TdseResult {
  SpectralWavefunction psi;      // resampled back onto the input energy grid
  double norm_drift = 0.0;       // |norm - 1| after propagation
  bool under_resolved = false;   // norm drift above 1e-6; result still returned
  std::size_t steps = 0;
};

// Split-step integration of the co-moving envelope equation
//   i hbar du/dt = [ (p - p0)^2 / (2 gamma^3 m) + V(z, t) ] u,
//   V(z, t) = -e v0 A(t) W(z - z_foil(t)),  A(t) = -(F0/omega_L) sin(w_L t + phi_L)
// with the kinetic phase applied in momentum space and the interaction phase
// in position space (Strang splitting). The foil window sweeps through the
// packet at -v0, which is the drift term of the lab-frame dispersion in
// co-moving coordinates. The input spectrum is resampled onto the internal
// lattice by direct semi-DFT and the result is mapped back the same way.
TdseResult tdse_propagate(const SpectralWavefunction& psi,
                          const LemParams& params,
                          const TdseOptions& options = {});

}  // namespace fessi
