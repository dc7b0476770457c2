#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fessi/interferometer.hpp"
#include "fessi/wavefunction.hpp"

namespace fessi {

// a.c. component of the interferogram isolated in the conjugate (pseudo-time)
// domain. The filter is the fourth-order super-Gaussian
//   H(t) = exp(-ln 2 * (2 (t - tau) / tau)^8),
// centred at tau with fwhm tau.
struct AcExtraction {
  std::vector<complexd> filtered;  // pseudo-time samples after H(t - tau)
  EnergyGrid energy_grid;          // grid the interferogram lives on
  double pseudo_dt = 0.0;          // fs
  double filter_center = 0.0;      // = tau
  double filter_fwhm = 0.0;        // = tau
  int filter_order = 4;
  double ac_peak_time = 0.0;       // located a.c. peak (fs)
  double ac_dc_ratio = 0.0;        // |ac peak| / |dc peak|
  double ac_energy_ratio = 0.0;    // sqrt(sum |filtered|^2) / |dc peak|
  bool tau_outside_window = false; // pre-check warning, extraction proceeded
};

// Relative a.c./d.c. peak magnitude below which the fringes are treated as
// unusable ("interference too weak"). Fixed; not a tuning knob.
inline constexpr double kWeakSignalRatio = 0.01;

// Fractional amplitude floor below which extracted phase samples are masked.
inline constexpr double kAmplitudeFloor = 1e-5;

// FFT of I(E) into pseudo-time, multiplied by the super-Gaussian H(t - tau).
// Throws if the a.c. peak cannot be located within +-25% of tau or the
// fringe contrast is below kWeakSignalRatio.
AcExtraction extract_ac(const Interferogram& interferogram, double tau);

// Sampled phase over the energy grid with a validity mask.
struct MaskedPhase {
  EnergyGrid grid;
  std::vector<double> phase;      // rad, unwrapped along E
  std::vector<double> amplitude;  // |IFT(ac)| — the weighting envelope
  std::vector<bool> valid;        // amplitude above kAmplitudeFloor * peak
};

// arg of the inverse transform of the filtered a.c. term, unwrapped outward
// from the amplitude peak:  phi(E) - phi(E - dE_shear) - E tau / hbar.
MaskedPhase phase_difference(const AcExtraction& ac);

// theta(E) = signal - calibration; the calibration run (same tau, zero shear)
// carries the -E tau / hbar ramp and removes it exactly.
MaskedPhase calibrate(const MaskedPhase& signal_phase,
                      const MaskedPhase& calibration_phase);

// Spectral phase on the shear lattice anchor + N * delta_E; value at the
// anchor is fixed to zero.
struct PhaseSamples {
  std::vector<double> energies;  // ascending, spacing delta_E, contains anchor
  std::vector<double> values;    // rad
  double anchor = 0.0;           // eV
  double delta_e = 0.0;          // eV
};

// Cumulative summation of theta over the shear lattice:
//   phi(anchor + N dE) = sum_{n=1..N} theta(anchor + n dE)      N > 0
//                      = 0                                      N = 0
//                      = -sum_{n=N+1..0} theta(anchor + n dE)   N < 0
// theta is interpolated (cubic) onto the lattice; lattice points outside the
// valid support are dropped and the lattice truncated.
PhaseSamples concatenate(const MaskedPhase& theta, double delta_e,
                         double anchor);

struct FidelityResult {
  double value = 0.0;        // F in (0, 1]
  bool degenerate = false;   // reference phase vanished on the support
  double rms_error = 0.0;    // rms of (phi_r - phi_o) on the support, rad
};

// F = sum |phi_o|^2 / (sum |phi_r - phi_o|^2 + sum |phi_o|^2) over the region
// where the amplitude weight is >= 1% of its peak, after removing the
// amplitude^2-weighted best-fit constant + linear component of (phi_r -
// phi_o): both are gauge freedoms.
FidelityResult fidelity(const std::vector<double>& phi_original,
                        const std::vector<double>& phi_reconstructed,
                        const std::vector<double>& amplitude_weights,
                        const std::vector<double>& energies);

struct ReconstructionResult {
  PhaseSamples phase;              // shear-lattice phase, zero at the anchor
  std::vector<double> amplitude;   // |psi(E)| on the fine grid
  std::vector<double> dense_phase; // lattice phase splined to the fine grid
  std::vector<bool> dense_valid;   // fine-grid points inside the lattice span
  SpectralWavefunction spectral;   // sqrt(rho) e^{i phi}, normalised
  TemporalWavefunction temporal;   // reconstructed pulse at the LEM plane
  std::optional<double> fidelity_value;  // only when a reference is supplied
  double rms_phase_error = 0.0;          // idem
  std::string plane = "lem";       // where the reconstruction is anchored
};

// Full pipeline: extract both interferograms, take the argument, subtract the
// calibration, concatenate, spline the lattice phase back onto the fine grid,
// attach the measured single-arm amplitude and Fourier back into time. The
// dense phase is gauge-normalised (weighted constant + linear removed).
// reference_phase, when given, is the ground-truth phase on the fine grid used
// to score the fidelity.
ReconstructionResult reconstruct(
    const Interferogram& signal, const Interferogram& calibration,
    const std::vector<double>& single_arm_spectrum,
    const MeasurementConfig& config,
    const std::vector<double>* reference_phase = nullptr);

}  // namespace fessi
