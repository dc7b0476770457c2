#pragma once

// Physical constants in the working unit system: energies in eV, times in fs,
// lengths in nm. All modules pull hbar etc. from here; nothing redefines them.
namespace fessi::constants {

inline constexpr double hbar_ev_fs = 0.6582119569;        // eV fs
inline constexpr double hc_ev_nm = 1239.8419843320026;    // eV nm
inline constexpr double c_nm_per_fs = 299.792458;         // nm / fs
inline constexpr double electron_mc2_ev = 510998.95;      // eV

// electron mass in eV fs^2 / nm^2 (m = mc^2 / c^2)
inline constexpr double electron_mass =
    electron_mc2_ev / (c_nm_per_fs * c_nm_per_fs);

inline constexpr double pi = 3.14159265358979323846;

// photon energy of a laser with central wavelength lambda (in micrometres)
inline constexpr double photon_energy_ev(double lambda_um) {
  return hc_ev_nm / (lambda_um * 1000.0);
}

// optical period in fs
inline constexpr double optical_period_fs(double lambda_um) {
  return lambda_um * 1000.0 / c_nm_per_fs;
}

}  // namespace fessi::constants
