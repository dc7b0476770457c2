#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "fessi/interferometer.hpp"
#include "fessi/reconstruction.hpp"
#include "fessi/wavefunction.hpp"

// Columnar text formats. Headers are "# key=value" lines; numeric fields are
// printed with 17 significant digits so doubles round-trip bit exactly.
//
//   wavefunction:  rows "x, re, im"    (x = E in eV or t in fs)
//   interferogram: rows "E_eV, intensity" with the measurement config echoed
//   phase lattice: rows "E_eV, phase_rad"
namespace fessi::io {

std::string format_double(double v);  // %.17g

void save_spectral(const SpectralWavefunction& psi,
                   const std::filesystem::path& path);
SpectralWavefunction load_spectral(const std::filesystem::path& path);

void save_temporal(const TemporalWavefunction& psi,
                   const std::filesystem::path& path);
TemporalWavefunction load_temporal(const std::filesystem::path& path);

void save_interferogram(const Interferogram& ig,
                        const std::filesystem::path& path);
Interferogram load_interferogram(const std::filesystem::path& path);

void save_phase_samples(const PhaseSamples& ps,
                        const std::filesystem::path& path);

// dense reconstruction output: rows "E_eV, amplitude, phase_rad, valid"
void save_dense_reconstruction(const ReconstructionResult& r,
                               const std::filesystem::path& path);

// line-delimited key=value report
void save_report(const std::map<std::string, std::string>& kv,
                 const std::filesystem::path& path);

}  // namespace fessi::io
