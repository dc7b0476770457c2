#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fessi/interferometer.hpp"
#include "fessi/lem.hpp"
#include "fessi/pulse_analysis.hpp"
#include "fessi/reconstruction.hpp"
#include "fessi/wavefunction.hpp"

namespace fessi {

struct PulseConfig {
  double sigma_e = 0.425;        // eV
  double center_energy = 0.0;    // eV
  std::size_t grid_count = 4096;
  double grid_span_sigmas = 16.0;
  SpectralPhaseSpec phase;
};

enum class LemMode { ideal_shear, pinem };

struct LemConfig {
  LemMode mode = LemMode::ideal_shear;
  LemParams params;  // used in pinem mode; lambda also sets the photon energy
};

struct SweepSpec {
  std::string parameter;  // tau_fs | delta_e_ev | jitter_fraction | shots
  std::vector<double> values;
};

struct DiagramSpec {
  PhaseOrder order = PhaseOrder::second;
  double sigma_e_min = 0.005, sigma_e_max = 0.5;
  std::size_t sigma_e_count = 121;
  double coeff_min = 0.0, coeff_max = 200.0;
  std::size_t coeff_count = 121;
  double lambda_um = 10.33;
};

struct ScenarioConfig {
  std::string name = "custom";
  PulseConfig pulse;
  LemConfig lem;
  MeasurementConfig measurement;
  std::uint64_t seed = 12345;
  std::optional<SweepSpec> sweep;
  std::optional<DiagramSpec> diagram;
};

// Strict parser: unknown keys anywhere are an error (json with comments).
ScenarioConfig parse_config_file(const std::filesystem::path& path);
ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin = "<config>");

const std::vector<std::string>& preset_names();
ScenarioConfig preset(const std::string& name);

struct ScenarioRun {
  ScenarioConfig config;
  SpectralWavefunction original;
  TemporalWavefunction original_temporal;
  Interferogram signal;
  Interferogram calibration;
  ReconstructionResult reconstruction;
  ConstraintReport constraints;
  double fidelity_value = 0.0;      // 0 when degenerate (see flag)
  bool fidelity_degenerate = false;
  double rms_phase_error = 0.0;     // rad
  double ac_dc_ratio = 0.0;         // signal-arm fringe contrast (peak ratio)
  double ac_energy_ratio = 0.0;     // integrated fringe strength
  double temporal_max_deviation = 0.0;  // centred intensity overlay, / peak
};

// synth -> LEM (ideal shear or PINEM) -> delay/interfere/measure ->
// reconstruct, with the fidelity scored against the configured true phase.
// The calibration acquisition uses seed + 1.
ScenarioRun run_scenario(const ScenarioConfig& config);

struct SweepPoint {
  double value = 0.0;
  bool failed = false;         // reconstruction error path taken
  std::string failure;         // message when failed
  double fidelity_value = 0.0;
  double rms_phase_error = 0.0;
  double ac_dc_ratio = 0.0;
};

// Evaluates the scenario across the sweep axis; points run in parallel
// (bounded by FESSI_THREADS) and are reported in axis order.
std::vector<SweepPoint> run_sweep(const ScenarioConfig& config);

// Output helpers used by the CLI; all files deterministic for a fixed seed.
void write_run_outputs(const ScenarioRun& run,
                       const std::filesystem::path& outdir);
void write_sweep_outputs(const ScenarioConfig& config,
                         const std::vector<SweepPoint>& points,
                         const std::filesystem::path& outdir);
void write_diagram_outputs(const DiagramSpec& spec,
                           const std::filesystem::path& outdir);

std::size_t worker_thread_cap();  // FESSI_THREADS, default hardware concurrency

}  // namespace fessi
