// fessi: simulate and reconstruct electron spectral-shearing interferometry
// scenarios from presets or config files, sweep parameters, and emit the
// pulse-duration parameter diagrams. All outputs are plain-text columnar data.
#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <string>

#include "fessi/io.hpp"
#include "fessi/scenario.hpp"
#include "fessi/wavefunction.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitConstraint = 3;
constexpr int kExitReconstruction = 4;

struct CommonOpts {
  std::string config_path;
  std::string preset_name;
  std::string out_dir = "fessi-out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool strict = false;
};

fessi::ScenarioConfig load_scenario(const CommonOpts& o) {
  if (o.config_path.empty() == o.preset_name.empty())
    throw std::invalid_argument("give exactly one of --config or --preset");
  fessi::ScenarioConfig cfg = o.config_path.empty()
                                  ? fessi::preset(o.preset_name)
                                  : fessi::parse_config_file(o.config_path);
  if (o.seed_set) cfg.seed = o.seed;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path, "scenario config file (json)");
  cmd->add_option("--preset", o.preset_name, "built-in scenario preset");
  cmd->add_option("--out", o.out_dir, "output directory");
  cmd->add_option("--seed", o.seed, "override the scenario seed")
      ->each([&](const std::string&) { o.seed_set = true; });
  cmd->add_flag("--strict", o.strict,
                "fail (exit 3) when the operating-point constraints are violated");
}

int do_synth(const CommonOpts& o) {
  const fessi::ScenarioConfig cfg = load_scenario(o);
  const fessi::EnergyGrid grid = fessi::default_energy_grid(
      cfg.pulse.sigma_e, cfg.pulse.center_energy, cfg.pulse.grid_count,
      cfg.pulse.grid_span_sigmas);
  const fessi::SpectralWavefunction psi =
      fessi::make_gaussian_spectrum(grid, cfg.pulse.sigma_e, cfg.pulse.phase);
  const fessi::TemporalWavefunction psit = fessi::to_time_domain(psi);
  std::filesystem::create_directories(o.out_dir);
  fessi::io::save_spectral(psi, std::filesystem::path(o.out_dir) /
                                    "original_spectral.txt");
  fessi::io::save_temporal(psit, std::filesystem::path(o.out_dir) /
                                     "original_temporal.txt");
  const fessi::IntensityMoments m = fessi::intensity_moments(psit);
  std::map<std::string, std::string> kv;
  kv["scenario"] = cfg.name;
  kv["temporal_mean_fs"] = fessi::io::format_double(m.mean);
  kv["temporal_rms_fs"] = fessi::io::format_double(m.rms);
  kv["temporal_fwhm_fs"] = fessi::io::format_double(m.fwhm);
  kv["multimodal"] = m.multimodal ? "1" : "0";
  fessi::io::save_report(kv, std::filesystem::path(o.out_dir) / "synth.txt");
  std::printf("synth %s: rms %.4f fs, fwhm %.4f fs -> %s\n", cfg.name.c_str(),
              m.rms, m.fwhm, o.out_dir.c_str());
  return kExitOk;
}

int do_run(const CommonOpts& o) {
  const fessi::ScenarioConfig cfg = load_scenario(o);
  fessi::ScenarioRun run;
  try {
    run = fessi::run_scenario(cfg);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "reconstruction failed: %s\n", e.what());
    return kExitReconstruction;
  }
  if (!run.constraints.all_ok()) {
    std::fprintf(stderr,
                 "warning: operating point outside the constraint window "
                 "(tau in (%.3f, %.3f) fs, shear limit %.3f eV)\n",
                 run.constraints.tau_lower, run.constraints.tau_upper,
                 run.constraints.shear_limit);
    if (o.strict) return kExitConstraint;
  }
  fessi::write_run_outputs(run, o.out_dir);
  std::printf("run %s: F = %.6f, rms phase error %.5f rad, ac/dc %.4f -> %s\n",
              cfg.name.c_str(), run.fidelity_value, run.rms_phase_error,
              run.ac_dc_ratio, o.out_dir.c_str());
  return kExitOk;
}

int do_sweep(const CommonOpts& o) {
  const fessi::ScenarioConfig cfg = load_scenario(o);
  if (!cfg.sweep) {
    std::fprintf(stderr, "config has no sweep axis\n");
    return kExitConfig;
  }
  const std::vector<fessi::SweepPoint> points = fessi::run_sweep(cfg);
  fessi::write_sweep_outputs(cfg, points, o.out_dir);
  for (const auto& p : points)
    std::printf("%s = %-12g F = %.6f  %s\n", cfg.sweep->parameter.c_str(),
                p.value, p.fidelity_value, p.failed ? p.failure.c_str() : "");
  return kExitOk;
}

int do_diagram(const CommonOpts& o) {
  const fessi::ScenarioConfig cfg = load_scenario(o);
  if (!cfg.diagram) {
    std::fprintf(stderr, "config has no diagram block\n");
    return kExitConfig;
  }
  fessi::write_diagram_outputs(*cfg.diagram, o.out_dir);
  std::printf("diagram %s -> %s\n", cfg.name.c_str(), o.out_dir.c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free-electron spectral shearing interferometry toolkit"};
  app.require_subcommand(1);

  CommonOpts synth_o, run_o, sweep_o, diagram_o;
  CLI::App* synth = app.add_subcommand("synth", "write the configured pulse");
  add_common(synth, synth_o);
  CLI::App* run = app.add_subcommand(
      "run", "full chain: synth, shear, interfere, measure, reconstruct");
  add_common(run, run_o);
  CLI::App* sweep =
      app.add_subcommand("sweep", "tabulate fidelity against one parameter");
  add_common(sweep, sweep_o);
  CLI::App* diagram =
      app.add_subcommand("diagram", "pulse-duration parameter diagrams");
  add_common(diagram, diagram_o);
  CLI::App* presets = app.add_subcommand("presets", "list built-in presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets->parsed()) {
      for (const auto& n : fessi::preset_names()) std::printf("%s\n", n.c_str());
      return kExitOk;
    }
    if (synth->parsed()) return do_synth(synth_o);
    if (run->parsed()) return do_run(run_o);
    if (sweep->parsed()) return do_sweep(sweep_o);
    if (diagram->parsed()) return do_diagram(diagram_o);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitReconstruction;
  }
  return kExitOk;
}
