#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fessi/io.hpp"
#include "fessi/lem.hpp"
#include "fessi/scenario.hpp"

using namespace fessi;
namespace fs = std::filesystem;

namespace {
fs::path tmpdir() {
  const fs::path p = fs::temp_directory_path() / "fessi-io-tests";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

TEST_CASE("wavefunction files round-trip bit exactly") {
  const auto psi =
      make_gaussian_spectrum(default_energy_grid(0.425, 0.0, 256), 0.425,
                             SpectralPhaseSpec{{{2, 0.34}, {3, 1.05}}});
  const fs::path f = tmpdir() / "psi.txt";
  io::save_spectral(psi, f);
  const auto back = io::load_spectral(f);
  REQUIRE(back.grid == psi.grid);
  for (std::size_t i = 0; i < psi.grid.count; ++i)
    CHECK(back.samples[i] == psi.samples[i]);  // exact doubles

  // re-serialising the loaded object reproduces the file byte for byte
  const fs::path f2 = tmpdir() / "psi2.txt";
  io::save_spectral(back, f2);
  CHECK(slurp(f) == slurp(f2));

  const auto psit = to_time_domain(psi);
  const fs::path ft = tmpdir() / "psit.txt";
  io::save_temporal(psit, ft);
  const auto backt = io::load_temporal(ft);
  REQUIRE(backt.grid == psit.grid);
  for (std::size_t i = 0; i < psit.grid.count; ++i)
    CHECK(backt.samples[i] == psit.samples[i]);
}

TEST_CASE("interferogram files carry the config and round-trip") {
  const auto psi = make_gaussian_spectrum(default_energy_grid(0.425, 0.0, 256),
                                          0.425);
  MeasurementConfig mc;
  mc.tau = 30.0;
  mc.delta_e = 0.1;
  mc.resolution = 0.01;
  mc.jitter_fraction = 1e-5;
  mc.shots = 16;
  mc.seed = 42;
  const Interferogram ig = measure(psi, shear(psi, 0.1), mc);
  const fs::path f = tmpdir() / "ig.txt";
  io::save_interferogram(ig, f);
  const Interferogram back = io::load_interferogram(f);
  REQUIRE(back.grid == ig.grid);
  CHECK(back.config.tau == ig.config.tau);
  CHECK(back.config.delta_e == ig.config.delta_e);
  CHECK(back.config.jitter_fraction == ig.config.jitter_fraction);
  CHECK(back.config.shots == ig.config.shots);
  CHECK(back.config.seed == ig.config.seed);
  for (std::size_t i = 0; i < ig.grid.count; ++i)
    CHECK(back.intensity[i] == ig.intensity[i]);
}

TEST_CASE("config parser: comments allowed, unknown keys rejected") {
  const std::string good = R"({
    // comment lines are fine
    "name": "custom",
    "pulse": {"sigma_e_ev": 0.3, "phase": {"poly": [[2, 1.0]]}},
    "measurement": {"tau_fs": 25.0, "shots": 10},
    "seed": 5
  })";
  const ScenarioConfig cfg = parse_config_text(good);
  CHECK(cfg.pulse.sigma_e == 0.3);
  CHECK(cfg.measurement.tau == 25.0);
  CHECK(cfg.measurement.shots == 10);
  CHECK(cfg.seed == 5);

  CHECK_THROWS_WITH_AS(
      parse_config_text(R"({"pulse": {"sigma_eV": 0.3}})"),
      doctest::Contains("unknown key 'sigma_eV'"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text(R"({"measurement": {"tau_fs": "thirty"}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text(R"({"pulse": {"phase": {"poly": [[1, 0.5]]}}})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_config_text(R"({"sweep": {"parameter": "tau_fs", "values": []}})"),
                  std::invalid_argument);
}

TEST_CASE("presets encode the published figure parameters") {
  {
    const ScenarioConfig c = preset("fig3");
    CHECK(c.pulse.sigma_e == 0.425);
    CHECK(c.pulse.phase.coefficient(2) == 0.34);
    CHECK(c.pulse.phase.coefficient(3) == 1.05);
    CHECK(c.measurement.tau == 30.0);
    CHECK(c.measurement.delta_e == 0.1);
    CHECK(c.measurement.resolution == 0.010);
    CHECK(c.measurement.jitter_fraction == 1e-5);
    CHECK(c.measurement.shots == 1000);
  }
  {
    const ScenarioConfig c = preset("fig-s2");
    CHECK(c.measurement.jitter_fraction == 7e-5);
  }
  {
    const ScenarioConfig c = preset("fig-s4a");
    CHECK(c.pulse.phase.coefficient(2) == 1.35);
    CHECK(c.pulse.phase.coefficient(3) == 0.0);
  }
  {
    const ScenarioConfig c = preset("fig-s4b");
    CHECK(c.pulse.phase.coefficient(3) == 1.40);
  }
  {
    const ScenarioConfig c = preset("fig-s6-atto");
    CHECK(c.pulse.sigma_e == 4.25);  // 2 sigma_E = 8.5 eV
    CHECK(c.pulse.phase.coefficient(2) == 1.35e-2);
    CHECK(c.pulse.phase.coefficient(3) == 2.6e-3);
    CHECK(c.measurement.delta_e == 1.0);
    CHECK(c.measurement.tau == 5.0);
  }
  {
    const ScenarioConfig c = preset("transform-limited");
    CHECK(c.pulse.phase.poly().empty());
  }
  CHECK_THROWS_AS(preset("no-such"), std::invalid_argument);
  CHECK(preset_names().size() >= 14);
}

TEST_CASE("scenario runs are deterministic: identical bytes for equal seeds") {
  ScenarioConfig cfg = preset("fig3");
  cfg.pulse.grid_count = 1024;  // keep the test quick
  cfg.measurement.shots = 40;
  const ScenarioRun r1 = run_scenario(cfg);
  const ScenarioRun r2 = run_scenario(cfg);
  const fs::path d1 = tmpdir() / "run1", d2 = tmpdir() / "run2";
  write_run_outputs(r1, d1);
  write_run_outputs(r2, d2);
  for (const char* name :
       {"original_spectral.txt", "interferogram_signal.txt",
        "reconstructed_dense.txt", "reconstructed_phase_lattice.txt",
        "summary.txt"})
    CHECK(slurp(d1 / name) == slurp(d2 / name));

  ScenarioConfig other = cfg;
  other.seed += 1;
  const ScenarioRun r3 = run_scenario(other);
  const fs::path d3 = tmpdir() / "run3";
  write_run_outputs(r3, d3);
  CHECK(slurp(d1 / "interferogram_signal.txt") !=
        slurp(d3 / "interferogram_signal.txt"));
}

TEST_CASE("sweep rejects an empty axis and reports failures in order") {
  ScenarioConfig cfg = preset("fig3");
  cfg.pulse.grid_count = 1024;
  cfg.measurement.shots = 8;
  cfg.sweep = SweepSpec{"tau_fs", {}};
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);

  cfg.sweep = SweepSpec{"tau_fs", {30.0, 2000.0}};  // second point unusable
  const auto pts = run_sweep(cfg);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0].value == 30.0);
  CHECK_FALSE(pts[0].failed);
  CHECK(pts[0].fidelity_value > 0.99);
  CHECK(pts[1].failed);  // pseudo-time window cannot hold tau = 2000 fs

  cfg.sweep = SweepSpec{"voltage", {1.0}};
  CHECK_THROWS_AS(run_sweep(cfg), std::invalid_argument);
}

TEST_CASE("pinem oracle regression: stored spectrum and fft round trip") {
  // regenerate the committed oracle scenario and compare sample by sample
  const fs::path oracle = fs::path(FESSI_TEST_DATA_DIR) / "pinem_oracle.txt";
  REQUIRE(fs::exists(oracle));
  const SpectralWavefunction want = io::load_spectral(oracle);
  const auto psi = make_gaussian_spectrum(want.grid, 0.425);
  const auto got = pinem_modulate(psi, CouplingStrength{{0.8333 / 2.0, 0.0}},
                                  0.12002342539515998);
  REQUIRE(got.grid == want.grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < got.grid.count; ++i)
    worst = std::max(worst, std::abs(got.samples[i] - want.samples[i]));
  CHECK(worst < 1e-12);

  // and the modulated spectrum survives the transform pair
  const auto back = to_energy_domain(to_time_domain(got));
  worst = 0.0;
  for (std::size_t i = 0; i < got.grid.count; ++i)
    worst = std::max(worst, std::abs(back.samples[i] - got.samples[i]));
  CHECK(worst < 1e-10);
}
