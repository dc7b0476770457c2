#include "fessi/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fessi/constants.hpp"
#include "fessi/io.hpp"

namespace fessi {

namespace {

constexpr double kHbar = constants::hbar_ev_fs;
using nlohmann::json;

[[noreturn]] void config_error(const std::string& origin,
                               const std::string& path,
                               const std::string& what) {
  throw std::invalid_argument(origin + ": " + path + ": " + what);
}

void require_keys(const json& j, const std::string& origin,
                  const std::string& path,
                  std::initializer_list<const char*> allowed) {
  if (!j.is_object()) config_error(origin, path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) config_error(origin, path, "unknown key '" + it.key() + "'");
  }
}

double num(const json& j, const std::string& origin, const std::string& path) {
  if (!j.is_number()) config_error(origin, path, "expected a number");
  return j.get<double>();
}

ScenarioConfig parse_config_json(const json& j, const std::string& origin) {
  ScenarioConfig cfg;
  require_keys(j, origin, "$",
               {"name", "pulse", "lem", "measurement", "seed", "sweep",
                "diagram"});
  if (j.contains("name")) {
    if (!j["name"].is_string()) config_error(origin, "$.name", "expected a string");
    cfg.name = j["name"].get<std::string>();
  }

  if (j.contains("pulse")) {
    const json& p = j["pulse"];
    require_keys(p, origin, "$.pulse",
                 {"sigma_e_ev", "center_energy_ev", "grid_count",
                  "grid_span_sigmas", "phase"});
    if (p.contains("sigma_e_ev"))
      cfg.pulse.sigma_e = num(p["sigma_e_ev"], origin, "$.pulse.sigma_e_ev");
    if (p.contains("center_energy_ev"))
      cfg.pulse.center_energy =
          num(p["center_energy_ev"], origin, "$.pulse.center_energy_ev");
    if (p.contains("grid_count")) {
      if (!p["grid_count"].is_number_unsigned())
        config_error(origin, "$.pulse.grid_count", "expected a positive integer");
      cfg.pulse.grid_count = p["grid_count"].get<std::size_t>();
    }
    if (p.contains("grid_span_sigmas"))
      cfg.pulse.grid_span_sigmas =
          num(p["grid_span_sigmas"], origin, "$.pulse.grid_span_sigmas");
    if (p.contains("phase")) {
      const json& ph = p["phase"];
      require_keys(ph, origin, "$.pulse.phase", {"poly", "oscillatory"});
      std::vector<std::pair<int, double>> poly;
      if (ph.contains("poly")) {
        if (!ph["poly"].is_array())
          config_error(origin, "$.pulse.phase.poly",
                       "expected [[order, coeff], ...]");
        for (const auto& term : ph["poly"]) {
          if (!term.is_array() || term.size() != 2)
            config_error(origin, "$.pulse.phase.poly",
                         "each term must be [order, coeff]");
          poly.emplace_back(term[0].get<int>(), term[1].get<double>());
        }
      }
      std::optional<OscillatoryPhase> osc;
      if (ph.contains("oscillatory")) {
        const json& o = ph["oscillatory"];
        require_keys(o, origin, "$.pulse.phase.oscillatory",
                     {"amplitude_rad", "period_ev", "offset_ev"});
        OscillatoryPhase op;
        if (o.contains("amplitude_rad"))
          op.amplitude = num(o["amplitude_rad"], origin,
                             "$.pulse.phase.oscillatory.amplitude_rad");
        if (o.contains("period_ev"))
          op.period =
              num(o["period_ev"], origin, "$.pulse.phase.oscillatory.period_ev");
        if (o.contains("offset_ev"))
          op.offset =
              num(o["offset_ev"], origin, "$.pulse.phase.oscillatory.offset_ev");
        osc = op;
      }
      try {
        cfg.pulse.phase = SpectralPhaseSpec(std::move(poly), osc);
      } catch (const std::exception& e) {
        config_error(origin, "$.pulse.phase", e.what());
      }
    }
  }

  if (j.contains("lem")) {
    const json& l = j["lem"];
    require_keys(l, origin, "$.lem",
                 {"mode", "delta_e_ev", "lambda_um", "foil_thickness_nm",
                  "phase_delay_rad", "kinetic_energy_ev", "beta"});
    if (l.contains("mode")) {
      const std::string m = l["mode"].get<std::string>();
      if (m == "ideal-shear")
        cfg.lem.mode = LemMode::ideal_shear;
      else if (m == "pinem")
        cfg.lem.mode = LemMode::pinem;
      else
        config_error(origin, "$.lem.mode", "must be 'ideal-shear' or 'pinem'");
    }
    if (l.contains("delta_e_ev"))
      cfg.measurement.delta_e = num(l["delta_e_ev"], origin, "$.lem.delta_e_ev");
    if (l.contains("lambda_um"))
      cfg.lem.params.lambda_um = num(l["lambda_um"], origin, "$.lem.lambda_um");
    if (l.contains("foil_thickness_nm"))
      cfg.lem.params.foil_thickness =
          num(l["foil_thickness_nm"], origin, "$.lem.foil_thickness_nm");
    if (l.contains("phase_delay_rad"))
      cfg.lem.params.phase_delay =
          num(l["phase_delay_rad"], origin, "$.lem.phase_delay_rad");
    if (l.contains("kinetic_energy_ev"))
      cfg.lem.params.kinetic_energy =
          num(l["kinetic_energy_ev"], origin, "$.lem.kinetic_energy_ev");
    if (l.contains("beta"))
      cfg.lem.params.beta = num(l["beta"], origin, "$.lem.beta");
    cfg.lem.params.gamma =
        1.0 / std::sqrt(1.0 - cfg.lem.params.beta * cfg.lem.params.beta);
  }

  if (j.contains("measurement")) {
    const json& m = j["measurement"];
    require_keys(m, origin, "$.measurement",
                 {"tau_fs", "resolution_ev", "jitter_fraction", "shots"});
    if (m.contains("tau_fs"))
      cfg.measurement.tau = num(m["tau_fs"], origin, "$.measurement.tau_fs");
    if (m.contains("resolution_ev"))
      cfg.measurement.resolution =
          num(m["resolution_ev"], origin, "$.measurement.resolution_ev");
    if (m.contains("jitter_fraction"))
      cfg.measurement.jitter_fraction =
          num(m["jitter_fraction"], origin, "$.measurement.jitter_fraction");
    if (m.contains("shots")) {
      if (!m["shots"].is_number_unsigned())
        config_error(origin, "$.measurement.shots", "expected a positive integer");
      cfg.measurement.shots = m["shots"].get<std::uint32_t>();
    }
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned())
      config_error(origin, "$.seed", "expected a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }

  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    require_keys(s, origin, "$.sweep", {"parameter", "values"});
    SweepSpec sp;
    if (!s.contains("parameter") || !s["parameter"].is_string())
      config_error(origin, "$.sweep.parameter", "required string");
    sp.parameter = s["parameter"].get<std::string>();
    if (!s.contains("values") || !s["values"].is_array() || s["values"].empty())
      config_error(origin, "$.sweep.values", "required non-empty array");
    for (const auto& v : s["values"]) sp.values.push_back(v.get<double>());
    cfg.sweep = sp;
  }

  if (j.contains("diagram")) {
    const json& d = j["diagram"];
    require_keys(d, origin, "$.diagram",
                 {"order", "sigma_e_min", "sigma_e_max", "sigma_e_count",
                  "coeff_min", "coeff_max", "coeff_count", "lambda_um"});
    DiagramSpec ds;
    if (d.contains("order")) {
      const int o = d["order"].get<int>();
      if (o == 2)
        ds.order = PhaseOrder::second;
      else if (o == 3)
        ds.order = PhaseOrder::third;
      else
        config_error(origin, "$.diagram.order", "must be 2 or 3");
    }
    if (d.contains("sigma_e_min"))
      ds.sigma_e_min = num(d["sigma_e_min"], origin, "$.diagram.sigma_e_min");
    if (d.contains("sigma_e_max"))
      ds.sigma_e_max = num(d["sigma_e_max"], origin, "$.diagram.sigma_e_max");
    if (d.contains("sigma_e_count"))
      ds.sigma_e_count = d["sigma_e_count"].get<std::size_t>();
    if (d.contains("coeff_min"))
      ds.coeff_min = num(d["coeff_min"], origin, "$.diagram.coeff_min");
    if (d.contains("coeff_max"))
      ds.coeff_max = num(d["coeff_max"], origin, "$.diagram.coeff_max");
    if (d.contains("coeff_count"))
      ds.coeff_count = d["coeff_count"].get<std::size_t>();
    if (d.contains("lambda_um"))
      ds.lambda_um = num(d["lambda_um"], origin, "$.diagram.lambda_um");
    cfg.diagram = ds;
  }
  return cfg;
}

}  // namespace

ScenarioConfig parse_config_text(const std::string& text,
                                 const std::string& origin) {
  json j;
  try {
    j = json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(origin + ": " + e.what());
  }
  return parse_config_json(j, origin);
}

ScenarioConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), path.string());
}

namespace {

ScenarioConfig base_fig3() {
  ScenarioConfig c;
  c.name = "fig3";
  c.pulse.sigma_e = 0.425;
  c.pulse.phase = SpectralPhaseSpec{{{2, 0.34}, {3, 1.05}}};
  c.measurement.tau = 30.0;
  c.measurement.delta_e = 0.1;
  c.measurement.resolution = 0.010;
  c.measurement.jitter_fraction = 1e-5;
  c.measurement.shots = 1000;
  c.seed = 20240001;
  return c;
}

std::map<std::string, ScenarioConfig> build_presets() {
  std::map<std::string, ScenarioConfig> m;

  m["fig3"] = base_fig3();

  {
    ScenarioConfig c = base_fig3();
    c.name = "fig3-pulse";
    m["fig3-pulse"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "transform-limited";
    c.pulse.phase = SpectralPhaseSpec{};
    c.measurement.jitter_fraction = 0.0;
    c.measurement.shots = 1;
    m["transform-limited"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s2";
    c.measurement.jitter_fraction = 7e-5;
    m["fig-s2"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s4a";
    c.pulse.phase = SpectralPhaseSpec{{{2, 1.35}}};
    m["fig-s4a"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s4b";
    c.pulse.phase = SpectralPhaseSpec{{{3, 1.40}}};
    m["fig-s4b"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s3-osc-small";
    c.pulse.phase = SpectralPhaseSpec{{{2, 0.34}, {3, 1.05}},
                                      OscillatoryPhase{0.3, 0.5, 0.0}};
    m["fig-s3-osc-small"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s3-osc-large";
    c.pulse.phase = SpectralPhaseSpec{{{2, 0.34}, {3, 1.05}},
                                      OscillatoryPhase{3.0, 0.3, 0.0}};
    m["fig-s3-osc-large"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig-s6-atto";
    c.pulse.sigma_e = 4.25;
    c.pulse.phase = SpectralPhaseSpec{{{2, 1.35e-2}, {3, 2.6e-3}}};
    c.measurement.tau = 5.0;
    c.measurement.delta_e = 1.0;
    m["fig-s6-atto"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "fig3-pinem";
    c.lem.mode = LemMode::pinem;
    m["fig3-pinem"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "sweep-tau";
    c.measurement.shots = 200;
    c.sweep = SweepSpec{"tau_fs", {2, 3, 5, 10, 30, 100, 200, 300, 400, 450, 500}};
    m["sweep-tau"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "sweep-shear";
    c.measurement.jitter_fraction = 3e-3;
    c.measurement.shots = 200;
    c.sweep = SweepSpec{"delta_e_ev",
                        {0.005, 0.017, 0.0425, 0.085, 0.2, 0.4, 0.85, 1.2}};
    m["sweep-shear"] = c;
  }
  {
    ScenarioConfig c = base_fig3();
    c.name = "sweep-jitter";
    c.sweep = SweepSpec{"jitter_fraction",
                        {0, 1e-5, 7e-5, 3e-4, 1e-3, 3e-3, 1e-2, 3e-2}};
    m["sweep-jitter"] = c;
  }
  {
    ScenarioConfig c;
    c.name = "fig-s5a";
    c.diagram = DiagramSpec{PhaseOrder::second, 0.005, 0.5, 121, 0.0, 200.0,
                            121, 10.33};
    m["fig-s5a"] = c;
  }
  {
    ScenarioConfig c;
    c.name = "fig-s5b";
    c.diagram = DiagramSpec{PhaseOrder::third, 0.005, 0.5, 121, 0.0, 1000.0,
                            121, 10.33};
    m["fig-s5b"] = c;
  }
  return m;
}

const std::map<std::string, ScenarioConfig>& presets() {
  static const std::map<std::string, ScenarioConfig> m = build_presets();
  return m;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : presets()) v.push_back(k);
    return v;
  }();
  return names;
}

ScenarioConfig preset(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end())
    throw std::invalid_argument("unknown preset '" + name + "'");
  return it->second;
}

ScenarioRun run_scenario(const ScenarioConfig& config) {
  ScenarioRun run;
  run.config = config;

  const EnergyGrid grid =
      default_energy_grid(config.pulse.sigma_e, config.pulse.center_energy,
                          config.pulse.grid_count, config.pulse.grid_span_sigmas);
  run.original = make_gaussian_spectrum(grid, config.pulse.sigma_e,
                                        config.pulse.phase);
  run.original_temporal = to_time_domain(run.original);

  // sheared arm
  SpectralWavefunction arm;
  if (config.lem.mode == LemMode::ideal_shear) {
    arm = shear(run.original, config.measurement.delta_e);
  } else {
    LemParams params = config.lem.params;
    const double two_g =
        config.measurement.delta_e / params.photon_energy();
    params.field_peak = field_for_coupling(params, two_g);
    const CouplingStrength g{std::complex<double>{two_g / 2.0, 0.0}};
    arm = pinem_modulate(run.original, g, params.photon_energy());
  }

  MeasurementConfig mc = config.measurement;
  mc.seed = config.seed;
  run.signal = measure(run.original, arm, mc);

  MeasurementConfig cal = mc;
  cal.delta_e = 0.0;
  cal.seed = config.seed + 1;  // an independent acquisition
  run.calibration = measure(run.original, run.original, cal);

  // single-arm reference spectrum through the same spectrometer response
  std::vector<double> rho = run.original.density();
  rho = apply_spectrometer_response(rho, grid, mc.resolution);

  std::vector<double> truth(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    truth[i] = config.pulse.phase(grid.value(i) - grid.center_energy);

  run.reconstruction = reconstruct(run.signal, run.calibration, rho, mc, &truth);
  run.constraints = check_constraints(config.pulse.sigma_e, mc);

  {
    const FidelityResult f =
        fidelity(truth, run.reconstruction.dense_phase,
                 run.reconstruction.amplitude, grid.values());
    run.fidelity_degenerate = f.degenerate;
    run.fidelity_value = f.degenerate ? 0.0 : f.value;
    run.rms_phase_error = f.rms_error;
  }
  {
    const AcExtraction ac = extract_ac(run.signal, mc.tau);
    run.ac_dc_ratio = ac.ac_dc_ratio;
    run.ac_energy_ratio = ac.ac_energy_ratio;
  }

  // centred temporal overlay: shift the reconstruction onto the original's
  // intensity centroid, compare pointwise against the peak intensity
  {
    const IntensityMoments mo = intensity_moments(run.original_temporal);
    const IntensityMoments mr = intensity_moments(run.reconstruction.temporal);
    const double shift = mo.mean - mr.mean;
    SpectralWavefunction shifted = run.reconstruction.spectral;
    for (std::size_t i = 0; i < grid.count; ++i)
      shifted.samples[i] *= std::polar(1.0, +grid.value(i) * shift / kHbar);
    const TemporalWavefunction rec_t = to_time_domain(shifted);
    double peak = 0.0, dev = 0.0;
    const auto io_ = run.original_temporal.intensity();
    const auto ir_ = rec_t.intensity();
    for (std::size_t i = 0; i < io_.size(); ++i) peak = std::max(peak, io_[i]);
    for (std::size_t i = 0; i < io_.size(); ++i)
      dev = std::max(dev, std::abs(ir_[i] - io_[i]));
    run.temporal_max_deviation = dev / peak;
  }
  return run;
}

std::size_t worker_thread_cap() {
  if (const char* env = std::getenv("FESSI_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<SweepPoint> run_sweep(const ScenarioConfig& config) {
  if (!config.sweep) throw std::invalid_argument("run_sweep: no sweep axis");
  const SweepSpec& spec = *config.sweep;
  if (spec.values.empty())
    throw std::invalid_argument("run_sweep: empty sweep axis");
  if (spec.parameter != "tau_fs" && spec.parameter != "delta_e_ev" &&
      spec.parameter != "jitter_fraction" && spec.parameter != "shots")
    throw std::invalid_argument("run_sweep: unknown parameter '" +
                                spec.parameter + "'");

  auto apply = [&](double v) {
    ScenarioConfig c = config;
    c.sweep.reset();
    if (spec.parameter == "tau_fs")
      c.measurement.tau = v;
    else if (spec.parameter == "delta_e_ev")
      c.measurement.delta_e = v;
    else if (spec.parameter == "jitter_fraction")
      c.measurement.jitter_fraction = v;
    else if (spec.parameter == "shots")
      c.measurement.shots = static_cast<std::uint32_t>(v);
    else
      throw std::invalid_argument("run_sweep: unknown parameter '" +
                                  spec.parameter + "'");
    return c;
  };

  std::vector<SweepPoint> out(spec.values.size());
  const std::size_t cap = std::max<std::size_t>(1, worker_thread_cap());
  std::size_t next = 0;
  while (next < spec.values.size()) {
    const std::size_t batch = std::min(cap, spec.values.size() - next);
    std::vector<std::future<SweepPoint>> futs;
    futs.reserve(batch);
    for (std::size_t k = 0; k < batch; ++k) {
      const double v = spec.values[next + k];
      futs.emplace_back(std::async(std::launch::async, [&, v] {
        SweepPoint p;
        p.value = v;
        try {
          const ScenarioRun r = run_scenario(apply(v));
          p.fidelity_value = r.fidelity_value;
          p.rms_phase_error = r.rms_phase_error;
          p.ac_dc_ratio = r.ac_dc_ratio;
        } catch (const std::exception& e) {
          p.failed = true;
          p.failure = e.what();
        }
        return p;
      }));
    }
    for (std::size_t k = 0; k < batch; ++k) out[next + k] = futs[k].get();
    next += batch;
  }
  return out;
}

void write_run_outputs(const ScenarioRun& run,
                       const std::filesystem::path& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  io::save_spectral(run.original, outdir / "original_spectral.txt");
  io::save_temporal(run.original_temporal, outdir / "original_temporal.txt");
  io::save_interferogram(run.signal, outdir / "interferogram_signal.txt");
  io::save_interferogram(run.calibration,
                         outdir / "interferogram_calibration.txt");
  io::save_phase_samples(run.reconstruction.phase,
                         outdir / "reconstructed_phase_lattice.txt");
  io::save_dense_reconstruction(run.reconstruction,
                                outdir / "reconstructed_dense.txt");
  io::save_temporal(run.reconstruction.temporal,
                    outdir / "reconstructed_temporal.txt");

  std::map<std::string, std::string> kv;
  kv["scenario"] = run.config.name;
  kv["fidelity"] = io::format_double(run.fidelity_value);
  kv["fidelity_degenerate"] = run.fidelity_degenerate ? "1" : "0";
  kv["rms_phase_error_rad"] = io::format_double(run.rms_phase_error);
  kv["ac_dc_ratio"] = io::format_double(run.ac_dc_ratio);
  kv["temporal_max_deviation"] =
      io::format_double(run.temporal_max_deviation);
  kv["tau_fs"] = io::format_double(run.config.measurement.tau);
  kv["tau_lower_fs"] = io::format_double(run.constraints.tau_lower);
  kv["tau_upper_fs"] = io::format_double(run.constraints.tau_upper);
  kv["tau_ok"] = run.constraints.tau_ok ? "1" : "0";
  kv["delta_e_ev"] = io::format_double(run.config.measurement.delta_e);
  kv["shear_limit_ev"] = io::format_double(run.constraints.shear_limit);
  kv["shear_ratio"] = io::format_double(run.constraints.shear_ratio);
  kv["shear_ok"] = run.constraints.shear_ok ? "1" : "0";
  kv["visibility_estimate"] =
      io::format_double(run.constraints.visibility_estimate);
  kv["plane"] = run.reconstruction.plane;
  kv["seed"] = std::to_string(run.config.seed);
  io::save_report(kv, outdir / "summary.txt");
}

void write_sweep_outputs(const ScenarioConfig& config,
                         const std::vector<SweepPoint>& points,
                         const std::filesystem::path& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  std::ofstream out(outdir / "sweep.txt");
  if (!out) throw std::runtime_error("cannot write sweep.txt");
  out << "# scenario=" << config.name << "\n";
  out << "# parameter=" << (config.sweep ? config.sweep->parameter : "") << "\n";
  out << "# columns=value, fidelity, rms_phase_error_rad, ac_dc_ratio, status\n";
  for (const auto& p : points) {
    out << io::format_double(p.value) << ", "
        << io::format_double(p.fidelity_value) << ", "
        << io::format_double(p.rms_phase_error) << ", "
        << io::format_double(p.ac_dc_ratio) << ", "
        << (p.failed ? "failed" : "ok") << "\n";
  }
}

void write_diagram_outputs(const DiagramSpec& spec,
                           const std::filesystem::path& outdir) {
  namespace fs = std::filesystem;
  fs::create_directories(outdir);
  const ParameterDiagram d = parameter_diagram(
      spec.sigma_e_min, spec.sigma_e_max, spec.sigma_e_count, spec.coeff_min,
      spec.coeff_max, spec.coeff_count, spec.order, spec.lambda_um);

  std::ofstream g(outdir / "diagram.txt");
  if (!g) throw std::runtime_error("cannot write diagram.txt");
  const char* cname = spec.order == PhaseOrder::second ? "phi2" : "phi3";
  g << "# columns=sigma_e_ev, " << cname << ", sigma_t_fs\n";
  g << "# contour_level_fs=" << io::format_double(d.contour_level) << "\n";
  for (std::size_t j = 0; j < d.coeff.size(); ++j)
    for (std::size_t i = 0; i < d.sigma_e.size(); ++i)
      g << io::format_double(d.sigma_e[i]) << ", "
        << io::format_double(d.coeff[j]) << ", "
        << io::format_double(d.sigma_t[j * d.sigma_e.size() + i]) << "\n";

  std::ofstream c(outdir / "contour.txt");
  if (!c) throw std::runtime_error("cannot write contour.txt");
  c << "# columns=sigma_e_a, coeff_a, sigma_e_b, coeff_b\n";
  c << "# level_fs=" << io::format_double(d.contour_level) << "\n";
  for (const auto& s : d.contour_segments)
    c << io::format_double(s[0]) << ", " << io::format_double(s[1]) << ", "
      << io::format_double(s[2]) << ", " << io::format_double(s[3]) << "\n";
}

}  // namespace fessi
