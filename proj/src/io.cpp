#include "fessi/io.hpp"

#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fessi::io {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ParsedFile {
  std::map<std::string, std::string> header;
  std::vector<std::vector<double>> rows;
};

ParsedFile parse(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  ParsedFile pf;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto eq = line.find('=');
      if (eq != std::string::npos) {
        std::string key = line.substr(1, eq - 1);
        // trim
        key.erase(0, key.find_first_not_of(" \t"));
        key.erase(key.find_last_not_of(" \t") + 1);
        std::string val = line.substr(eq + 1);
        val.erase(0, val.find_first_not_of(" \t"));
        val.erase(val.find_last_not_of(" \t\r") + 1);
        pf.header[key] = val;
      }
      continue;
    }
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (!row.empty()) pf.rows.push_back(std::move(row));
  }
  return pf;
}

double header_num(const ParsedFile& pf, const std::string& key) {
  auto it = pf.header.find(key);
  if (it == pf.header.end())
    throw std::runtime_error("missing header key " + key);
  return std::stod(it->second);
}

}  // namespace

std::string format_double(double v) { return fmt(v); }

void save_spectral(const SpectralWavefunction& psi,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# domain=energy\n";
  out << "# center=" << fmt(psi.grid.center_energy) << "\n";
  out << "# spacing=" << fmt(psi.grid.spacing) << "\n";
  out << "# count=" << psi.grid.count << "\n";
  for (std::size_t i = 0; i < psi.grid.count; ++i)
    out << fmt(psi.grid.value(i)) << ", " << fmt(psi.samples[i].real()) << ", "
        << fmt(psi.samples[i].imag()) << "\n";
}

SpectralWavefunction load_spectral(const std::filesystem::path& path) {
  ParsedFile pf = parse(path);
  if (pf.header["domain"] != "energy")
    throw std::runtime_error(path.string() + ": not an energy-domain file");
  SpectralWavefunction psi;
  psi.grid.center_energy = header_num(pf, "center");
  psi.grid.spacing = header_num(pf, "spacing");
  psi.grid.count = static_cast<std::size_t>(header_num(pf, "count"));
  if (pf.rows.size() != psi.grid.count)
    throw std::runtime_error(path.string() + ": row count mismatch");
  psi.samples.resize(psi.grid.count);
  for (std::size_t i = 0; i < psi.grid.count; ++i) {
    if (pf.rows[i].size() != 3)
      throw std::runtime_error(path.string() + ": expected 3 columns");
    psi.samples[i] = {pf.rows[i][1], pf.rows[i][2]};
  }
  psi.grid.validate();
  return psi;
}

void save_temporal(const TemporalWavefunction& psi,
                   const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# domain=time\n";
  out << "# center=" << fmt(psi.grid.center_time) << "\n";
  out << "# spacing=" << fmt(psi.grid.spacing) << "\n";
  out << "# count=" << psi.grid.count << "\n";
  out << "# reference_energy=" << fmt(psi.grid.reference_energy) << "\n";
  for (std::size_t i = 0; i < psi.grid.count; ++i)
    out << fmt(psi.grid.value(i)) << ", " << fmt(psi.samples[i].real()) << ", "
        << fmt(psi.samples[i].imag()) << "\n";
}

TemporalWavefunction load_temporal(const std::filesystem::path& path) {
  ParsedFile pf = parse(path);
  if (pf.header["domain"] != "time")
    throw std::runtime_error(path.string() + ": not a time-domain file");
  TemporalWavefunction psi;
  psi.grid.center_time = header_num(pf, "center");
  psi.grid.spacing = header_num(pf, "spacing");
  psi.grid.count = static_cast<std::size_t>(header_num(pf, "count"));
  psi.grid.reference_energy = header_num(pf, "reference_energy");
  if (pf.rows.size() != psi.grid.count)
    throw std::runtime_error(path.string() + ": row count mismatch");
  psi.samples.resize(psi.grid.count);
  for (std::size_t i = 0; i < psi.grid.count; ++i) {
    if (pf.rows[i].size() != 3)
      throw std::runtime_error(path.string() + ": expected 3 columns");
    psi.samples[i] = {pf.rows[i][1], pf.rows[i][2]};
  }
  psi.grid.validate();
  return psi;
}

void save_interferogram(const Interferogram& ig,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# domain=interferogram\n";
  out << "# center=" << fmt(ig.grid.center_energy) << "\n";
  out << "# spacing=" << fmt(ig.grid.spacing) << "\n";
  out << "# count=" << ig.grid.count << "\n";
  out << "# tau=" << fmt(ig.config.tau) << "\n";
  out << "# delta_e=" << fmt(ig.config.delta_e) << "\n";
  out << "# resolution=" << fmt(ig.config.resolution) << "\n";
  out << "# jitter_fraction=" << fmt(ig.config.jitter_fraction) << "\n";
  out << "# shots=" << ig.config.shots << "\n";
  out << "# seed=" << ig.config.seed << "\n";
  out << "# fringes_unresolvable=" << (ig.fringes_unresolvable ? 1 : 0) << "\n";
  for (std::size_t i = 0; i < ig.grid.count; ++i)
    out << fmt(ig.grid.value(i)) << ", " << fmt(ig.intensity[i]) << "\n";
}

Interferogram load_interferogram(const std::filesystem::path& path) {
  ParsedFile pf = parse(path);
  if (pf.header["domain"] != "interferogram")
    throw std::runtime_error(path.string() + ": not an interferogram file");
  Interferogram ig;
  ig.grid.center_energy = header_num(pf, "center");
  ig.grid.spacing = header_num(pf, "spacing");
  ig.grid.count = static_cast<std::size_t>(header_num(pf, "count"));
  ig.config.tau = header_num(pf, "tau");
  ig.config.delta_e = header_num(pf, "delta_e");
  ig.config.resolution = header_num(pf, "resolution");
  ig.config.jitter_fraction = header_num(pf, "jitter_fraction");
  ig.config.shots = static_cast<std::uint32_t>(header_num(pf, "shots"));
  ig.config.seed = static_cast<std::uint64_t>(header_num(pf, "seed"));
  ig.fringes_unresolvable = header_num(pf, "fringes_unresolvable") != 0.0;
  if (pf.rows.size() != ig.grid.count)
    throw std::runtime_error(path.string() + ": row count mismatch");
  ig.intensity.resize(ig.grid.count);
  for (std::size_t i = 0; i < ig.grid.count; ++i) {
    if (pf.rows[i].size() != 2)
      throw std::runtime_error(path.string() + ": expected 2 columns");
    ig.intensity[i] = pf.rows[i][1];
  }
  ig.validate();
  return ig;
}

void save_phase_samples(const PhaseSamples& ps,
                        const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# domain=phase_lattice\n";
  out << "# anchor=" << fmt(ps.anchor) << "\n";
  out << "# delta_e=" << fmt(ps.delta_e) << "\n";
  out << "# count=" << ps.energies.size() << "\n";
  for (std::size_t i = 0; i < ps.energies.size(); ++i)
    out << fmt(ps.energies[i]) << ", " << fmt(ps.values[i]) << "\n";
}

void save_dense_reconstruction(const ReconstructionResult& r,
                               const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# domain=dense_reconstruction\n";
  out << "# center=" << fmt(r.spectral.grid.center_energy) << "\n";
  out << "# spacing=" << fmt(r.spectral.grid.spacing) << "\n";
  out << "# count=" << r.spectral.grid.count << "\n";
  out << "# plane=" << r.plane << "\n";
  for (std::size_t i = 0; i < r.spectral.grid.count; ++i)
    out << fmt(r.spectral.grid.value(i)) << ", " << fmt(r.amplitude[i]) << ", "
        << fmt(r.dense_phase[i]) << ", " << (r.dense_valid[i] ? 1 : 0) << "\n";
}

void save_report(const std::map<std::string, std::string>& kv,
                 const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& [k, v] : kv) out << k << "=" << v << "\n";
}

}  // namespace fessi::io
