#include "fessi/pulse_analysis.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "fessi/constants.hpp"

namespace fessi {

namespace {
constexpr double kHbar = constants::hbar_ev_fs;
}

DurationModel DurationModel::from_sigma_e(double sigma_e, double phi2,
                                          double phi3, double lambda_um) {
  if (!(sigma_e > 0.0))
    throw std::invalid_argument("DurationModel: sigma_e must be > 0");
  return DurationModel{kHbar / (2.0 * sigma_e), phi2, phi3,
                       constants::optical_period_fs(lambda_um)};
}

void DurationModel::validate() const {
  if (!(sigma_t0 > 0.0))
    throw std::invalid_argument("DurationModel: sigma_t0 must be > 0");
  if (!(optical_period > 0.0))
    throw std::invalid_argument("DurationModel: optical_period must be > 0");
}

double duration(const DurationModel& m) {
  m.validate();
  const double chirp = kHbar * kHbar * m.phi2 / (2.0 * m.sigma_t0);
  const double cube =
      kHbar * kHbar * kHbar * m.phi3 / (4.0 * m.sigma_t0 * m.sigma_t0 * m.sigma_t0);
  return m.sigma_t0 * std::sqrt(1.0 + (chirp / m.sigma_t0) * (chirp / m.sigma_t0) +
                                0.5 * cube * cube);
}

LocalityReport locality_check(const DurationModel& m) {
  LocalityReport r;
  r.sigma_t = duration(m);
  r.quarter_period = m.optical_period / 4.0;
  r.margin = r.quarter_period - r.sigma_t;
  r.pass = r.sigma_t < r.quarter_period;
  const double phi2_t = std::fabs(m.phi2) * kHbar * kHbar;  // fs^2
  r.intrinsic_ok = m.sigma_t0 < r.quarter_period;
  r.chirp_term_ok = phi2_t < m.sigma_t0 * m.optical_period / 2.0;
  r.chirp_abs_ok = phi2_t < m.optical_period * m.optical_period / 64.0;
  return r;
}

ParameterDiagram parameter_diagram(double sigma_e_min, double sigma_e_max,
                                   std::size_t sigma_e_count, double coeff_min,
                                   double coeff_max, std::size_t coeff_count,
                                   PhaseOrder order, double lambda_um) {
  if (!(sigma_e_min > 0.0 && sigma_e_max > sigma_e_min))
    throw std::invalid_argument("parameter_diagram: bad sigma_e range");
  if (sigma_e_count < 1 || coeff_count < 1)
    throw std::invalid_argument("parameter_diagram: empty axis");

  ParameterDiagram d;
  d.contour_level = constants::optical_period_fs(lambda_um) / 4.0;
  d.sigma_e.resize(sigma_e_count);
  d.coeff.resize(coeff_count);
  for (std::size_t i = 0; i < sigma_e_count; ++i)
    d.sigma_e[i] =
        sigma_e_count == 1
            ? sigma_e_min
            : sigma_e_min + (sigma_e_max - sigma_e_min) *
                                static_cast<double>(i) /
                                static_cast<double>(sigma_e_count - 1);
  for (std::size_t j = 0; j < coeff_count; ++j)
    d.coeff[j] = coeff_count == 1
                     ? coeff_min
                     : coeff_min + (coeff_max - coeff_min) *
                                       static_cast<double>(j) /
                                       static_cast<double>(coeff_count - 1);

  d.sigma_t.resize(sigma_e_count * coeff_count);
  for (std::size_t j = 0; j < coeff_count; ++j)
    for (std::size_t i = 0; i < sigma_e_count; ++i) {
      const double phi2 = order == PhaseOrder::second ? d.coeff[j] : 0.0;
      const double phi3 = order == PhaseOrder::third ? d.coeff[j] : 0.0;
      d.sigma_t[j * sigma_e_count + i] =
          duration(DurationModel::from_sigma_e(d.sigma_e[i], phi2, phi3,
                                               lambda_um));
    }

  // marching squares at sigma_t = T/4
  if (sigma_e_count >= 2 && coeff_count >= 2) {
    const double lvl = d.contour_level;
    auto val = [&](std::size_t i, std::size_t j) {
      return d.sigma_t[j * sigma_e_count + i];
    };
    auto lerp = [&](double a, double b, double va, double vb) {
      return a + (lvl - va) / (vb - va) * (b - a);
    };
    for (std::size_t j = 0; j + 1 < coeff_count; ++j) {
      for (std::size_t i = 0; i + 1 < sigma_e_count; ++i) {
        const double v00 = val(i, j), v10 = val(i + 1, j);
        const double v01 = val(i, j + 1), v11 = val(i + 1, j + 1);
        std::vector<std::array<double, 2>> pts;
        if ((v00 < lvl) != (v10 < lvl))
          pts.push_back({lerp(d.sigma_e[i], d.sigma_e[i + 1], v00, v10),
                         d.coeff[j]});
        if ((v01 < lvl) != (v11 < lvl))
          pts.push_back({lerp(d.sigma_e[i], d.sigma_e[i + 1], v01, v11),
                         d.coeff[j + 1]});
        if ((v00 < lvl) != (v01 < lvl))
          pts.push_back({d.sigma_e[i],
                         lerp(d.coeff[j], d.coeff[j + 1], v00, v01)});
        if ((v10 < lvl) != (v11 < lvl))
          pts.push_back({d.sigma_e[i + 1],
                         lerp(d.coeff[j], d.coeff[j + 1], v10, v11)});
        if (pts.size() >= 2)
          d.contour_segments.push_back(
              {pts[0][0], pts[0][1], pts[1][0], pts[1][1]});
      }
    }
  }
  return d;
}

}  // namespace fessi
