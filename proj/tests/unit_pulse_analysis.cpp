#include <doctest.h>

#include <cmath>
#include <random>

#include "fessi/constants.hpp"
#include "fessi/pulse_analysis.hpp"
#include "fessi/wavefunction.hpp"

using namespace fessi;

namespace {
constexpr double kHbar = constants::hbar_ev_fs;

// independent numerical oracle: synthesize the pulse and take the rms of
// |psi(t)|^2 (Taylor coefficients convert to polynomial ones as c_n = phi_n/n!)
double numeric_rms(double sigma_e, double phi2, double phi3,
                   std::size_t n = 2048) {
  const auto psi = make_gaussian_spectrum(
      default_energy_grid(sigma_e, 0.0, n), sigma_e,
      SpectralPhaseSpec{{{2, phi2 / 2.0}, {3, phi3 / 6.0}}});
  return intensity_moments(to_time_domain(psi)).rms;
}
}  // namespace

TEST_CASE("duration: transform-limited floor and monotone broadening") {
  const DurationModel tl = DurationModel::from_sigma_e(0.425, 0.0, 0.0);
  CHECK(duration(tl) == doctest::Approx(tl.sigma_t0).epsilon(1e-15));
  double prev = 0.0;
  for (double phi2 : {0.0, 0.5, 1.0, 2.0, 4.0}) {
    const double st =
        duration(DurationModel::from_sigma_e(0.425, phi2, 0.0));
    CHECK(st >= prev);
    prev = st;
  }
}

TEST_CASE("duration vs the numerical rms oracle (pure phi2, pure phi3)") {
  {
    const DurationModel m = DurationModel::from_sigma_e(0.425, 1.35, 0.0);
    CHECK(duration(m) ==
          doctest::Approx(numeric_rms(0.425, 1.35, 0.0)).epsilon(0.01));
  }
  {
    const DurationModel m = DurationModel::from_sigma_e(0.425, 0.0, 8.4);
    CHECK(duration(m) ==
          doctest::Approx(numeric_rms(0.425, 0.0, 8.4)).epsilon(0.02));
  }
}

TEST_CASE("duration reduces to the pure-chirp law at phi3 = 0") {
  std::mt19937_64 rng(5150);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double sigma_e = 0.05 * std::pow(10.0, u(rng));
    const double sigma_t0 = kHbar / (2.0 * sigma_e);
    const double phi2 = 5.0 * u(rng) * 2.0 * sigma_t0 / (kHbar * kHbar);
    const double s12 =
        duration(DurationModel::from_sigma_e(sigma_e, phi2, 0.0));
    const double chirp = kHbar * kHbar * phi2 / (2.0 * sigma_t0);
    const double s10 = std::sqrt(sigma_t0 * sigma_t0 + chirp * chirp);
    CHECK(std::abs(s12 - s10) / s10 < 1e-12);
  }
}

TEST_CASE("duration never shrinks below sigma_t0") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double sigma_e = 0.05 * std::pow(10.0, u(rng));
    const double sigma_t0 = kHbar / (2.0 * sigma_e);
    const DurationModel m = DurationModel::from_sigma_e(
        sigma_e, 3.0 * u(rng) * 2.0 * sigma_t0 / (kHbar * kHbar),
        3.0 * u(rng) * 4.0 * std::sqrt(2.0) * sigma_t0 * sigma_t0 * sigma_t0 /
            (kHbar * kHbar * kHbar));
    CHECK(duration(m) >= m.sigma_t0);
  }
}

TEST_CASE("locality criterion at the published operating point") {
  const double quarter = constants::optical_period_fs(10.33) / 4.0;
  CHECK(quarter == doctest::Approx(8.61).epsilon(2e-3));

  const LocalityReport ok =
      locality_check(DurationModel::from_sigma_e(0.425, 0.0, 0.0));
  CHECK(ok.pass);
  CHECK(ok.sigma_t == doctest::Approx(0.7744).epsilon(1e-3));
  CHECK(ok.margin > 7.0);
  CHECK(ok.intrinsic_ok);

  // chirp pushed to a 10 fs broadening term must fail T/4 = 8.61 fs
  const double sigma_t0 = kHbar / (2.0 * 0.425);
  const double phi2 = 10.0 * 2.0 * sigma_t0 / (kHbar * kHbar);
  const LocalityReport bad =
      locality_check(DurationModel::from_sigma_e(0.425, phi2, 0.0));
  CHECK_FALSE(bad.pass);
  CHECK(bad.margin < 0.0);
}

TEST_CASE("parameter diagram: contour position and both sigma_E boundaries") {
  const ParameterDiagram d =
      parameter_diagram(0.005, 0.5, 200, 0.0, 200.0, 81, PhaseOrder::second);
  CHECK(d.contour_level == doctest::Approx(8.6143).epsilon(1e-4));
  CHECK_FALSE(d.contour_segments.empty());

  // zero-phase column: sigma_t = sigma_t0 crosses T/4 at hbar/(2 T/4)
  const double cross = kHbar / (2.0 * d.contour_level);
  CHECK(cross == doctest::Approx(0.0382).epsilon(2e-3));
  {
    int sign_changes = 0;
    for (std::size_t i = 0; i + 1 < d.sigma_e.size(); ++i) {
      const bool a = d.sigma_t[i] < d.contour_level;
      const bool b = d.sigma_t[i + 1] < d.contour_level;
      if (a != b) {
        ++sign_changes;
        CHECK(d.sigma_e[i] == doctest::Approx(cross).epsilon(0.03));
      }
    }
    CHECK(sign_changes == 1);  // only the lower boundary at phi2 = 0
  }
  // a fixed nonzero phi2 row crosses T/4 twice: lower and upper boundary
  {
    const std::size_t j = 40;  // phi2 = 100
    CHECK(d.coeff[j] == doctest::Approx(100.0).epsilon(1e-12));
    int sign_changes = 0;
    for (std::size_t i = 0; i + 1 < d.sigma_e.size(); ++i) {
      const bool a = d.sigma_t[j * d.sigma_e.size() + i] < d.contour_level;
      const bool b = d.sigma_t[j * d.sigma_e.size() + i + 1] < d.contour_level;
      if (a != b) ++sign_changes;
    }
    CHECK(sign_changes == 2);
  }
  // monotone broadening along phi2 at fixed sigma_E inside the window
  {
    std::size_t i = 0;
    while (d.sigma_e[i] < 0.1) ++i;
    for (std::size_t j = 0; j + 1 < d.coeff.size(); ++j)
      CHECK(d.sigma_t[(j + 1) * d.sigma_e.size() + i] >=
            d.sigma_t[j * d.sigma_e.size() + i]);
  }
}

TEST_CASE("parameter diagram: degenerate single-cell grid") {
  const ParameterDiagram d =
      parameter_diagram(0.425, 0.426, 1, 1.35, 1.35, 1, PhaseOrder::second);
  CHECK(d.sigma_t.size() == 1);
  CHECK(d.sigma_t[0] ==
        doctest::Approx(duration(DurationModel::from_sigma_e(0.425, 1.35, 0.0)))
            .epsilon(1e-14));
  CHECK(d.contour_segments.empty());
}

TEST_CASE("cross-module: random triples match Eq.-S12 within 2%") {
  std::mt19937_64 rng(2027);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 25; ++i) {  // the acceptance suite runs the full 200
    const double sigma_e = 0.1 * std::pow(20.0, 0.5 * (u(rng) + 1.0) * 0.65);
    const double sigma_t0 = kHbar / (2.0 * sigma_e);
    const double phi2 = 3.0 * u(rng) * 2.0 * sigma_t0 / (kHbar * kHbar);
    const double phi3 = 3.0 * u(rng) * 4.0 * std::sqrt(2.0) * sigma_t0 *
                        sigma_t0 * sigma_t0 / (kHbar * kHbar * kHbar);
    const double want = duration(DurationModel::from_sigma_e(sigma_e, phi2, phi3));
    const double got = numeric_rms(sigma_e, phi2, phi3);
    CHECK(std::abs(got - want) / want < 0.02);
  }
}
