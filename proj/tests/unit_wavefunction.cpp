#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "fessi/constants.hpp"
#include "fessi/wavefunction.hpp"

using namespace fessi;

namespace {
constexpr double kHbar = constants::hbar_ev_fs;

SpectralWavefunction fig3_pulse(std::size_t n = 4096) {
  const EnergyGrid g = default_energy_grid(0.425, 0.0, n);
  return make_gaussian_spectrum(g, 0.425,
                                SpectralPhaseSpec{{{2, 0.34}, {3, 1.05}}});
}
}  // namespace

TEST_CASE("phase spec rejects gauge orders and duplicates") {
  CHECK_THROWS_AS(SpectralPhaseSpec({{0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralPhaseSpec({{1, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(SpectralPhaseSpec({{2, 1.0}, {2, 2.0}}), std::invalid_argument);
  const SpectralPhaseSpec p{{{2, 0.34}, {3, 1.05}}};
  CHECK(p(0.5) == doctest::Approx(0.34 * 0.25 + 1.05 * 0.125).epsilon(1e-14));
}

TEST_CASE("gaussian constructor: norm, shape, phase") {
  const SpectralWavefunction psi = fig3_pulse();
  CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
  // |psi| proportional to exp(-q^2 / 4 sigma^2)
  const std::size_t c = psi.grid.count / 2;
  const double q = psi.grid.value(c + 200) - psi.grid.center_energy;
  const double expect = std::exp(-q * q / (4.0 * 0.425 * 0.425));
  CHECK(std::abs(psi.samples[c + 200]) / std::abs(psi.samples[c]) ==
        doctest::Approx(expect).epsilon(1e-12));
  const double phase = std::arg(psi.samples[c + 200]);
  const double want = 0.34 * q * q + 1.05 * q * q * q;
  CHECK(std::remainder(phase - want, 2.0 * constants::pi) ==
        doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("gaussian constructor rejects narrow grids") {
  // span below 8 sigma
  CHECK_THROWS_AS(
      make_gaussian_spectrum(EnergyGrid{0.0, 7.0 * 0.425 / 256, 256}, 0.425),
      std::invalid_argument);
  // span 9 sigma: allowed by the precondition but the truncated tail mass
  // still exceeds 1e-6, so the constructor must reject it
  CHECK_THROWS_AS(
      make_gaussian_spectrum(EnergyGrid{0.0, 9.0 * 0.425 / 1024, 1024}, 0.425),
      std::invalid_argument);
  CHECK_THROWS_AS(make_gaussian_spectrum(default_energy_grid(0.425), -1.0),
                  std::invalid_argument);
}

TEST_CASE("transform-limited duration sigma_t0 = hbar / 2 sigma_E") {
  const double sigma_e = 0.425;
  const EnergyGrid g = default_energy_grid(sigma_e);
  const auto psi = make_gaussian_spectrum(g, sigma_e);
  const auto psit = to_time_domain(psi);
  CHECK(std::abs(psit.norm() - 1.0) < 1e-9);  // Parseval
  const IntensityMoments m = intensity_moments(psit);
  const double sigma_t0 = kHbar / (2.0 * sigma_e);  // 0.774367 fs
  CHECK(m.rms == doctest::Approx(sigma_t0).epsilon(1e-6));
  CHECK(sigma_t0 == doctest::Approx(0.774367).epsilon(1e-5));
  CHECK(m.mean == doctest::Approx(0.0).epsilon(1e-9));  // symmetric pulse
}

TEST_CASE("fwhm of the gaussian matches 2 sqrt(2 ln 2) sigma_t on a fine grid") {
  // the time step is tied to the energy span; widen the span for crossing
  // interpolation accuracy
  const double sigma_e = 0.425;
  const EnergyGrid g = default_energy_grid(sigma_e, 0.0, 16384, 64.0);
  const auto psit = to_time_domain(make_gaussian_spectrum(g, sigma_e));
  const IntensityMoments m = intensity_moments(psit);
  const double want = 2.0 * std::sqrt(2.0 * std::log(2.0)) * kHbar /
                      (2.0 * sigma_e);  // 1.8234 fs
  CHECK(m.fwhm == doctest::Approx(want).epsilon(5e-3));
  CHECK(want == doctest::Approx(1.8234).epsilon(1e-4));
  CHECK_FALSE(m.multimodal);
}

TEST_CASE("linear spectral phase shifts the envelope by phi1 * hbar") {
  const double phi1 = 2.0;
  // span 24 sigma: the conjugate time step then samples the envelope finely
  // enough that the trapezoid aliasing floor sits below the 1e-12 budget
  auto psi = make_gaussian_spectrum(default_energy_grid(0.425, 0.0, 4096, 24.0),
                                    0.425);
  const IntensityMoments m0 = intensity_moments(to_time_domain(psi));
  for (std::size_t i = 0; i < psi.grid.count; ++i)
    psi.samples[i] *= std::polar(1.0, phi1 * (psi.grid.value(i) -
                                              psi.grid.center_energy));
  const IntensityMoments m1 = intensity_moments(to_time_domain(psi));
  // with the exp(-iEt/hbar) kernel a positive phi1 delays the pulse
  CHECK(m1.mean - m0.mean == doctest::Approx(phi1 * kHbar).epsilon(1e-9));
  CHECK(std::abs(m1.rms - m0.rms) < 1e-12);  // gauge: no broadening
}

TEST_CASE("chirped gaussian obeys the closed-form rms law") {
  const double sigma_e = 0.425;
  const double sigma_t0 = kHbar / (2.0 * sigma_e);
  for (double phi2 : {0.5, 1.35, 3.0, 5.0}) {  // Taylor coefficient, rad/eV^2
    const auto psi = make_gaussian_spectrum(
        default_energy_grid(sigma_e), sigma_e,
        SpectralPhaseSpec{{{2, 0.5 * phi2}}});  // c2 = phi2 / 2
    const IntensityMoments m = intensity_moments(to_time_domain(psi));
    const double chirp = kHbar * kHbar * phi2 / (2.0 * sigma_t0);
    const double want = std::sqrt(sigma_t0 * sigma_t0 + chirp * chirp);
    CHECK(m.rms == doctest::Approx(want).epsilon(5e-3));
  }
}

TEST_CASE("fourier round trip is exact to 1e-10") {
  const auto psi = fig3_pulse();
  const auto back = to_energy_domain(to_time_domain(psi));
  REQUIRE(back.grid == psi.grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < psi.grid.count; ++i)
    worst = std::max(worst, std::abs(back.samples[i] - psi.samples[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("round trip with nonzero grid centres and center_time") {
  const EnergyGrid g = default_energy_grid(0.425, 10000.0, 2048);
  const auto psi = make_gaussian_spectrum(g, 0.425,
                                          SpectralPhaseSpec{{{2, 1.0}}});
  const auto psit = to_time_domain(psi, 5.0);
  CHECK(psit.grid.center_time == 5.0);
  CHECK(psit.grid.reference_energy == 10000.0);
  CHECK(std::abs(psit.norm() - 1.0) < 1e-9);
  const auto back = to_energy_domain(psit);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.count; ++i)
    worst = std::max(worst, std::abs(back.samples[i] - psi.samples[i]));
  CHECK(worst < 1e-10);
}

TEST_CASE("delta-like time spike has a flat spectral magnitude") {
  TimeGrid tg{0.0, 0.01, 1024, 0.0};
  TemporalWavefunction spike{tg, std::vector<complexd>(1024, {0.0, 0.0})};
  spike.samples[512] = {1.0 / std::sqrt(0.01), 0.0};
  const auto psi = to_energy_domain(spike);
  double lo = 1e300, hi = 0.0;
  for (const auto& z : psi.samples) {
    lo = std::min(lo, std::abs(z));
    hi = std::max(hi, std::abs(z));
  }
  CHECK(hi / lo - 1.0 < 1e-12);
}

TEST_CASE("multimodal pulses report the outermost crossing span") {
  // two time lobes from a cosine-modulated spectrum
  const EnergyGrid g = default_energy_grid(0.425, 0.0, 4096);
  auto psi = make_gaussian_spectrum(g, 0.425);
  const double sep = 8.0;  // fs between lobes
  for (std::size_t i = 0; i < g.count; ++i) {
    const double q = g.value(i) - g.center_energy;
    psi.samples[i] *= std::cos(q * sep / (2.0 * kHbar));
  }
  const double n = std::sqrt(psi.norm());
  for (auto& z : psi.samples) z /= n;
  const IntensityMoments m = intensity_moments(to_time_domain(psi));
  CHECK(m.multimodal);
  CHECK(m.fwhm > sep);  // spans both lobes
}

TEST_CASE("property: transforms preserve norm for random phase specs") {
  std::mt19937_64 rng(411);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int it = 0; it < 12; ++it) {
    const double sigma_e = 0.1 * std::pow(10.0, u(rng));  // 0.01 .. 1
    const SpectralPhaseSpec phase{{{2, 2.0 * u(rng)}, {3, 2.0 * u(rng)}}};
    const auto psi =
        make_gaussian_spectrum(default_energy_grid(sigma_e, 0.0, 1024),
                               sigma_e, phase);
    CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
    const auto psit = to_time_domain(psi);
    CHECK(std::abs(psit.norm() - 1.0) < 1e-9);
    const auto back = to_energy_domain(psit);
    double worst = 0.0;
    for (std::size_t i = 0; i < psi.grid.count; ++i)
      worst = std::max(worst, std::abs(back.samples[i] - psi.samples[i]));
    CHECK(worst < 1e-10);
  }
}
