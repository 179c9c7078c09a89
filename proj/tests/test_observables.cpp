#include "gen.hpp"
#include "magnon/error.hpp"
#include "magnon/fock_oracle.hpp"
#include "magnon/observables.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace magnon;

namespace {

InstantBogoliubov frame_with_tanh(double t, double Phi = 0.0, double eps = 1.0, double B = 0.0) {
  return InstantBogoliubov::from_squeeze(std::atanh(t), Phi, eps, B);
}

double closed_entropy(double Theta) {
  const double c2 = std::pow(std::cosh(Theta), 2);
  const double s2 = std::pow(std::sinh(Theta), 2);
  return c2 * std::log(c2) - (s2 > 0 ? s2 * std::log(s2) : 0.0);
}

} // namespace

TEST(Entropy, TrivialFrame) {
  const auto id = InstantBogoliubov::from_squeeze(0.0);
  for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {2, 2}}) {
    const auto r = entanglement_entropy(shakeup_amplitudes(id, m, n));
    EXPECT_EQ(r.entropy, 0.0);
    EXPECT_EQ(r.schmidt_rank_eff, 1);
  }
}

TEST(Entropy, HalfSqueezeValue) {
  const auto r = entanglement_entropy(shakeup_amplitudes(frame_with_tanh(0.5), 0, 0));
  const double expected = (4.0 / 3) * std::log(4.0 / 3) - (1.0 / 3) * std::log(1.0 / 3);
  EXPECT_NEAR(r.entropy, expected, 1e-12);
  EXPECT_NEAR(r.entropy, 0.74978, 1e-5);
  const auto bits = entanglement_entropy(shakeup_amplitudes(frame_with_tanh(0.5), 0, 0), LogBase::Two);
  EXPECT_NEAR(bits.entropy, expected / std::log(2.0), 1e-12);
}

TEST(Entropy, ClosedFormRandom) {
  gen::Rng rng(301);
  for (int i = 0; i < 100; ++i) {
    const double Theta = rng.uniform(0.0, 2.0);
    const auto r = entanglement_entropy(
        shakeup_amplitudes(InstantBogoliubov::from_squeeze(Theta, rng.angle()), 0, 0));
    EXPECT_NEAR(r.entropy, closed_entropy(Theta), 1e-10) << "Theta=" << Theta;
  }
}

TEST(Entropy, NonNegativeAndPhaseBlind) {
  gen::Rng rng(302);
  for (int i = 0; i < 100; ++i) {
    const double Theta = std::atanh(rng.uniform(0.0, 0.9));
    for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 3}}) {
      const auto a = entanglement_entropy(
          shakeup_amplitudes(InstantBogoliubov::from_squeeze(Theta, 0.0), m, n));
      const auto b = entanglement_entropy(
          shakeup_amplitudes(InstantBogoliubov::from_squeeze(Theta, rng.angle()), m, n));
      EXPECT_GE(a.entropy, 0.0);
      EXPECT_NEAR(a.entropy, b.entropy, 1e-12);
      EXPECT_EQ(a.entropy == 0.0, a.schmidt_rank_eff == 1);
    }
  }
}

TEST(Spectrum, TrivialFrame) {
  const auto id = InstantBogoliubov::from_squeeze(0.0, 0.0, 2.0);
  const auto peaks = shakeup_spectrum(shakeup_amplitudes(id, 0, 0), id, 0.0);
  ASSERT_EQ(peaks.size(), 1u);
  EXPECT_EQ(peaks[0].energy, 0.0);
  EXPECT_EQ(peaks[0].weight, 1.0);
  EXPECT_TRUE(peaks[0].is_remainder);
}

TEST(Spectrum, GeometricLines) {
  const auto f = frame_with_tanh(0.5);
  const auto peaks = shakeup_spectrum(shakeup_amplitudes(f, 0, 0), f, 0.0);
  ASSERT_GE(peaks.size(), 3u);
  const double w[] = {0.75, 0.1875, 0.046875};
  for (int l = 0; l < 3; ++l) {
    EXPECT_EQ(peaks[l].l, l);
    EXPECT_NEAR(peaks[l].energy, 2.0 * l, 1e-14);
    EXPECT_NEAR(peaks[l].weight, w[l], 1e-14);
    EXPECT_EQ(peaks[l].is_remainder, l == 0);
  }
  double sum = 0.0;
  for (const auto& p : peaks) sum += p.weight;
  EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(Spectrum, Conventions) {
  const double B = 0.2;
  const auto f = frame_with_tanh(0.4, 0.0, 1.5, B);
  const auto e = shakeup_amplitudes(f, 3, 1);
  const auto paper = shakeup_spectrum(e, f, B, EnergyConvention::PaperForm);
  const auto full = shakeup_spectrum(e, f, B, EnergyConvention::FullOccupation);
  ASSERT_EQ(paper.size(), full.size());
  for (std::size_t i = 0; i < paper.size(); ++i) {
    EXPECT_NEAR(paper[i].energy, 2.0 * paper[i].l * 1.5 + 2 * B, 1e-13);
    EXPECT_NEAR(full[i].energy - paper[i].energy, 2 * 1.5, 1e-13);
    EXPECT_EQ(full[i].is_remainder, full[i].l == 1);
  }
}

TEST(Fluctuation, SqueezedVacuum) {
  const auto f = frame_with_tanh(0.5);
  const auto e = shakeup_amplitudes(f, 0, 0);
  const auto fl = energy_fluctuation(e, f, 0.0);
  EXPECT_NEAR(fl.total, 2.0 * std::pow(std::sinh(f.Theta_k), 2), 1e-12);
  EXPECT_NEAR(fl.total, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(fl.remainder, 0.0);
  EXPECT_NEAR(fl.total, fl.remainder + fl.expelled, 1e-15);
}

TEST(Fluctuation, TrivialAndWeakLimits) {
  const auto id = InstantBogoliubov::from_squeeze(0.0, 0.0, 2.0);
  const auto fl = energy_fluctuation(shakeup_amplitudes(id, 1, 2), id, 0.0);
  EXPECT_EQ(fl.expelled, 0.0);
  EXPECT_NEAR(fl.total, 2.0 * 3, 1e-15);
  double prev = 0.0;
  for (double t : {0.1, 0.01, 0.001}) {
    const auto f = frame_with_tanh(t, 0.0, 2.0);
    const auto x = energy_fluctuation(shakeup_amplitudes(f, 1, 2), f, 0.0);
    const double ratio = x.remainder / x.total;
    EXPECT_GT(ratio, prev);
    prev = ratio;
  }
  EXPECT_GT(prev, 0.9999);
}

// <m,n|H|m,n> - E0 of the unperturbed number state under the instantaneous
// Hamiltonian equals the weighted in-frame energies.
TEST(Fluctuation, OracleExpectation) {
  gen::Rng rng(303);
  for (int i = 0; i < 10; ++i) {
    const double B = i % 2 ? 0.0 : rng.uniform(-0.2, 0.2);
    const auto f = rng.frame(0.45, B);
    const TruncatedFockSpace space(40);
    const auto H = build_hamiltonian(f.eps_k_tau + B, f.eps_k_tau - B, f.Upsilon_k * f.eps_k_tau, space);
    const double E0 = oracle_spectrum(H, space).ground_energy();
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        const auto fl = energy_fluctuation(shakeup_amplitudes(f, m, n), f, B);
        const double oracle = number_state_expectation(H, space, m, n) - E0;
        EXPECT_NEAR(fl.total, oracle, 1e-6 * std::abs(oracle) + 1e-12) << "m=" << m << " n=" << n;
      }
  }
}

TEST(Trace, SinglePeak) {
  std::vector<double> times;
  for (int i = 0; i <= 400; ++i) times.push_back(-2.0 + 0.01 * i);
  const auto tr = spectrum_trace({{0, 0.0, 1.0, true}}, EnvelopeSpec::gaussian(20.0), 1.0, times);
  ASSERT_EQ(tr.intensity.size(), 1u);
  EXPECT_NEAR(*std::max_element(tr.intensity[0].begin(), tr.intensity[0].end()), 1.0, 1e-12);
}

TEST(Trace, TwoPeakRatio) {
  std::vector<double> times;
  for (int i = 0; i <= 300; ++i) times.push_back(-1.0 + 0.01 * i);
  const auto tr = spectrum_trace({{0, 0.0, 0.75, true}, {1, 2.0, 0.1875, false}},
                                 EnvelopeSpec::gaussian(20.0), 1.0, times);
  const auto& a = tr.intensity[0];
  const auto& b = tr.intensity[1];
  const auto ia = std::max_element(a.begin(), a.end()) - a.begin();
  const auto ib = std::max_element(b.begin(), b.end()) - b.begin();
  EXPECT_NEAR(times[ia], 0.0, 1e-12);
  EXPECT_NEAR(times[ib], 1.0, 1e-12);
  EXPECT_NEAR(a[ia] / b[ib], 4.0, 1e-12);
  for (std::size_t p = 0; p < 2; ++p)
    EXPECT_NEAR(*std::max_element(tr.intensity[p].begin(), tr.intensity[p].end()),
                p == 0 ? 0.75 : 0.1875, 1e-12);
}

TEST(Trace, ResolvableHumps) {
  const double sigma = 1.0 / std::sqrt(40.0);
  const double spacing = 3.0 * sigma;
  std::vector<double> times;
  for (int i = 0; i <= 2000; ++i) times.push_back(-0.5 + 0.0015 * i);
  const std::vector<SpectrumPeak> peaks{{0, 0, 0.5, true}, {1, 2, 0.3, false}, {2, 4, 0.15, false}, {3, 6, 0.05, false}};
  const auto tr = spectrum_trace(peaks, EnvelopeSpec::gaussian(20.0), spacing, times);
  std::vector<double> sum(times.size(), 0.0);
  for (const auto& row : tr.intensity)
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += row[t];
  int maxima = 0;
  for (std::size_t t = 1; t + 1 < sum.size(); ++t) maxima += sum[t] > sum[t - 1] && sum[t] > sum[t + 1];
  EXPECT_EQ(maxima, 4);
}

TEST(Trace, Errors) {
  EXPECT_THROW(spectrum_trace({}, EnvelopeSpec::gaussian(), 1.0, {}), InvalidInput);
  EXPECT_THROW(spectrum_trace({}, EnvelopeSpec::gaussian(), 0.0, {0.0}), InvalidInput);
}
