#include "gen.hpp"
#include "magnon/error.hpp"
#include "magnon/fock_oracle.hpp"
#include "magnon/shakeup.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace magnon;

namespace {

InstantBogoliubov frame_with_tanh(double t, double Phi = 0.0) {
  return InstantBogoliubov::from_squeeze(std::atanh(t), Phi);
}

double total(const ShakeupExpansion& e) {
  const auto w = e.weights();
  return std::accumulate(w.begin(), w.end(), 0.0);
}

} // namespace

TEST(P00, Values) {
  const auto id = InstantBogoliubov::from_squeeze(0.0);
  EXPECT_EQ(p00(id, 0), cplx(1.0));
  EXPECT_EQ(std::abs(p00(id, 3)), 0.0);

  const auto f = frame_with_tanh(0.5);
  EXPECT_NEAR(std::norm(p00(f, 0)), 0.75, 1e-15);
  EXPECT_NEAR(std::norm(p00(f, 1)), 0.1875, 1e-15);
  EXPECT_NEAR(std::norm(p00(f, 2)), 0.046875, 1e-15);
  const cplx two = p00(f, 2);
  EXPECT_NEAR(two.real(), 0.25 * std::sqrt(0.75), 1e-15);
  EXPECT_NEAR(two.imag(), 0.0, 1e-15);
  EXPECT_NEAR(p00(f, 1).real(), -0.5 * std::sqrt(0.75), 1e-15);
  EXPECT_THROW(p00(f, -1), InvalidInput);
}

TEST(QTable, BaseCases) {
  const auto f = frame_with_tanh(0.6, 0.4);
  const double v2 = std::norm(f.v_k);
  const auto q00 = q_table(f, 0, 0, 20);
  for (int l = 0; l <= 20; ++l) EXPECT_EQ(q00(l), 1.0);
  const auto q01 = q_table(f, 0, 1, 20);
  for (int l = 0; l <= 20; ++l) EXPECT_NEAR(q01(l), std::sqrt(l + 1.0), 1e-12 * std::sqrt(l + 1.0));
  const auto q10 = q_table(f, 1, 0, 20);
  EXPECT_NEAR(q10(0), -v2, 1e-14);
  for (int l = 0; l <= 20; ++l) EXPECT_NEAR(q10(l), l - v2, 1e-12 * (l + 1));
  EXPECT_EQ(q10.layer(0, 0).size(), 22u);
  EXPECT_THROW(q10.layer(0, 1), InvalidInput);
}

TEST(Amplitudes, TrivialFrame) {
  const auto id = InstantBogoliubov::from_squeeze(0.0);
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      const auto e = shakeup_amplitudes(id, m, n);
      const int mu = std::min(m, n);
      ASSERT_EQ(e.amplitudes.size(), static_cast<std::size_t>(mu) + 1);
      EXPECT_EQ(e.weight(mu), 1.0);
      EXPECT_EQ(e.expelled_weight(), 0.0);
      EXPECT_EQ(e.mu, mu);
    }
}

TEST(Amplitudes, Bookkeeping) {
  const auto f = frame_with_tanh(0.3);
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      const auto e = shakeup_amplitudes(f, m, n);
      EXPECT_EQ(e.delta_alpha - e.delta_beta, m - n);
      EXPECT_EQ(e.delta_alpha + e.delta_beta, std::abs(m - n));
      EXPECT_EQ(e.reference.m, m);
      EXPECT_LE(e.tail_mass, 1e-12);
      EXPECT_NEAR(total(e) + e.tail_mass, 1.0, 1e-12);
    }
  EXPECT_THROW(shakeup_amplitudes(f, -1, 0), InvalidInput);
  EXPECT_THROW(shakeup_amplitudes(f, 0, 0, 0.0), InvalidInput);
}

TEST(Amplitudes, SingleMagnonClosedForm) {
  const double x = 0.25;
  const auto e = shakeup_amplitudes(frame_with_tanh(0.5), 1, 0);
  EXPECT_NEAR(e.weight(0), 0.5625, 1e-14);
  EXPECT_NEAR(e.weight(1), 0.28125, 1e-14);
  for (int l = 0; l <= 30; ++l)
    EXPECT_NEAR(e.weight(l), (l + 1) * (1 - x) * (1 - x) * std::pow(x, l), 1e-14);
}

TEST(Amplitudes, Normalisation) {
  gen::Rng rng(202);
  for (int i = 0; i < 200; ++i) {
    const auto f = rng.frame(0.95);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        const auto e = shakeup_amplitudes(f, m, n);
        EXPECT_NEAR(total(e), 1.0, 1e-10) << "tanh=" << std::tanh(f.Theta_k) << " m=" << m << " n=" << n;
      }
  }
}

TEST(Amplitudes, SwapSymmetry) {
  gen::Rng rng(203);
  for (int i = 0; i < 100; ++i) {
    const auto f = rng.frame(0.9);
    for (int m = 0; m <= 3; ++m)
      for (int n = m + 1; n <= 3; ++n) {
        const auto a = shakeup_amplitudes(f, m, n);
        const auto b = shakeup_amplitudes(f, n, m);
        ASSERT_EQ(a.amplitudes.size(), b.amplitudes.size());
        for (std::size_t l = 0; l < a.amplitudes.size(); ++l)
          EXPECT_NEAR(std::abs(a.amplitudes[l]), std::abs(b.amplitudes[l]), 1e-12);
      }
  }
}

TEST(Amplitudes, PhaseDoesNotChangeWeights) {
  gen::Rng rng(204);
  for (int i = 0; i < 50; ++i) {
    const double Theta = std::atanh(rng.uniform(0.01, 0.9));
    const auto a = InstantBogoliubov::from_squeeze(Theta, 0.0);
    const auto b = InstantBogoliubov::from_squeeze(Theta, rng.angle());
    for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {2, 1}, {2, 2}}) {
      const auto wa = shakeup_amplitudes(a, m, n).weights();
      const auto wb = shakeup_amplitudes(b, m, n).weights();
      ASSERT_EQ(wa.size(), wb.size());
      for (std::size_t l = 0; l < wa.size(); ++l) EXPECT_NEAR(wa[l], wb[l], 1e-12);
    }
  }
}

TEST(Amplitudes, VacuumTailStrictlyDecreasing) {
  gen::Rng rng(205);
  for (int i = 0; i < 100; ++i) {
    const auto e = shakeup_amplitudes(rng.frame(0.95), 0, 0);
    const auto w = e.weights();
    for (std::size_t l = 1; l < w.size() && w[l] > 1e-250; ++l) EXPECT_LT(w[l], w[l - 1]);
  }
}

TEST(Amplitudes, ExcitedTailEventuallyDecreasing) {
  gen::Rng rng(206);
  for (int i = 0; i < 100; ++i) {
    const auto f = rng.frame(0.9);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        const auto w = shakeup_amplitudes(f, m, n).weights();
        std::size_t end = w.size();
        while (end > 1 && w[end - 1] < 1e-250) --end;
        std::size_t last_rise = 0;
        for (std::size_t l = 1; l < end; ++l)
          if (w[l] >= w[l - 1]) last_rise = l;
        EXPECT_LT(last_rise, std::max<std::size_t>(end / 2, 8)) << "m=" << m << " n=" << n;
      }
  }
}

TEST(Amplitudes, ShakeupIffEntangled) {
  gen::Rng rng(207);
  for (int i = 0; i < 300; ++i) {
    const auto f = i % 10 == 0 ? InstantBogoliubov::from_squeeze(0.0) : rng.frame(0.95);
    for (int m = 0; m <= 3; ++m)
      for (int n = 0; n <= 3; ++n) {
        const auto e = shakeup_amplitudes(f, m, n);
        int count = 0;
        for (double w : e.weights()) count += w > 1e-12;
        EXPECT_EQ(count > 1, e.expelled_weight() > 1e-12);
      }
  }
}

// Weights against eigenvector overlaps of the brute-force sector matrix.
TEST(Oracle, AmplitudesMatchOverlaps) {
  gen::Rng rng(208);
  const double tanhs[] = {0.1, 0.3, 0.5, 0.7, 0.8, 0.9};
  for (double t : tanhs) {
    const auto f = InstantBogoliubov::from_squeeze(std::atanh(t), rng.angle(), rng.uniform(0.5, 3.0));
    const OracleProblem problem{f.eps_k_tau, f.eps_k_tau, f.Upsilon_k * f.eps_k_tau};
    const int cutoff = t < 0.45 ? 64 : t < 0.75 ? 200 : 600;
    for (int m = 0; m <= 2; ++m)
      for (int n = 0; n <= 2; ++n) {
        const auto sol = solve_sector(problem, m - n, cutoff);
        ASSERT_TRUE(sol.converged) << "shift " << sol.convergence_shift;
        const auto overlaps = sector_overlaps(sol, m, n);
        const auto e = shakeup_amplitudes(f, m, n);
        for (int l = 0; l <= 15; ++l)
          EXPECT_NEAR(e.weight(l), overlaps[l], 1e-8) << "tanh=" << t << " m=" << m << " n=" << n << " l=" << l;
      }
  }
}

TEST(Oracle, FullSpaceAgreesWithSector) {
  const auto f = frame_with_tanh(0.35, 0.8);
  const OracleProblem problem{f.eps_k_tau, f.eps_k_tau, f.Upsilon_k * f.eps_k_tau};
  const auto full = solve_oracle(problem, 40);
  for (auto [m, n] : {std::pair{0, 0}, {1, 0}, {0, 2}, {1, 1}}) {
    const auto a = overlap_amplitudes(full, m, n);
    const auto b = sector_overlaps(solve_sector(problem, m - n, 40), m, n);
    const auto e = shakeup_amplitudes(f, m, n);
    for (int l = 0; l <= 10; ++l) {
      EXPECT_NEAR(a[l], b[l], 1e-12);
      EXPECT_NEAR(a[l], e.weight(l), 1e-10);
    }
  }
}
