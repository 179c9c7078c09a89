#include "magnon/sweep.hpp"

#include <gtest/gtest.h>

#include <cstring>

using namespace magnon;

namespace {

const LatticeSpec sc = LatticeSpec::simple_cubic();
const ModelParams preset{};

std::vector<KVector> path_points(int samples) {
  return make_kpath(sc, PathPreset::GXMGR, samples).points();
}

const std::vector<std::pair<int, int>> refs{{0, 0}, {1, 0}, {1, 1}};

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

} // namespace

TEST(Sweep, SerialAndParallelAgreeBitwise) {
  const auto ks = path_points(8);
  const auto thetas = uniform_theta_grid(12);
  SweepOptions serial;
  serial.execution = Execution::Serial;
  SweepOptions par;
  par.threads = 4;
  const auto a = entanglement_map(preset, PulseParams::in_plane(-9.6, 0), sc, ks, refs, thetas, serial);
  const auto b = entanglement_map(preset, PulseParams::in_plane(-9.6, 0), sc, ks, refs, thetas, par);
  ASSERT_EQ(a.cells.size(), ks.size() * thetas.size() * refs.size());
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_TRUE(same_bits(a.cells[i].entropy, b.cells[i].entropy));
    EXPECT_EQ(a.cells[i].schmidt_rank, b.cells[i].schmidt_rank);
    EXPECT_EQ(a.cells[i].k_index, b.cells[i].k_index);
  }
  const auto da = dispersion_sweep(preset, PulseParams::in_plane(-9.6, 0), sc, ks, serial);
  const auto db = dispersion_sweep(preset, PulseParams::in_plane(-9.6, 0), sc, ks, par);
  for (std::size_t i = 0; i < da.size(); ++i) EXPECT_TRUE(same_bits(da[i].eps_after, db[i].eps_after));
}

TEST(Sweep, CellOrdering) {
  const auto ks = path_points(2);
  const auto thetas = uniform_theta_grid(4);
  const auto map = entanglement_map(preset, PulseParams::in_plane(-9.6, 0), sc, ks, refs, thetas);
  for (std::size_t ik = 0; ik < ks.size(); ++ik)
    for (std::size_t it = 0; it < thetas.size(); ++it)
      for (std::size_t ir = 0; ir < refs.size(); ++ir) {
        const auto& c = map.at(ik, it, ir);
        EXPECT_EQ(c.k_index, ik);
        EXPECT_EQ(c.theta_index, it);
        EXPECT_EQ(c.ref_index, ir);
      }
}

TEST(Sweep, NoPulseGivesZeroMap) {
  const auto ks = path_points(4);
  const auto map = entanglement_map(preset, PulseParams::in_plane(0.0, 0), sc, ks, refs, uniform_theta_grid(8));
  for (const auto& c : map.cells) {
    EXPECT_TRUE(c.stable);
    EXPECT_EQ(c.entropy, 0.0);
    EXPECT_EQ(c.schmidt_rank, 1);
    EXPECT_EQ(c.expelled, 0.0);
  }
}

TEST(Sweep, OppositeFieldColumnsEqual) {
  const auto ks = path_points(4);
  const auto thetas = uniform_theta_grid(12);
  const auto map = entanglement_map(preset, PulseParams::in_plane(-9.6, 0), sc, ks, refs, thetas);
  for (std::size_t ik = 0; ik < ks.size(); ++ik)
    for (std::size_t it = 0; it < 6; ++it)
      for (std::size_t ir = 0; ir < refs.size(); ++ir)
        EXPECT_NEAR(map.at(ik, it, ir).entropy, map.at(ik, it + 6, ir).entropy, 1e-12);
}

TEST(Sweep, UnstablePointsAreFlagged) {
  const auto ks = path_points(4);
  const auto map = entanglement_map(preset, PulseParams::in_plane(-30.0, 0), sc, ks, refs, {0.0});
  bool any = false;
  for (const auto& c : map.cells) any |= !c.stable;
  EXPECT_TRUE(any);
  const auto rows = dispersion_sweep(preset, PulseParams::in_plane(-30.0, 0), sc, ks);
  bool flagged = false;
  for (const auto& r : rows) flagged |= !r.stable;
  EXPECT_TRUE(flagged);
}

TEST(Sweep, ThetaGrid) {
  const auto g = uniform_theta_grid(36);
  ASSERT_EQ(g.size(), 36u);
  EXPECT_EQ(g[0], 0.0);
  EXPECT_NEAR(g[9], kPi / 2, 1e-15);
  EXPECT_LT(g.back(), 2 * kPi);
}
