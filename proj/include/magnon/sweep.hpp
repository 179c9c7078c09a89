#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "magnon/observables.hpp"
#include "magnon/tolerances.hpp"

namespace magnon {

enum class Execution { Serial, Parallel };

struct SweepOptions {
  Execution execution = Execution::Parallel;
  int threads = 0; // 0 = OpenMP default
  Tolerances tol;
  LogBase log_base = LogBase::Natural;
  double tau = 0.0;
};

struct DispersionRow {
  KVector k;
  bool stable = true;
  double eps_before = 0.0;
  double eps_after = 0.0;
};

/// Flags unstable points instead of throwing. The pulse envelope is pinned
/// to f = 1; no pulse means eps_after == eps_before.
std::vector<DispersionRow> dispersion_sweep(const ModelParams& m,
                                            const std::optional<PulseParams>& pulse,
                                            const LatticeSpec& lat, const std::vector<KVector>& ks,
                                            const SweepOptions& opts = {});

struct EntanglementCell {
  std::size_t k_index = 0;
  std::size_t theta_index = 0;
  std::size_t ref_index = 0;
  bool stable = true;
  double entropy = 0.0;
  int schmidt_rank = 1;
  double expelled = 0.0;
};

/// Cells ordered k-major, then theta, then reference.
struct EntanglementMap {
  std::vector<KVector> ks;
  std::vector<double> thetas;
  std::vector<std::pair<int, int>> references;
  std::vector<EntanglementCell> cells;

  const EntanglementCell& at(std::size_t ik, std::size_t it, std::size_t ir) const {
    return cells[(ik * thetas.size() + it) * references.size() + ir];
  }
};

/// The pulse field direction is replaced by the in-plane angle of each
/// column. Unstable points are flagged, not fatal.
EntanglementMap entanglement_map(const ModelParams& m, const PulseParams& pulse,
                                 const LatticeSpec& lat, const std::vector<KVector>& ks,
                                 const std::vector<std::pair<int, int>>& references,
                                 const std::vector<double>& thetas, const SweepOptions& opts = {});

/// Uniform grid of count angles on [0, 2 pi).
std::vector<double> uniform_theta_grid(int count);

} // namespace magnon
