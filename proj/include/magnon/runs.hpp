#pragma once

#include <optional>

#include "magnon/config.hpp"
#include "magnon/table.hpp"

namespace magnon {

/// k_index, kx, ky, kz, eps_before_meV, eps_after_meV
ResultTable run_dispersion(const RunConfig& cfg);

/// k_index, theta, m, n, entropy, schmidt_rank
ResultTable run_entanglement(const RunConfig& cfg);

struct SpectrumRun {
  ResultTable peaks; // m, n, l, energy_meV, weight, is_remainder
  std::optional<ResultTable> trace; // m, n, t, l, intensity
};

/// Needs exactly one k-point and one angle.
SpectrumRun run_spectrum(const RunConfig& cfg);

/// m, n, l, energy_analytic_meV, energy_oracle_meV, weight_analytic, weight_oracle
ResultTable run_oracle(const RunConfig& cfg, int cutoff = 40, int max_l = 10);

} // namespace magnon
