#include "magnon/sweep.hpp"

#include <omp.h>

#include <exception>

#include "magnon/error.hpp"

namespace magnon {

namespace {

DispersionRow dispersion_point(const ModelParams& m, const PulseParams& pulse,
                               const LatticeSpec& lat, const KVector& k, const SweepOptions& opts) {
  DispersionRow row;
  row.k = k;
  try {
    const PointSolution s = solve_point(m, pulse, lat, k, opts.tau, opts.tol.stability);
    row.eps_before = s.bog.eps_k;
    row.eps_after = s.inst.eps_k_tau_diag;
  } catch (const InstabilityError&) {
    row.stable = false;
  }
  return row;
}

// All references at one (k, theta) share a single instantaneous frame.
void entanglement_point(const ModelParams& m, PulseParams pulse, const LatticeSpec& lat,
                        const KVector& k, double theta,
                        const std::vector<std::pair<int, int>>& refs, const SweepOptions& opts,
                        EntanglementCell* out) {
  pulse.field_dir = in_plane_direction(theta);
  PointSolution s;
  try {
    s = solve_point(m, pulse, lat, k, opts.tau, opts.tol.stability);
  } catch (const InstabilityError&) {
    for (std::size_t r = 0; r < refs.size(); ++r) out[r].stable = false;
    return;
  }
  for (std::size_t r = 0; r < refs.size(); ++r) {
    const auto [mm, nn] = refs[r];
    const ShakeupExpansion e =
        shakeup_amplitudes(s.inst, EigenstateLabel{mm, nn, k}, opts.tol.truncation);
    const EntanglementResult ent = entanglement_entropy(e, opts.log_base, opts.tol.rank);
    out[r].entropy = ent.entropy;
    out[r].schmidt_rank = ent.schmidt_rank_eff;
    out[r].expelled = e.expelled_weight();
  }
}

int thread_count(const SweepOptions& opts) {
  return opts.threads > 0 ? opts.threads : omp_get_max_threads();
}

} // namespace

std::vector<double> uniform_theta_grid(int count) {
  if (count < 1) throw InvalidInput("theta grid needs at least one angle");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = 2.0 * kPi * i / count;
  return out;
}

std::vector<DispersionRow> dispersion_sweep(const ModelParams& m,
                                            const std::optional<PulseParams>& pulse,
                                            const LatticeSpec& lat, const std::vector<KVector>& ks,
                                            const SweepOptions& opts) {
  m.validate();
  lat.validate();
  PulseParams applied = pulse.value_or(PulseParams{});
  applied.envelope = EnvelopeSpec::constant(1.0);
  if (!pulse) applied.deltaJ = 0.0;
  (void)xi_k(lat, KVector{}, applied.field_dir); // rejects a zero field direction up front

  std::vector<DispersionRow> rows(ks.size());
  const auto n = static_cast<long>(ks.size());
  if (opts.execution == Execution::Serial) {
    for (long i = 0; i < n; ++i) rows[i] = dispersion_point(m, applied, lat, ks[i], opts);
  } else {
#pragma omp parallel for schedule(static) num_threads(thread_count(opts))
    for (long i = 0; i < n; ++i) rows[i] = dispersion_point(m, applied, lat, ks[i], opts);
  }
  return rows;
}

EntanglementMap entanglement_map(const ModelParams& m, const PulseParams& pulse,
                                 const LatticeSpec& lat, const std::vector<KVector>& ks,
                                 const std::vector<std::pair<int, int>>& references,
                                 const std::vector<double>& thetas, const SweepOptions& opts) {
  m.validate();
  lat.validate();
  pulse.envelope.validate();
  if (ks.empty() || thetas.empty() || references.empty())
    throw InvalidInput("entanglement map needs k-points, angles and references");
  for (const auto& [mm, nn] : references)
    if (mm < 0 || nn < 0) throw InvalidInput("reference occupations must be non-negative");

  EntanglementMap map;
  map.ks = ks;
  map.thetas = thetas;
  map.references = references;
  const std::size_t nr = references.size();
  map.cells.resize(ks.size() * thetas.size() * nr);
  for (std::size_t ik = 0; ik < ks.size(); ++ik)
    for (std::size_t it = 0; it < thetas.size(); ++it)
      for (std::size_t ir = 0; ir < nr; ++ir) {
        auto& c = map.cells[(ik * thetas.size() + it) * nr + ir];
        c.k_index = ik;
        c.theta_index = it;
        c.ref_index = ir;
      }

  const auto points = static_cast<long>(ks.size() * thetas.size());
  const std::size_t nt = thetas.size();
  // Exceptions must not cross the OpenMP region; keep them per point.
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(points));
  auto run = [&](long p) {
    const auto ik = static_cast<std::size_t>(p) / nt;
    const auto it = static_cast<std::size_t>(p) % nt;
    try {
      entanglement_point(m, pulse, lat, ks[ik], thetas[it], references, opts,
                         &map.cells[static_cast<std::size_t>(p) * nr]);
    } catch (...) {
      errors[static_cast<std::size_t>(p)] = std::current_exception();
    }
  };

  if (opts.execution == Execution::Serial) {
    for (long p = 0; p < points; ++p) run(p);
  } else {
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count(opts))
    for (long p = 0; p < points; ++p) run(p);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return map;
}

} // namespace magnon
