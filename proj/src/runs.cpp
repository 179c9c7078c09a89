#include "magnon/runs.hpp"

#include <algorithm>

#include "magnon/error.hpp"
#include "magnon/fock_oracle.hpp"

namespace magnon {

namespace {

SweepOptions sweep_options(const RunConfig& cfg) {
  SweepOptions o;
  o.execution = Execution::Parallel;
  o.threads = cfg.threads;
  o.tol = cfg.tol;
  o.log_base = cfg.log_base;
  o.tau = cfg.tau;
  return o;
}

// Spectrum and oracle runs describe one (k, theta) point.
PointSolution single_point(const RunConfig& cfg, KVector* k_out) {
  const auto ks = cfg.path.points(cfg.lattice);
  if (ks.size() != 1 || cfg.thetas.size() != 1)
    throw ConfigError("this command needs exactly one k-point and one field angle");
  PulseParams pulse = cfg.resolved_pulse();
  pulse.field_dir = in_plane_direction(cfg.thetas.front());
  *k_out = ks.front();
  return solve_point(cfg.model, pulse, cfg.lattice, ks.front(), cfg.tau, cfg.tol.stability);
}

} // namespace

ResultTable run_dispersion(const RunConfig& cfg) {
  cfg.validate();
  const auto ks = cfg.path.points(cfg.lattice);
  const auto rows = dispersion_sweep(cfg.model, cfg.resolved_pulse(), cfg.lattice, ks,
                                     sweep_options(cfg));
  ResultTable t;
  t.kind = TableKind::Dispersion;
  t.columns = {"k_index", "kx", "ky", "kz", "eps_before_meV", "eps_after_meV"};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    std::vector<Cell> row{static_cast<long long>(i), r.k[0], r.k[1], r.k[2]};
    if (r.stable) {
      row.emplace_back(r.eps_before);
      row.emplace_back(r.eps_after);
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    t.add_row(std::move(row));
  }
  return t;
}

ResultTable run_entanglement(const RunConfig& cfg) {
  cfg.validate();
  const auto ks = cfg.path.points(cfg.lattice);
  const EntanglementMap map = entanglement_map(cfg.model, cfg.resolved_pulse(), cfg.lattice, ks,
                                               cfg.references, cfg.thetas, sweep_options(cfg));
  ResultTable t;
  t.kind = TableKind::EntanglementMap;
  t.columns = {"k_index", "theta", "m", "n", "entropy", "schmidt_rank"};
  for (const auto& c : map.cells) {
    const auto [m, n] = map.references[c.ref_index];
    std::vector<Cell> row{static_cast<long long>(c.k_index), map.thetas[c.theta_index],
                          static_cast<long long>(m), static_cast<long long>(n)};
    if (c.stable) {
      row.emplace_back(c.entropy);
      row.emplace_back(static_cast<long long>(c.schmidt_rank));
    } else {
      row.emplace_back(std::monostate{});
      row.emplace_back(std::monostate{});
    }
    t.add_row(std::move(row));
  }
  return t;
}

SpectrumRun run_spectrum(const RunConfig& cfg) {
  cfg.validate();
  KVector k;
  const PointSolution s = single_point(cfg, &k);

  SpectrumRun out;
  out.peaks.kind = TableKind::Spectrum;
  out.peaks.columns = {"m", "n", "l", "energy_meV", "weight", "is_remainder"};
  if (cfg.trace.enabled) {
    out.trace.emplace();
    out.trace->kind = TableKind::Trace;
    out.trace->columns = {"m", "n", "t", "l", "intensity"};
  }
  const auto times = cfg.trace.enabled ? cfg.trace.times() : std::vector<double>{};

  for (const auto& [m, n] : cfg.references) {
    const ShakeupExpansion e =
        shakeup_amplitudes(s.inst, EigenstateLabel{m, n, k}, cfg.tol.truncation);
    const auto peaks = shakeup_spectrum(e, s.inst, cfg.model.B, cfg.energy_convention);
    for (const auto& p : peaks)
      out.peaks.add_row({static_cast<long long>(m), static_cast<long long>(n),
                         static_cast<long long>(p.l), p.energy, p.weight, p.is_remainder});
    if (out.trace) {
      const std::size_t keep = std::min<std::size_t>(peaks.size(), cfg.trace.peaks);
      const std::vector<SpectrumPeak> first(peaks.begin(), peaks.begin() + keep);
      const SpectrumTrace tr =
          spectrum_trace(first, cfg.pulse.envelope, cfg.trace.t0_spacing, times);
      for (std::size_t i = 0; i < tr.times.size(); ++i)
        for (std::size_t j = 0; j < tr.l.size(); ++j)
          out.trace->add_row({static_cast<long long>(m), static_cast<long long>(n), tr.times[i],
                              static_cast<long long>(tr.l[j]), tr.intensity[j][i]});
    }
  }
  return out;
}

ResultTable run_oracle(const RunConfig& cfg, int cutoff, int max_l) {
  cfg.validate();
  KVector k;
  const PointSolution s = single_point(cfg, &k);
  const OracleProblem problem{s.pert.eps_k_tau + cfg.model.B, s.pert.eps_k_tau - cfg.model.B,
                              s.pert.chi_k_tau};
  const OracleSolution sol = solve_oracle(problem, cutoff);
  const double ground = sol.ground_energy();

  ResultTable t;
  t.kind = TableKind::Oracle;
  t.columns = {"m",          "n", "l", "energy_analytic_meV", "energy_oracle_meV",
               "weight_analytic", "weight_oracle"};
  for (const auto& [m, n] : cfg.references) {
    const ShakeupExpansion e =
        shakeup_amplitudes(s.inst, EigenstateLabel{m, n, k}, cfg.tol.truncation);
    const auto overlaps = overlap_amplitudes(sol, m, n);
    const auto levels = sol.sector_eigenvalues(m - n);
    const int top = std::min<int>({max_l, static_cast<int>(overlaps.size()) - 1, e.l_max});
    for (int l = 0; l <= top; ++l) {
      t.add_row({static_cast<long long>(m), static_cast<long long>(n), static_cast<long long>(l),
                 peak_energy(e, s.inst, cfg.model.B, l, EnergyConvention::FullOccupation),
                 levels[l] - ground, e.weight(l), overlaps[l]});
    }
  }
  return t;
}

} // namespace magnon
