#include "magnon/observables.hpp"

#include <cmath>
#include <cstdlib>

#include "magnon/error.hpp"

namespace magnon {

EntanglementResult entanglement_entropy(const ShakeupExpansion& exp, LogBase base,
                                        double rank_tol) {
  EntanglementResult r;
  r.k = exp.reference.k;
  r.m = exp.reference.m;
  r.n = exp.reference.n;
  r.schmidt_rank_eff = 0;
  double h = 0.0;
  for (const auto& a : exp.amplitudes) {
    const double p = std::norm(a);
    if (p > 0.0) h -= p * std::log(p);
    if (p > rank_tol) ++r.schmidt_rank_eff;
  }
  if (base == LogBase::Two) h /= std::log(2.0);
  // Rank one at rank_tol is a product state; sub-tolerance lines do not count.
  r.entropy = r.schmidt_rank_eff <= 1 ? 0.0 : std::max(0.0, h);
  return r;
}

double peak_energy(const ShakeupExpansion& exp, const InstantBogoliubov& frame, double B, int l,
                   EnergyConvention convention) {
  const double eps = frame.eps_k_tau_diag;
  const int ladder = convention == EnergyConvention::FullOccupation ? 2 * l + std::abs(exp.delta)
                                                                    : 2 * l;
  return ladder * eps + exp.delta * B;
}

std::vector<SpectrumPeak> shakeup_spectrum(const ShakeupExpansion& exp,
                                           const InstantBogoliubov& frame, double B,
                                           EnergyConvention convention) {
  std::vector<SpectrumPeak> peaks;
  peaks.reserve(exp.amplitudes.size());
  for (int l = 0; l < static_cast<int>(exp.amplitudes.size()); ++l) {
    peaks.push_back({l, peak_energy(exp, frame, B, l, convention), exp.weight(l), l == exp.mu});
  }
  return peaks;
}

EnergyFluctuation energy_fluctuation(const ShakeupExpansion& exp, const InstantBogoliubov& frame,
                                     double B, EnergyConvention convention) {
  EnergyFluctuation f;
  for (const auto& p : shakeup_spectrum(exp, frame, B, convention)) {
    const double contribution = p.weight * p.energy;
    (p.is_remainder ? f.remainder : f.expelled) += contribution;
  }
  f.total = f.remainder + f.expelled;
  return f;
}

SpectrumTrace spectrum_trace(const std::vector<SpectrumPeak>& peaks, const EnvelopeSpec& envelope,
                             double t0_spacing, const std::vector<double>& times) {
  if (times.empty()) throw InvalidInput("trace time grid is empty");
  if (!(t0_spacing > 0.0)) throw InvalidInput("t0 spacing must be positive");
  envelope.validate();

  SpectrumTrace trace;
  trace.times = times;
  trace.t0_spacing = t0_spacing;
  for (const auto& p : peaks) {
    const double centre = t0_spacing * p.l;
    std::vector<double> row(times.size());
    for (std::size_t i = 0; i < times.size(); ++i)
      row[i] = p.weight * envelope(times[i] - centre + envelope.t0);
    trace.l.push_back(p.l);
    trace.intensity.push_back(std::move(row));
  }
  return trace;
}

} // namespace magnon
