#pragma once

#include <vector>

#include "magnon/shakeup.hpp"

namespace magnon {

enum class LogBase { Natural, Two };

struct EntanglementResult {
  double entropy = 0.0;
  int schmidt_rank_eff = 1;
  KVector k;
  int m = 0;
  int n = 0;
};

/// -sum_l p_l log p_l over p_l = |P(l)|^2 with 0 log 0 = 0; the rank counts
/// p_l > rank_tol. Entropy is reported as exactly 0 when that rank is 1.
EntanglementResult entanglement_entropy(const ShakeupExpansion& exp,
                                        LogBase base = LogBase::Natural,
                                        double rank_tol = 1e-12);

/// PaperForm drops the |delta| eps offset of the occupation-number energy:
///   PaperForm:      2 l eps + delta B
///   FullOccupation: (2 l + |delta|) eps + delta B
enum class EnergyConvention { PaperForm, FullOccupation };

struct SpectrumPeak {
  int l = 0;
  double energy = 0.0;
  double weight = 0.0;
  bool is_remainder = false; // l == mu, the part left in the reference state
};

double peak_energy(const ShakeupExpansion& exp, const InstantBogoliubov& frame, double B, int l,
                   EnergyConvention convention);

std::vector<SpectrumPeak> shakeup_spectrum(
    const ShakeupExpansion& exp, const InstantBogoliubov& frame, double B,
    EnergyConvention convention = EnergyConvention::FullOccupation);

struct EnergyFluctuation {
  double total = 0.0;
  double remainder = 0.0;
  double expelled = 0.0;
};

EnergyFluctuation energy_fluctuation(const ShakeupExpansion& exp, const InstantBogoliubov& frame,
                                     double B,
                                     EnergyConvention convention = EnergyConvention::FullOccupation);

/// Per-peak time profiles weight_l * f(t - l * t0_spacing), where f is the
/// envelope evaluated relative to its own centre.
struct SpectrumTrace {
  std::vector<double> times;
  std::vector<int> l;
  std::vector<std::vector<double>> intensity; // [peak][time]
  double t0_spacing = 1.0;
};

SpectrumTrace spectrum_trace(const std::vector<SpectrumPeak>& peaks, const EnvelopeSpec& envelope,
                             double t0_spacing, const std::vector<double>& times);

} // namespace magnon
