#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "magnon/sweep.hpp"

namespace magnon {

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Inputs to the microscopic super-exchange estimate.
struct MicroscopicExchange {
  double t_hop = 0.0;
  double U = 1.0;
  double photon_energy = 0.0;
  double eEa = 0.0;
};

enum class KSource { Path, List };
enum class OutputFormat { Csv, Json };

struct PathConfig {
  KSource source = KSource::Path;
  PathPreset preset = PathPreset::GXMGR;
  int samples = 16;
  std::vector<Waypoint> waypoints; // Custom preset
  std::vector<KVector> k_list;     // KSource::List

  std::vector<KVector> points(const LatticeSpec& lat) const;
};

struct OutputConfig {
  OutputFormat format = OutputFormat::Csv;
  std::string path = "-";
  int precision = 12;
};

struct TraceConfig {
  bool enabled = false;
  std::string path;
  double t_min = -1.0;
  double t_max = 4.0;
  int t_count = 501;
  int peaks = 4;
  double t0_spacing = 1.0;

  std::vector<double> times() const;
};

struct RunConfig {
  ModelParams model;
  LatticeSpec lattice = LatticeSpec::simple_cubic();
  PulseParams pulse;          // deltaJ resolved by effective_delta_j()
  std::optional<double> delta_j_direct;
  std::optional<MicroscopicExchange> exchange;
  double tau = 0.0;
  PathConfig path;
  std::vector<double> thetas = uniform_theta_grid(36);
  std::vector<std::pair<int, int>> references{{0, 0}, {1, 0}, {1, 1}};
  Tolerances tol;
  OutputConfig output;
  TraceConfig trace;
  int threads = 0; // 0 = auto
  LogBase log_base = LogBase::Natural;
  EnergyConvention energy_convention = EnergyConvention::FullOccupation;

  /// Direct deltaJ wins over the microscopic estimate; neither means 0.
  double effective_delta_j() const;
  PulseParams resolved_pulse() const;
  /// Throws ConfigError.
  void validate() const;
};

/// "fig2": Gamma-X-M-Gamma-R sweep, f = 1. "fig3": single k = (0, pi/2, 0),
/// field along k, Gaussian envelope with width coefficient 20.
RunConfig preset(const std::string& name);

/// Overlays an INI-style file on top of base. Unknown keys are errors.
RunConfig parse_config(std::istream& in, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string serialize_config(const RunConfig& cfg);

} // namespace magnon
