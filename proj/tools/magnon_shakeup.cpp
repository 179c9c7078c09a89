// Command-line driver: dispersion, entanglement map and shake-up spectrum
// tables for the light-pulsed two-sublattice antiferromagnet.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "magnon/error.hpp"
#include "magnon/runs.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitConfig = 2;
constexpr int kExitUnstable = 3;

struct Flags {
  std::string config;
  std::string preset;
  std::string output;
  std::string format;
  std::string threads;
  std::string log_base;
  std::string energy_convention;
  std::vector<double> k_point;
  double theta_deg = 0.0;
  bool theta_set = false;
  std::string trace;
  int cutoff = 40;
};

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--config", f.config, "INI-style run configuration");
  cmd->add_option("--preset", f.preset, "Parameter preset (fig2 or fig3)")
      ->check(CLI::IsMember({"fig2", "fig3"}));
  cmd->add_option("--output", f.output, "Output file ('-' for stdout)");
  cmd->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--threads", f.threads, "Worker threads (n or auto)");
  cmd->add_option("--log-base", f.log_base, "Entropy logarithm base (e or 2)")
      ->check(CLI::IsMember({"e", "2"}));
  cmd->add_option("--energy-convention", f.energy_convention, "paper or full")
      ->check(CLI::IsMember({"paper", "full"}));
}

void add_point(CLI::App* cmd, Flags& f) {
  cmd->add_option("--k", f.k_point, "Single k-point kx ky kz in units of pi/a")->expected(3);
  cmd->add_option_function<double>(
      "--theta-deg", [&f](double v) { f.theta_deg = v, f.theta_set = true; },
      "In-plane field angle in degrees");
}

magnon::RunConfig build_config(const Flags& f) {
  using namespace magnon;
  RunConfig cfg = f.preset.empty() ? RunConfig{} : preset(f.preset);
  if (!f.config.empty()) cfg = load_config(f.config, cfg);

  // Flags are applied as a config overlay so they share its validation.
  std::ostringstream overlay;
  overlay.precision(17);
  if (!f.output.empty()) overlay << "[output]\npath = " << f.output << "\n";
  if (!f.format.empty()) overlay << "[output]\nformat = " << f.format << "\n";
  if (!f.threads.empty()) overlay << "[run]\nthreads = " << f.threads << "\n";
  if (!f.log_base.empty()) overlay << "[run]\nlog_base = " << f.log_base << "\n";
  if (!f.energy_convention.empty())
    overlay << "[run]\nenergy_convention = " << f.energy_convention << "\n";
  if (!f.k_point.empty())
    overlay << "[path]\nsource = list\nk_units = pi_over_a\nk_list = " << f.k_point[0] << ' '
            << f.k_point[1] << ' ' << f.k_point[2] << "\n";
  if (f.theta_set) overlay << "[sweep]\ntheta_deg = " << f.theta_deg << "\n";
  if (!f.trace.empty()) overlay << "[trace]\nenabled = true\npath = " << f.trace << "\n";

  // read_ini rejects repeated section headers; merge them first.
  std::map<std::string, std::vector<std::string>> sections;
  std::string current;
  std::istringstream lines(overlay.str());
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.front() == '[') current = line;
    else if (!line.empty()) sections[current].push_back(line);
  }
  std::ostringstream merged;
  for (const auto& [head, body] : sections) {
    merged << head << "\n";
    for (const auto& l : body) merged << l << "\n";
  }
  std::istringstream in(merged.str());
  return parse_config(in, cfg);
}

void emit(const magnon::ResultTable& table, const magnon::RunConfig& cfg,
          const std::string& path) {
  auto write = [&](std::ostream& os) {
    if (cfg.output.format == magnon::OutputFormat::Json)
      magnon::write_json(os, table, cfg.output.precision);
    else
      magnon::write_csv(os, table, cfg.output.precision);
  };
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw magnon::ConfigError("cannot write '" + path + "'");
  write(out);
}

int finish(const magnon::ResultTable& table) {
  if (table.flagged > 0)
    std::cerr << "warning: " << table.flagged << " unstable point(s) flagged\n";
  if (!table.rows.empty() && table.flagged == table.rows.size()) {
    std::cerr << "error: every requested point is unstable\n";
    return kExitUnstable;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Magnon shake-up spectra and magnon-magnon entanglement after a light pulse"};
  app.require_subcommand(1);

  Flags f;
  auto* dispersion = app.add_subcommand("dispersion", "Magnon dispersion before and after the pulse");
  auto* entangle = app.add_subcommand("entangle", "Entanglement entropy over k-path and field angles");
  auto* spectrum = app.add_subcommand("spectrum", "Shake-up peaks at one k-point");
  auto* oracle = app.add_subcommand("oracle", "Compare against truncated Fock-space diagonalization");
  oracle->group("");
  for (auto* cmd : {dispersion, entangle, spectrum, oracle}) add_common(cmd, f);
  for (auto* cmd : {spectrum, oracle}) add_point(cmd, f);
  spectrum->add_option("--trace", f.trace, "Also write per-peak time traces to this file");
  oracle->add_option("--cutoff", f.cutoff, "Quanta per mode")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    const magnon::RunConfig cfg = build_config(f);
    if (dispersion->parsed()) {
      const auto t = magnon::run_dispersion(cfg);
      emit(t, cfg, cfg.output.path);
      return finish(t);
    }
    if (entangle->parsed()) {
      const auto t = magnon::run_entanglement(cfg);
      emit(t, cfg, cfg.output.path);
      return finish(t);
    }
    if (spectrum->parsed()) {
      const auto run = magnon::run_spectrum(cfg);
      emit(run.peaks, cfg, cfg.output.path);
      if (run.trace) {
        if (cfg.trace.path.empty())
          std::cerr << "note: trace enabled but trace.path is empty; trace not written\n";
        else
          emit(*run.trace, cfg, cfg.trace.path);
      }
      return kExitOk;
    }
    const auto t = magnon::run_oracle(cfg, f.cutoff);
    emit(t, cfg, cfg.output.path);
    return kExitOk;
  } catch (const magnon::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const magnon::InstabilityError& e) {
    std::cerr << "instability: " << e.what() << "\n";
    return kExitUnstable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
