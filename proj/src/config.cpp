#include "magnon/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <boost/algorithm/string.hpp>
#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "magnon/error.hpp"

namespace magnon {

namespace pt = boost::property_tree;

namespace {

std::string exact(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double to_real(const std::string& key, const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("'" + key + "': expected a number, got '" + text + "'");
  }
}

int to_int(const std::string& key, const std::string& text) {
  const double v = to_real(key, text);
  if (v != std::floor(v)) throw ConfigError("'" + key + "': expected an integer");
  return static_cast<int>(v);
}

std::vector<std::string> split(const std::string& text, const char* seps) {
  std::vector<std::string> parts;
  boost::split(parts, text, boost::is_any_of(seps), boost::token_compress_on);
  std::vector<std::string> out;
  for (auto& p : parts) {
    boost::trim(p);
    if (!p.empty()) out.push_back(p);
  }
  return out;
}

std::vector<double> reals(const std::string& key, const std::string& text) {
  std::vector<double> out;
  for (const auto& tok : split(text, " ,\t")) out.push_back(to_real(key, tok));
  return out;
}

Vec3 vec3(const std::string& key, const std::string& text) {
  const auto v = reals(key, text);
  if (v.size() != 3) throw ConfigError("'" + key + "': expected three components");
  return {v[0], v[1], v[2]};
}

std::string vec3_text(const Vec3& v) { return exact(v[0]) + " " + exact(v[1]) + " " + exact(v[2]); }

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  throw ConfigError("'" + key + "': expected true/false");
}

// Tracks which keys of the file were consumed so typos are reported.
class Reader {
public:
  explicit Reader(const pt::ptree& tree) : tree_(tree) {}

  std::optional<std::string> get(const std::string& key) {
    seen_.insert(key);
    if (auto v = tree_.get_optional<std::string>(pt::ptree::path_type(key, '.'))) {
      std::string s = *v;
      boost::trim(s);
      return s;
    }
    return std::nullopt;
  }

  void check_unknown() const {
    for (const auto& [section, body] : tree_) {
      if (body.empty()) throw ConfigError("key '" + section + "' must live inside a section");
      for (const auto& [key, value] : body) {
        (void)value;
        const std::string full = section + "." + key;
        if (!seen_.count(full)) throw ConfigError("unknown config key '" + full + "'");
      }
    }
  }

private:
  const pt::ptree& tree_;
  std::set<std::string> seen_;
};

double k_scale(const std::string& units, double a) {
  if (units == "pi_over_a") return kPi / a;
  if (units == "inverse_a") return 1.0 / a;
  throw ConfigError("path.k_units must be pi_over_a or inverse_a");
}

} // namespace

std::vector<KVector> PathConfig::points(const LatticeSpec& lat) const {
  if (source == KSource::List) return k_list;
  return make_kpath(lat, preset, samples, waypoints).points();
}

std::vector<double> TraceConfig::times() const {
  if (t_count < 1) throw ConfigError("trace.t_count must be >= 1");
  std::vector<double> t(static_cast<std::size_t>(t_count));
  for (int i = 0; i < t_count; ++i)
    t[i] = t_count == 1 ? t_min : t_min + (t_max - t_min) * i / (t_count - 1);
  return t;
}

double RunConfig::effective_delta_j() const {
  if (delta_j_direct) return *delta_j_direct;
  if (exchange)
    return delta_j_microscopic(exchange->t_hop, exchange->U, exchange->photon_energy,
                               exchange->eEa);
  return 0.0;
}

PulseParams RunConfig::resolved_pulse() const {
  PulseParams p = pulse;
  p.deltaJ = effective_delta_j();
  return p;
}

void RunConfig::validate() const {
  try {
    model.validate();
    lattice.validate();
    pulse.envelope.validate();
    (void)effective_delta_j();
    if (path.source == KSource::List && path.k_list.empty())
      throw ConfigError("k-point list is empty");
    if (path.points(lattice).empty()) throw ConfigError("no k-points requested");
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  if (thetas.empty()) throw ConfigError("theta grid is empty");
  if (references.empty()) throw ConfigError("no reference states given");
  for (const auto& [m, n] : references)
    if (m < 0 || n < 0) throw ConfigError("reference occupations must be non-negative");
  for (double t : {tol.truncation, tol.rank, tol.stability})
    if (!(t > 0.0 && t < 1.0)) throw ConfigError("tolerances must lie in (0, 1)");
  if (output.precision < 1 || output.precision > 17)
    throw ConfigError("output.precision must be in 1..17");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (trace.enabled) {
    if (!(trace.t0_spacing > 0.0)) throw ConfigError("trace.t0_spacing must be positive");
    if (trace.peaks < 1) throw ConfigError("trace.peaks must be >= 1");
    (void)trace.times();
  }
}

RunConfig preset(const std::string& name) {
  RunConfig cfg;
  cfg.model = ModelParams{12.0, 0.01 * 12.0, 0.0, 0.5};
  cfg.lattice = LatticeSpec::simple_cubic();
  cfg.delta_j_direct = -0.8 * cfg.model.J;
  cfg.references = {{0, 0}, {1, 0}, {1, 1}};
  if (name == "fig2") {
    cfg.pulse.envelope = EnvelopeSpec::constant(1.0);
    cfg.path.source = KSource::Path;
    cfg.path.preset = PathPreset::GXMGR;
    cfg.path.samples = 16;
    cfg.thetas = uniform_theta_grid(36);
  } else if (name == "fig3") {
    cfg.pulse.envelope = EnvelopeSpec::gaussian(20.0, 0.0);
    cfg.pulse.field_dir = {0.0, 1.0, 0.0};
    cfg.tau = 0.0;
    cfg.path.source = KSource::List;
    cfg.path.k_list = {KVector({0.0, kPi / 2.0, 0.0})};
    cfg.thetas = {kPi / 2.0};
    cfg.trace.enabled = true;
  } else {
    throw ConfigError("unknown preset '" + name + "' (expected fig2 or fig3)");
  }
  cfg.pulse.deltaJ = cfg.effective_delta_j();
  return cfg;
}

RunConfig parse_config(std::istream& in, RunConfig cfg) {
  pt::ptree tree;
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config syntax: ") + e.what());
  }
  Reader r(tree);

  if (auto v = r.get("model.J")) cfg.model.J = to_real("model.J", *v);
  if (auto v = r.get("model.K")) cfg.model.K = to_real("model.K", *v);
  if (auto v = r.get("model.B")) cfg.model.B = to_real("model.B", *v);
  if (auto v = r.get("model.S")) cfg.model.S = to_real("model.S", *v);

  {
    const auto kind = r.get("lattice.kind");
    const auto a_text = r.get("lattice.a");
    const auto deltas = r.get("lattice.deltas");
    const double a = a_text ? to_real("lattice.a", *a_text) : cfg.lattice.a;
    const LatticeKind k = kind ? lattice_kind_from_string(*kind) : cfg.lattice.kind;
    try {
      switch (k) {
      case LatticeKind::SimpleCubic: cfg.lattice = LatticeSpec::simple_cubic(a); break;
      case LatticeKind::SquareLattice: cfg.lattice = LatticeSpec::square(a); break;
      case LatticeKind::LinearChain: cfg.lattice = LatticeSpec::linear_chain(a); break;
      case LatticeKind::Custom: {
        std::vector<Vec3> ds = cfg.lattice.deltas;
        if (deltas) {
          ds.clear();
          for (const auto& d : split(*deltas, ";")) ds.push_back(vec3("lattice.deltas", d));
        } else if (cfg.lattice.kind != LatticeKind::Custom) {
          throw ConfigError("custom lattice needs lattice.deltas");
        }
        cfg.lattice = LatticeSpec::custom(std::move(ds), a);
        break;
      }
      }
    } catch (const InvalidInput& e) {
      throw ConfigError(e.what());
    }
    if (deltas && k != LatticeKind::Custom)
      throw ConfigError("lattice.deltas is only valid for kind = custom");
  }

  if (auto v = r.get("pulse.delta_J")) cfg.delta_j_direct = to_real("pulse.delta_J", *v);
  if (auto v = r.get("pulse.field_dir")) cfg.pulse.field_dir = vec3("pulse.field_dir", *v);
  if (auto v = r.get("pulse.envelope")) {
    if (*v == "constant") cfg.pulse.envelope.kind = EnvelopeKind::Constant;
    else if (*v == "gaussian") cfg.pulse.envelope.kind = EnvelopeKind::Gaussian;
    else throw ConfigError("pulse.envelope must be constant or gaussian");
  }
  if (auto v = r.get("pulse.envelope_value"))
    cfg.pulse.envelope.value = to_real("pulse.envelope_value", *v);
  if (auto v = r.get("pulse.width_coeff"))
    cfg.pulse.envelope.width_coeff = to_real("pulse.width_coeff", *v);
  if (auto v = r.get("pulse.t0")) cfg.pulse.envelope.t0 = to_real("pulse.t0", *v);
  if (auto v = r.get("pulse.tau")) cfg.tau = to_real("pulse.tau", *v);

  {
    const auto t = r.get("exchange.t_hop");
    const auto U = r.get("exchange.U");
    const auto w = r.get("exchange.photon_energy");
    const auto e = r.get("exchange.eEa");
    if (t || U || w || e) {
      MicroscopicExchange x = cfg.exchange.value_or(MicroscopicExchange{});
      if (t) x.t_hop = to_real("exchange.t_hop", *t);
      if (U) x.U = to_real("exchange.U", *U);
      if (w) x.photon_energy = to_real("exchange.photon_energy", *w);
      if (e) x.eEa = to_real("exchange.eEa", *e);
      cfg.exchange = x;
    }
  }

  {
    const std::string units = r.get("path.k_units").value_or("pi_over_a");
    const double scale = k_scale(units, cfg.lattice.a);
    if (auto v = r.get("path.source")) {
      if (*v == "path") cfg.path.source = KSource::Path;
      else if (*v == "list") cfg.path.source = KSource::List;
      else throw ConfigError("path.source must be path or list");
    }
    if (auto v = r.get("path.preset")) {
      if (*v == "GXMGR") cfg.path.preset = PathPreset::GXMGR;
      else if (*v == "custom") cfg.path.preset = PathPreset::Custom;
      else throw ConfigError("path.preset must be GXMGR or custom");
    }
    if (auto v = r.get("path.samples")) cfg.path.samples = to_int("path.samples", *v);
    if (auto v = r.get("path.waypoints")) {
      cfg.path.waypoints.clear();
      for (const auto& item : split(*v, ";")) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
          throw ConfigError("path.waypoints entries look like 'label: kx ky kz'");
        std::string label = item.substr(0, colon);
        boost::trim(label);
        Vec3 k = vec3("path.waypoints", item.substr(colon + 1));
        for (auto& c : k) c *= scale;
        cfg.path.waypoints.push_back({label, KVector(k, cfg.lattice.a)});
      }
    }
    if (auto v = r.get("path.k_list")) {
      cfg.path.k_list.clear();
      for (const auto& item : split(*v, ";")) {
        Vec3 k = vec3("path.k_list", item);
        for (auto& c : k) c *= scale;
        cfg.path.k_list.emplace_back(k, cfg.lattice.a);
      }
    }
  }

  {
    const auto values = r.get("sweep.theta_values");
    const auto degrees = r.get("sweep.theta_deg");
    const auto count = r.get("sweep.theta_count");
    if (values) cfg.thetas = reals("sweep.theta_values", *values);
    else if (degrees) {
      cfg.thetas.clear();
      for (double d : reals("sweep.theta_deg", *degrees)) cfg.thetas.push_back(d * kPi / 180.0);
    } else if (count) {
      const int c = to_int("sweep.theta_count", *count);
      if (c < 1) throw ConfigError("sweep.theta_count must be >= 1");
      cfg.thetas = uniform_theta_grid(c);
    }
    if (auto v = r.get("sweep.references")) {
      cfg.references.clear();
      for (const auto& item : split(*v, ";")) {
        const auto mn = reals("sweep.references", item);
        if (mn.size() != 2) throw ConfigError("sweep.references entries look like 'm n'");
        cfg.references.emplace_back(static_cast<int>(mn[0]), static_cast<int>(mn[1]));
      }
    }
  }

  if (auto v = r.get("tolerances.truncation")) cfg.tol.truncation = to_real("tolerances.truncation", *v);
  if (auto v = r.get("tolerances.rank")) cfg.tol.rank = to_real("tolerances.rank", *v);
  if (auto v = r.get("tolerances.stability")) cfg.tol.stability = to_real("tolerances.stability", *v);

  if (auto v = r.get("output.format")) {
    if (*v == "csv") cfg.output.format = OutputFormat::Csv;
    else if (*v == "json") cfg.output.format = OutputFormat::Json;
    else throw ConfigError("output.format must be csv or json");
  }
  if (auto v = r.get("output.path")) cfg.output.path = *v;
  if (auto v = r.get("output.precision")) cfg.output.precision = to_int("output.precision", *v);

  if (auto v = r.get("trace.enabled")) cfg.trace.enabled = to_bool("trace.enabled", *v);
  if (auto v = r.get("trace.path")) cfg.trace.path = *v;
  if (auto v = r.get("trace.t_min")) cfg.trace.t_min = to_real("trace.t_min", *v);
  if (auto v = r.get("trace.t_max")) cfg.trace.t_max = to_real("trace.t_max", *v);
  if (auto v = r.get("trace.t_count")) cfg.trace.t_count = to_int("trace.t_count", *v);
  if (auto v = r.get("trace.peaks")) cfg.trace.peaks = to_int("trace.peaks", *v);
  if (auto v = r.get("trace.t0_spacing")) cfg.trace.t0_spacing = to_real("trace.t0_spacing", *v);

  if (auto v = r.get("run.threads")) cfg.threads = *v == "auto" ? 0 : to_int("run.threads", *v);
  if (auto v = r.get("run.log_base")) {
    if (*v == "e") cfg.log_base = LogBase::Natural;
    else if (*v == "2") cfg.log_base = LogBase::Two;
    else throw ConfigError("run.log_base must be e or 2");
  }
  if (auto v = r.get("run.energy_convention")) {
    if (*v == "paper") cfg.energy_convention = EnergyConvention::PaperForm;
    else if (*v == "full") cfg.energy_convention = EnergyConvention::FullOccupation;
    else throw ConfigError("run.energy_convention must be paper or full");
  }

  r.check_unknown();
  cfg.pulse.deltaJ = cfg.effective_delta_j();
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in, std::move(base));
}

std::string serialize_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[model]\n"
     << "J = " << exact(cfg.model.J) << "\n"
     << "K = " << exact(cfg.model.K) << "\n"
     << "B = " << exact(cfg.model.B) << "\n"
     << "S = " << exact(cfg.model.S) << "\n\n";

  os << "[lattice]\n"
     << "kind = " << to_string(cfg.lattice.kind) << "\n"
     << "a = " << exact(cfg.lattice.a) << "\n";
  if (cfg.lattice.kind == LatticeKind::Custom) {
    os << "deltas = ";
    for (std::size_t i = 0; i < cfg.lattice.deltas.size(); ++i)
      os << (i ? "; " : "") << vec3_text(cfg.lattice.deltas[i]);
    os << "\n";
  }
  os << "\n[pulse]\n";
  if (cfg.delta_j_direct) os << "delta_J = " << exact(*cfg.delta_j_direct) << "\n";
  os << "field_dir = " << vec3_text(cfg.pulse.field_dir) << "\n"
     << "envelope = "
     << (cfg.pulse.envelope.kind == EnvelopeKind::Constant ? "constant" : "gaussian") << "\n"
     << "envelope_value = " << exact(cfg.pulse.envelope.value) << "\n"
     << "width_coeff = " << exact(cfg.pulse.envelope.width_coeff) << "\n"
     << "t0 = " << exact(cfg.pulse.envelope.t0) << "\n"
     << "tau = " << exact(cfg.tau) << "\n\n";

  if (cfg.exchange) {
    os << "[exchange]\n"
       << "t_hop = " << exact(cfg.exchange->t_hop) << "\n"
       << "U = " << exact(cfg.exchange->U) << "\n"
       << "photon_energy = " << exact(cfg.exchange->photon_energy) << "\n"
       << "eEa = " << exact(cfg.exchange->eEa) << "\n\n";
  }

  const double inv = cfg.lattice.a; // k * a in inverse_a units
  os << "[path]\n"
     << "source = " << (cfg.path.source == KSource::Path ? "path" : "list") << "\n"
     << "preset = " << (cfg.path.preset == PathPreset::GXMGR ? "GXMGR" : "custom") << "\n"
     << "samples = " << cfg.path.samples << "\n"
     << "k_units = inverse_a\n";
  auto scaled = [&](const KVector& k) {
    return Vec3{k[0] * inv, k[1] * inv, k[2] * inv};
  };
  if (!cfg.path.waypoints.empty()) {
    os << "waypoints = ";
    for (std::size_t i = 0; i < cfg.path.waypoints.size(); ++i)
      os << (i ? "; " : "") << cfg.path.waypoints[i].label << ": "
         << vec3_text(scaled(cfg.path.waypoints[i].k));
    os << "\n";
  }
  if (!cfg.path.k_list.empty()) {
    os << "k_list = ";
    for (std::size_t i = 0; i < cfg.path.k_list.size(); ++i)
      os << (i ? "; " : "") << vec3_text(scaled(cfg.path.k_list[i]));
    os << "\n";
  }

  os << "\n[sweep]\ntheta_values = ";
  for (std::size_t i = 0; i < cfg.thetas.size(); ++i) os << (i ? " " : "") << exact(cfg.thetas[i]);
  os << "\nreferences = ";
  for (std::size_t i = 0; i < cfg.references.size(); ++i)
    os << (i ? "; " : "") << cfg.references[i].first << " " << cfg.references[i].second;
  os << "\n\n";

  os << "[tolerances]\n"
     << "truncation = " << exact(cfg.tol.truncation) << "\n"
     << "rank = " << exact(cfg.tol.rank) << "\n"
     << "stability = " << exact(cfg.tol.stability) << "\n\n";

  os << "[output]\n"
     << "format = " << (cfg.output.format == OutputFormat::Csv ? "csv" : "json") << "\n"
     << "path = " << cfg.output.path << "\n"
     << "precision = " << cfg.output.precision << "\n\n";

  os << "[trace]\n"
     << "enabled = " << (cfg.trace.enabled ? "true" : "false") << "\n";
  if (!cfg.trace.path.empty()) os << "path = " << cfg.trace.path << "\n";
  os << "t_min = " << exact(cfg.trace.t_min) << "\n"
     << "t_max = " << exact(cfg.trace.t_max) << "\n"
     << "t_count = " << cfg.trace.t_count << "\n"
     << "peaks = " << cfg.trace.peaks << "\n"
     << "t0_spacing = " << exact(cfg.trace.t0_spacing) << "\n\n";

  os << "[run]\n"
     << "threads = " << (cfg.threads == 0 ? std::string("auto") : std::to_string(cfg.threads))
     << "\n"
     << "log_base = " << (cfg.log_base == LogBase::Natural ? "e" : "2") << "\n"
     << "energy_convention = "
     << (cfg.energy_convention == EnergyConvention::PaperForm ? "paper" : "full") << "\n";
  return os.str();
}

} // namespace magnon
