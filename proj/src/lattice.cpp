#include "magnon/lattice.hpp"

#include <algorithm>
#include <cmath>

#include "magnon/error.hpp"

namespace magnon {

namespace {

std::vector<Vec3> axis_pairs(int dims, double a) {
  std::vector<Vec3> out;
  for (int d = 0; d < dims; ++d) {
    Vec3 e{0.0, 0.0, 0.0};
    e[d] = a;
    out.push_back(e);
    e[d] = -a;
    out.push_back(e);
  }
  return out;
}

// Fold x into (-half, half].
double fold(double x, double half) {
  if (x > -half && x <= half) return x;
  const double period = 2.0 * half;
  double y = std::fmod(x + half, period);
  if (y <= 0.0) y += period;
  return y - half;
}

} // namespace

LatticeSpec LatticeSpec::simple_cubic(double a) {
  return {LatticeKind::SimpleCubic, a, axis_pairs(3, a)};
}

LatticeSpec LatticeSpec::square(double a) {
  return {LatticeKind::SquareLattice, a, axis_pairs(2, a)};
}

LatticeSpec LatticeSpec::linear_chain(double a) {
  return {LatticeKind::LinearChain, a, axis_pairs(1, a)};
}

LatticeSpec LatticeSpec::custom(std::vector<Vec3> deltas, double a) {
  LatticeSpec lat{LatticeKind::Custom, a, std::move(deltas)};
  lat.validate();
  return lat;
}

void LatticeSpec::validate() const {
  if (!(a > 0.0)) throw InvalidInput("lattice constant must be positive");
  if (deltas.empty()) throw InvalidInput("lattice has no neighbour vectors");
  for (const auto& d : deltas) {
    const bool has_partner = std::any_of(deltas.begin(), deltas.end(), [&](const Vec3& e) {
      return std::abs(d[0] + e[0]) < 1e-12 && std::abs(d[1] + e[1]) < 1e-12 &&
             std::abs(d[2] + e[2]) < 1e-12;
    });
    if (!has_partner) throw InvalidInput("neighbour vectors must come in +/- pairs");
    if (dot(d, d) == 0.0) throw InvalidInput("zero-length neighbour vector");
  }
}

std::string to_string(LatticeKind kind) {
  switch (kind) {
  case LatticeKind::SimpleCubic: return "simple_cubic";
  case LatticeKind::SquareLattice: return "square";
  case LatticeKind::LinearChain: return "chain";
  case LatticeKind::Custom: return "custom";
  }
  return "custom";
}

LatticeKind lattice_kind_from_string(const std::string& name) {
  if (name == "simple_cubic") return LatticeKind::SimpleCubic;
  if (name == "square") return LatticeKind::SquareLattice;
  if (name == "chain") return LatticeKind::LinearChain;
  if (name == "custom") return LatticeKind::Custom;
  throw InvalidInput("unknown lattice kind '" + name + "'");
}

KVector::KVector(const Vec3& components, double a) {
  const double half = kPi / a;
  for (std::size_t i = 0; i < 3; ++i) c_[i] = fold(components[i], half);
}

cplx gamma_k(const LatticeSpec& lattice, const KVector& k) {
  cplx sum{0.0, 0.0};
  for (const auto& d : lattice.deltas) sum += std::polar(1.0, dot(k.components(), d));
  return sum / static_cast<double>(lattice.coordination());
}

cplx xi_k(const LatticeSpec& lattice, const KVector& k, const Vec3& field_dir) {
  const double norm = std::sqrt(dot(field_dir, field_dir));
  if (!(norm > 0.0)) throw InvalidInput("field direction has zero length");
  const Vec3 e{field_dir[0] / norm, field_dir[1] / norm, field_dir[2] / norm};
  cplx sum{0.0, 0.0};
  for (const auto& d : lattice.deltas) {
    const double proj = dot(d, e);
    sum += proj * proj * std::polar(1.0, dot(k.components(), d));
  }
  return sum / (lattice.coordination() * lattice.a * lattice.a);
}

Vec3 in_plane_direction(double theta) { return {std::cos(theta), std::sin(theta), 0.0}; }

void KPath::validate() const {
  if (waypoints.size() < 2) throw InvalidInput("k-path needs at least two waypoints");
  if (samples_per_segment < 1) throw InvalidInput("k-path samples per segment must be >= 1");
}

std::vector<KVector> KPath::points() const {
  validate();
  std::vector<KVector> out;
  out.reserve((waypoints.size() - 1) * samples_per_segment + 1);
  for (std::size_t s = 0; s + 1 < waypoints.size(); ++s) {
    const Vec3& from = waypoints[s].k.components();
    const Vec3& to = waypoints[s + 1].k.components();
    for (int i = 0; i < samples_per_segment; ++i) {
      const double t = static_cast<double>(i) / samples_per_segment;
      Vec3 p;
      for (std::size_t c = 0; c < 3; ++c) p[c] = from[c] + t * (to[c] - from[c]);
      out.emplace_back(p, a);
    }
  }
  out.push_back(waypoints.back().k);
  return out;
}

std::vector<std::size_t> KPath::waypoint_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t s = 0; s < waypoints.size(); ++s) idx.push_back(s * samples_per_segment);
  return idx;
}

KPath make_kpath(const LatticeSpec& lattice, PathPreset preset, int samples,
                 std::vector<Waypoint> custom_waypoints) {
  if (samples < 1) throw InvalidInput("samples must be >= 1");
  KPath path;
  path.samples_per_segment = samples;
  path.a = lattice.a;
  if (preset == PathPreset::Custom) {
    if (custom_waypoints.empty()) throw InvalidInput("custom k-path requires explicit waypoints");
    path.waypoints = std::move(custom_waypoints);
  } else {
    const double p = kPi / lattice.a;
    const double a = lattice.a;
    path.waypoints = {{"G", KVector({0, 0, 0}, a)},
                      {"X", KVector({p, 0, 0}, a)},
                      {"M", KVector({p, p, 0}, a)},
                      {"G", KVector({0, 0, 0}, a)},
                      {"R", KVector({p, p, p}, a)}};
  }
  path.validate();
  return path;
}

} // namespace magnon
