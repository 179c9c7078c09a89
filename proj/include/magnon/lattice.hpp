#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace magnon {

using Vec3 = std::array<double, 3>;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

constexpr double dot(const Vec3& a, const Vec3& b) noexcept {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

// arg(0) is taken as 0.
inline double phase_of(cplx z) noexcept {
  return (z.real() == 0.0 && z.imag() == 0.0) ? 0.0 : std::arg(z);
}

enum class LatticeKind { SimpleCubic, SquareLattice, LinearChain, Custom };

/// Nearest-neighbour geometry of a Bravais spin lattice. The neighbour set
/// must be inversion symmetric.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::SimpleCubic;
  double a = 1.0;
  std::vector<Vec3> deltas;

  int coordination() const noexcept { return static_cast<int>(deltas.size()); }

  static LatticeSpec simple_cubic(double a = 1.0);
  static LatticeSpec square(double a = 1.0);
  static LatticeSpec linear_chain(double a = 1.0);
  /// Throws InvalidInput unless deltas is non-empty and closed under negation.
  static LatticeSpec custom(std::vector<Vec3> deltas, double a = 1.0);

  void validate() const;
};

std::string to_string(LatticeKind kind);
LatticeKind lattice_kind_from_string(const std::string& name);

/// Crystal momentum in radians per unit length, each component folded into
/// (-pi/a, pi/a].
class KVector {
public:
  KVector() = default;
  explicit KVector(const Vec3& components, double a = 1.0);

  const Vec3& components() const noexcept { return c_; }
  double operator[](std::size_t i) const noexcept { return c_[i]; }

  friend bool operator==(const KVector&, const KVector&) = default;

private:
  Vec3 c_{0.0, 0.0, 0.0};
};

/// (1/Z) sum_delta exp(i k.delta)
cplx gamma_k(const LatticeSpec& lattice, const KVector& k);

/// (1/(Z a^2)) sum_delta (delta.e)^2 exp(i k.delta) for unit field direction
/// e. Non-unit directions are normalised; a zero vector throws InvalidInput.
cplx xi_k(const LatticeSpec& lattice, const KVector& k, const Vec3& field_dir);

/// In-plane optical field direction (cos theta, sin theta, 0).
Vec3 in_plane_direction(double theta);

struct Waypoint {
  std::string label;
  KVector k;
};

struct KPath {
  std::vector<Waypoint> waypoints;
  int samples_per_segment = 1;
  double a = 1.0;

  /// Linear interpolation with samples_per_segment points per segment
  /// (segment start included) plus the final waypoint.
  std::vector<KVector> points() const;
  /// Index into points() of every waypoint.
  std::vector<std::size_t> waypoint_indices() const;

  void validate() const;
};

enum class PathPreset { GXMGR, Custom };

/// GXMGR: Gamma -> X(pi,0,0) -> M(pi,pi,0) -> Gamma -> R(pi,pi,pi), in 1/a.
/// Custom requires explicit waypoints.
KPath make_kpath(const LatticeSpec& lattice, PathPreset preset, int samples,
                 std::vector<Waypoint> custom_waypoints = {});

} // namespace magnon
