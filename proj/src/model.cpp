#include "magnon/model.hpp"

#include <cmath>

#include "magnon/bogoliubov.hpp"
#include "magnon/error.hpp"

namespace magnon {

void ModelParams::validate() const {
  if (!(J > 0.0)) throw InvalidInput("exchange J must be positive (antiferromagnet)");
  if (!(K >= 0.0)) throw InvalidInput("anisotropy K must be non-negative");
  const double twice = 2.0 * S;
  if (!(S > 0.0) || std::abs(twice - std::round(twice)) > 1e-12)
    throw InvalidInput("spin S must be a positive half-integer");
}

double zeeman_energy_mev(double field_tesla, double g_factor) {
  constexpr double bohr_magneton_mev_per_tesla = 5.7883818060e-2;
  return g_factor * bohr_magneton_mev_per_tesla * field_tesla;
}

EnvelopeSpec EnvelopeSpec::constant(double value) {
  EnvelopeSpec e;
  e.kind = EnvelopeKind::Constant;
  e.value = value;
  return e;
}

EnvelopeSpec EnvelopeSpec::gaussian(double width_coeff, double t0) {
  EnvelopeSpec e;
  e.kind = EnvelopeKind::Gaussian;
  e.width_coeff = width_coeff;
  e.t0 = t0;
  return e;
}

void EnvelopeSpec::validate() const {
  if (kind == EnvelopeKind::Constant && !(value >= 0.0 && value <= 1.0))
    throw InvalidInput("constant envelope value must lie in [0, 1]");
  if (kind == EnvelopeKind::Gaussian && !(width_coeff > 0.0))
    throw InvalidInput("Gaussian envelope width coefficient must be positive");
}

double EnvelopeSpec::operator()(double tau) const {
  validate();
  if (kind == EnvelopeKind::Constant) return value;
  const double dt = tau - t0;
  return std::exp(-width_coeff * dt * dt);
}

PulseParams PulseParams::in_plane(double deltaJ, double theta, EnvelopeSpec envelope) {
  return {deltaJ, in_plane_direction(theta), envelope};
}

BareCoefficients bare_coefficients(const ModelParams& m, const LatticeSpec& lat, const KVector& k) {
  const double Z = lat.coordination();
  BareCoefficients c;
  c.omega = m.S * (Z * m.J + 2.0 * m.K);
  c.g_k = m.S * Z * m.J * gamma_k(lat, k);
  c.omega_a = c.omega + m.B;
  c.omega_b = c.omega - m.B;
  return c;
}

double delta_j_microscopic(double t_hop, double U, double photon_energy, double eEa) {
  if (!(U > 0.0)) throw InvalidInput("Hubbard U must be positive");
  const double denom = 4.0 * U * (U * U - photon_energy * photon_energy);
  if (denom == 0.0) throw ResonancePole("photon energy equals U: super-exchange resonance");
  return t_hop * t_hop * eEa * eEa / denom;
}

PerturbedCoefficients perturbed_coefficients(const StaticBogoliubov& bog,
                                             const PulseParams& pulse, const ModelParams& m,
                                             const LatticeSpec& lat, const KVector& k, double tau) {
  const double Z = lat.coordination();
  PerturbedCoefficients p;
  p.Omega_tau = m.S * Z * pulse.deltaJ * pulse.envelope(tau);

  const double xi0 = xi_k(lat, KVector{}, pulse.field_dir).real();
  const cplx xi = xi_k(lat, k, pulse.field_dir);
  const double xi_mod = std::abs(xi);
  const double angle = bog.phi_k + phase_of(xi);
  const double c2 = std::cosh(2.0 * bog.r_k);
  const double s2 = std::sinh(2.0 * bog.r_k);

  p.delta_eps = p.Omega_tau * (xi0 * c2 + xi_mod * s2 * std::cos(angle));
  p.eps_k_tau = bog.eps_k + p.delta_eps;
  p.chi_k_tau = p.Omega_tau * std::polar(1.0, -bog.phi_k) *
                cplx(xi0 * s2 + xi_mod * c2 * std::cos(angle), xi_mod * std::sin(angle));
  return p;
}

} // namespace magnon
