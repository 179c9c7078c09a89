#pragma once

#include "magnon/lattice.hpp"

namespace magnon {

struct StaticBogoliubov;

/// Antiferromagnet with easy-axis anisotropy in a longitudinal field.
/// Energies in meV; B is the Zeeman energy g*mu_B*B.
struct ModelParams {
  double J = 12.0;
  double K = 0.12;
  double B = 0.0;
  double S = 0.5;

  void validate() const;
};

/// Zeeman energy in meV for a field in tesla and spectroscopic factor g.
double zeeman_energy_mev(double field_tesla, double g_factor = 2.0);

enum class EnvelopeKind { Constant, Gaussian };

/// Normalised pulse profile f(tau); tau is dimensionless pulse time.
struct EnvelopeSpec {
  EnvelopeKind kind = EnvelopeKind::Constant;
  double value = 1.0;       // Constant
  double width_coeff = 20.0; // Gaussian: exp(-width_coeff (tau - t0)^2)
  double t0 = 0.0;

  static EnvelopeSpec constant(double value = 1.0);
  static EnvelopeSpec gaussian(double width_coeff = 20.0, double t0 = 0.0);

  double operator()(double tau) const;
  void validate() const;
};

struct PulseParams {
  double deltaJ = 0.0;
  Vec3 field_dir{1.0, 0.0, 0.0};
  EnvelopeSpec envelope;

  static PulseParams in_plane(double deltaJ, double theta, EnvelopeSpec envelope = {});
};

struct BareCoefficients {
  double omega = 0.0;
  cplx g_k{0.0, 0.0};
  double omega_a = 0.0;
  double omega_b = 0.0;
};

struct PerturbedCoefficients {
  double delta_eps = 0.0; // shift of the diagonal energy
  double eps_k_tau = 0.0; // eps_k + delta_eps
  cplx chi_k_tau{0.0, 0.0};
  double Omega_tau = 0.0; // S Z deltaJ f(tau)
};

/// omega = S(Z J + 2K), g_k = S Z J gamma_k.
BareCoefficients bare_coefficients(const ModelParams& m, const LatticeSpec& lat, const KVector& k);

/// Light-induced super-exchange change t^2 (eEa)^2 / (4U(U^2 - (hbar w)^2)).
double delta_j_microscopic(double t_hop, double U, double photon_energy, double eEa);

/// Pulse term expressed in the unperturbed (alpha, beta) quasiparticle frame.
PerturbedCoefficients perturbed_coefficients(const StaticBogoliubov& bog,
                                             const PulseParams& pulse, const ModelParams& m,
                                             const LatticeSpec& lat, const KVector& k, double tau);

} // namespace magnon
