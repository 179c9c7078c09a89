#pragma once

#include <optional>
#include <vector>

#include "magnon/model.hpp"

namespace magnon {

/// Default distance from |Gamma| = 1 at which a frame is declared unstable.
inline constexpr double kDefaultStabilityMargin = 1e-12;

/// SU(1,1) frame of the unperturbed Hamiltonian:
///   a = eta alpha + zeta beta^dag,  b^dag = zeta^* alpha + eta beta^dag.
struct StaticBogoliubov {
  double r_k = 0.0;
  double phi_k = 0.0;
  double eta_k = 1.0;
  cplx zeta_k{0.0, 0.0};
  double eps_k = 0.0;
  double eps_alpha = 0.0;
  double eps_beta = 0.0;
  cplx Gamma_k{0.0, 0.0};
};

/// Frame that diagonalises the instantaneous Hamiltonian, relative to the
/// unperturbed quasiparticles.
struct InstantBogoliubov {
  double Theta_k = 0.0;
  double Phi_k = 0.0;
  double u_k = 1.0;
  cplx v_k{0.0, 0.0};
  double eps_k_tau = 0.0;      // diagonal coefficient before mixing
  double eps_k_tau_diag = 0.0; // instantaneous dispersion
  double eps_alpha_tau = 0.0;
  double eps_beta_tau = 0.0;
  cplx Upsilon_k{0.0, 0.0};

  /// Frame built directly from (Theta, Phi); used by synthetic tests.
  static InstantBogoliubov from_squeeze(double Theta, double Phi = 0.0, double eps_diag = 1.0,
                                        double B = 0.0);
};

/// (1 - sqrt(1 - x^2)) / x evaluated without cancellation; 0 at x = 0.
double squeeze_tanh(double coupling_ratio);

StaticBogoliubov static_diagonalize(const BareCoefficients& bare,
                                    double margin = kDefaultStabilityMargin);

InstantBogoliubov instant_diagonalize(const PerturbedCoefficients& pert, double B,
                                      double margin = kDefaultStabilityMargin);

/// Every frame at one k-point, unperturbed and instantaneous.
struct PointSolution {
  KVector k;
  BareCoefficients bare;
  StaticBogoliubov bog;
  PerturbedCoefficients pert;
  InstantBogoliubov inst;
};

/// Throws InstabilityError tagged with k.
PointSolution solve_point(const ModelParams& m, const PulseParams& pulse, const LatticeSpec& lat,
                          const KVector& k, double tau, double margin = kDefaultStabilityMargin);

struct DispersionPoint {
  KVector k;
  double eps_before = 0.0;
  double eps_after = 0.0;
};

/// Bare eps_k and the instantaneous dispersion at f = 1 along the path.
/// Without a pulse the two coincide.
std::vector<DispersionPoint> dispersion_curve(const ModelParams& m,
                                              const std::optional<PulseParams>& pulse,
                                              const LatticeSpec& lat, const KPath& path,
                                              double margin = kDefaultStabilityMargin);

} // namespace magnon
