#include "magnon/bogoliubov.hpp"

#include <cmath>
#include <sstream>

#include "magnon/error.hpp"

namespace magnon {

void InstabilityError::rethrow_at(const KVector& k) const {
  std::ostringstream os;
  os << what() << " at k = (" << k[0] << ", " << k[1] << ", " << k[2] << ")";
  if (dynamic_cast<const SofteningError*>(this) != nullptr)
    throw SofteningError(os.str(), magnitude_, k);
  throw InstabilityError(os.str(), magnitude_, k);
}

double squeeze_tanh(double x) {
  // Rationalised form of (1 - sqrt(1 - x^2)) / x; removes the 0/0 at x = 0.
  return x / (1.0 + std::sqrt(1.0 - x * x));
}

namespace {

void check_ratio(double ratio, double margin, const char* name) {
  if (ratio >= 1.0 - margin) {
    std::ostringstream os;
    os << "unstable magnon frame: |" << name << "| = " << ratio << " >= 1";
    throw InstabilityError(os.str(), ratio);
  }
}

} // namespace

StaticBogoliubov static_diagonalize(const BareCoefficients& bare, double margin) {
  StaticBogoliubov f;
  f.Gamma_k = bare.g_k / bare.omega;
  const double mod = std::abs(f.Gamma_k);
  check_ratio(mod, margin, "Gamma_k");

  f.r_k = std::atanh(squeeze_tanh(mod));
  f.phi_k = kPi - phase_of(f.Gamma_k);
  f.eta_k = std::cosh(f.r_k);
  f.zeta_k = std::polar(std::sinh(f.r_k), f.phi_k);
  f.eps_k = bare.omega * (std::cosh(2.0 * f.r_k) - mod * std::sinh(2.0 * f.r_k));
  const double B = 0.5 * (bare.omega_a - bare.omega_b);
  f.eps_alpha = f.eps_k + B;
  f.eps_beta = f.eps_k - B;
  return f;
}

InstantBogoliubov instant_diagonalize(const PerturbedCoefficients& pert, double B, double margin) {
  if (!(pert.eps_k_tau > 0.0)) {
    std::ostringstream os;
    os << "post-pulse softening: eps_k(tau) = " << pert.eps_k_tau << " <= 0";
    throw SofteningError(os.str(), pert.eps_k_tau);
  }
  InstantBogoliubov f;
  f.eps_k_tau = pert.eps_k_tau;
  f.Upsilon_k = pert.chi_k_tau / pert.eps_k_tau;
  const double mod = std::abs(f.Upsilon_k);
  check_ratio(mod, margin, "Upsilon_k");

  f.Theta_k = std::atanh(squeeze_tanh(mod));
  f.Phi_k = kPi - phase_of(f.Upsilon_k);
  f.u_k = std::cosh(f.Theta_k);
  f.v_k = std::polar(std::sinh(f.Theta_k), f.Phi_k);
  f.eps_k_tau_diag =
      pert.eps_k_tau * (std::cosh(2.0 * f.Theta_k) - mod * std::sinh(2.0 * f.Theta_k));
  f.eps_alpha_tau = f.eps_k_tau_diag + B;
  f.eps_beta_tau = f.eps_k_tau_diag - B;
  return f;
}

InstantBogoliubov InstantBogoliubov::from_squeeze(double Theta, double Phi, double eps_diag,
                                                  double B) {
  InstantBogoliubov f;
  f.Theta_k = Theta;
  f.Phi_k = Phi;
  f.u_k = std::cosh(Theta);
  f.v_k = std::polar(std::sinh(Theta), Phi);
  f.eps_k_tau_diag = eps_diag;
  f.eps_k_tau = eps_diag * std::cosh(2.0 * Theta);
  f.Upsilon_k = std::polar(std::tanh(2.0 * Theta), kPi - Phi);
  f.eps_alpha_tau = eps_diag + B;
  f.eps_beta_tau = eps_diag - B;
  return f;
}

PointSolution solve_point(const ModelParams& m, const PulseParams& pulse, const LatticeSpec& lat,
                          const KVector& k, double tau, double margin) {
  PointSolution s;
  s.k = k;
  try {
    s.bare = bare_coefficients(m, lat, k);
    s.bog = static_diagonalize(s.bare, margin);
    s.pert = perturbed_coefficients(s.bog, pulse, m, lat, k, tau);
    s.inst = instant_diagonalize(s.pert, m.B, margin);
  } catch (const InstabilityError& e) {
    e.rethrow_at(k);
  }
  return s;
}

std::vector<DispersionPoint> dispersion_curve(const ModelParams& m,
                                              const std::optional<PulseParams>& pulse,
                                              const LatticeSpec& lat, const KPath& path,
                                              double margin) {
  PulseParams applied = pulse.value_or(PulseParams{});
  applied.envelope = EnvelopeSpec::constant(1.0);
  if (!pulse) applied.deltaJ = 0.0;

  std::vector<DispersionPoint> out;
  for (const auto& k : path.points()) {
    const PointSolution s = solve_point(m, applied, lat, k, 0.0, margin);
    out.push_back({k, s.bog.eps_k, s.inst.eps_k_tau_diag});
  }
  return out;
}

} // namespace magnon
