#pragma once

#include <vector>

#include "magnon/bogoliubov.hpp"

namespace magnon {

/// Occupations (m, n) of the alpha_k and beta_{-k} modes.
struct EigenstateLabel {
  int m = 0;
  int n = 0;
  KVector k;
};

/// Expansion of an instantaneous eigenstate over the unperturbed number
/// states |l + delta_alpha, l + delta_beta>. The (-1)^l sign is kept out of
/// the amplitudes.
struct ShakeupExpansion {
  EigenstateLabel reference;
  std::vector<cplx> amplitudes; // index l = 0..l_max
  int delta = 0;
  int delta_alpha = 0;
  int delta_beta = 0;
  int mu = 0;
  int l_max = 0;
  double tail_mass = 0.0;

  double weight(std::size_t l) const { return std::norm(amplitudes.at(l)); }
  std::vector<double> weights() const;
  /// Probability outside the l = mu line.
  double expelled_weight() const;
};

/// Layers of the q recursion. layer(i, 0) for i <= mu, then layer(mu, j) for
/// 1 <= j <= d. Only the first l_max + 1 entries of the final layer are
/// guaranteed meaningful; earlier layers carry the extra entries the
/// recursion reads at l + 1.
class QTable {
public:
  QTable(int mu, int d, int l_max) : mu_(mu), d_(d), l_max_(l_max) {}

  int mu() const noexcept { return mu_; }
  int d() const noexcept { return d_; }
  int l_max() const noexcept { return l_max_; }

  const std::vector<double>& layer(int mu, int d) const;
  const std::vector<double>& final_layer() const { return layers_.back(); }
  double operator()(int l) const { return final_layer().at(static_cast<std::size_t>(l)); }

private:
  friend QTable q_table(const InstantBogoliubov&, int, int, int);
  int mu_, d_, l_max_;
  std::vector<std::vector<double>> layers_;
};

/// [-exp(i Phi) tanh Theta]^l / cosh Theta
cplx p00(const InstantBogoliubov& frame, int l);

QTable q_table(const InstantBogoliubov& frame, int mu, int d, int l_max);

/// Adaptive truncation: l_max starts at 32 and doubles until the missing
/// mass is at most tol.
ShakeupExpansion shakeup_amplitudes(const InstantBogoliubov& frame, const EigenstateLabel& ref,
                                    double tol = 1e-12);
ShakeupExpansion shakeup_amplitudes(const InstantBogoliubov& frame, int m, int n,
                                    double tol = 1e-12);

} // namespace magnon
