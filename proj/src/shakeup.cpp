#include "magnon/shakeup.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>

#include "magnon/error.hpp"

namespace magnon {

std::vector<double> ShakeupExpansion::weights() const {
  std::vector<double> w(amplitudes.size());
  for (std::size_t l = 0; l < w.size(); ++l) w[l] = std::norm(amplitudes[l]);
  return w;
}

double ShakeupExpansion::expelled_weight() const {
  double sum = 0.0;
  for (std::size_t l = 0; l < amplitudes.size(); ++l)
    if (static_cast<int>(l) != mu) sum += std::norm(amplitudes[l]);
  return sum;
}

const std::vector<double>& QTable::layer(int mu, int d) const {
  if (d == 0 && mu >= 0 && mu <= mu_) return layers_.at(static_cast<std::size_t>(mu));
  if (mu == mu_ && d > 0 && d <= d_) return layers_.at(static_cast<std::size_t>(mu_ + d));
  throw InvalidInput("q-table layer not computed");
}

cplx p00(const InstantBogoliubov& frame, int l) {
  if (l < 0) throw InvalidInput("harmonic index must be non-negative");
  const double t = std::tanh(frame.Theta_k);
  const double mod = (l == 0 ? 1.0 : std::pow(t, l)) / std::cosh(frame.Theta_k);
  return std::polar(mod, l * (frame.Phi_k + kPi));
}

QTable q_table(const InstantBogoliubov& frame, int mu, int d, int l_max) {
  if (mu < 0 || d < 0 || l_max < 0) throw InvalidInput("q-table indices must be non-negative");
  QTable table(mu, d, l_max);

  const double u2 = frame.u_k * frame.u_k;
  const double v2 = std::norm(frame.v_k);
  const double u4 = u2 * u2;
  const double v4 = v2 * v2;
  const double uv2 = u2 * v2;

  // Every layer consumes one extra entry at l + 1 from the layer below.
  std::size_t len = static_cast<std::size_t>(l_max) + 1 + mu + d;
  table.layers_.emplace_back(len, 1.0);

  for (int i = 1; i <= mu; ++i) {
    const auto& prev = table.layers_.back();
    --len;
    std::vector<double> next(len);
    for (std::size_t l = 0; l < len; ++l) {
      const double dl = static_cast<double>(l);
      // First term reads index l - 1 and vanishes at l = 0.
      const double lower = l > 0 ? dl * u4 * prev[l - 1] : 0.0;
      next[l] = lower - (2.0 * dl + 1.0) * uv2 * prev[l] + (dl + 1.0) * v4 * prev[l + 1];
    }
    table.layers_.push_back(std::move(next));
  }

  for (int j = 1; j <= d; ++j) {
    const auto& prev = table.layers_.back();
    --len;
    std::vector<double> next(len);
    for (std::size_t l = 0; l < len; ++l) {
      const double dl = static_cast<double>(l);
      next[l] = u2 * std::sqrt(dl + j) * prev[l] - v2 * std::sqrt(dl + 1.0) * prev[l + 1];
    }
    table.layers_.push_back(std::move(next));
  }
  return table;
}

ShakeupExpansion shakeup_amplitudes(const InstantBogoliubov& frame, int m, int n, double tol) {
  return shakeup_amplitudes(frame, EigenstateLabel{m, n, KVector{}}, tol);
}

ShakeupExpansion shakeup_amplitudes(const InstantBogoliubov& frame, const EigenstateLabel& ref,
                                    double tol) {
  if (ref.m < 0 || ref.n < 0) throw InvalidInput("occupations must be non-negative");
  if (!(tol > 0.0 && tol < 1.0)) throw InvalidInput("truncation tolerance must lie in (0, 1)");

  ShakeupExpansion e;
  e.reference = ref;
  e.delta = ref.m - ref.n;
  const int ad = std::abs(e.delta);
  e.delta_alpha = (e.delta + ad) / 2;
  e.delta_beta = (ad - e.delta) / 2;
  e.mu = std::min(ref.m, ref.n);

  if (frame.Theta_k == 0.0 || std::abs(frame.v_k) == 0.0) {
    e.amplitudes.assign(static_cast<std::size_t>(e.mu) + 1, cplx{0.0, 0.0});
    e.amplitudes.back() = 1.0;
    e.l_max = e.mu;
    return e;
  }

  const double log_fact = 0.5 * (std::lgamma(ref.m + 1.0) + std::lgamma(ref.n + 1.0));
  const cplx prefactor = std::exp(-log_fact) * std::pow(frame.u_k, -ad) *
                         std::pow(1.0 / (frame.u_k * frame.v_k), e.mu);

  constexpr int kMaxHarmonics = 1 << 16;
  for (int l_max = 32;; l_max *= 2) {
    if (l_max > kMaxHarmonics)
      throw InvalidInput("shake-up expansion failed to converge; squeeze too strong");
    const QTable q = q_table(frame, e.mu, ad, l_max);
    e.amplitudes.resize(static_cast<std::size_t>(l_max) + 1);
    double mass = 0.0;
    for (int l = 0; l <= l_max; ++l) {
      e.amplitudes[l] = prefactor * q(l) * p00(frame, l);
      mass += std::norm(e.amplitudes[l]);
    }
    const double tail = 1.0 - mass;
    if (tail <= tol && std::norm(e.amplitudes.back()) <= tol) {
      e.l_max = l_max;
      e.tail_mass = std::max(0.0, tail);
      return e;
    }
  }
}

} // namespace magnon
