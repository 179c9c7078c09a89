#include "magnon/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "magnon/error.hpp"

namespace magnon {

TruncatedFockSpace::TruncatedFockSpace(int cutoff_) : cutoff(cutoff_) {
  if (cutoff < 1) throw InvalidInput("Fock cutoff must be >= 1");
}

std::size_t TruncatedFockSpace::index(int na, int nb) const {
  if (na < 0 || nb < 0 || na > cutoff || nb > cutoff)
    throw InvalidInput("occupation outside the truncated space");
  return static_cast<std::size_t>(na) * (cutoff + 1) + static_cast<std::size_t>(nb);
}

std::pair<int, int> TruncatedFockSpace::occupations(std::size_t i) const {
  const auto side = static_cast<std::size_t>(cutoff + 1);
  return {static_cast<int>(i / side), static_cast<int>(i % side)};
}

Eigen::MatrixXd TruncatedFockSpace::annihilator_a() const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int na = 1; na <= cutoff; ++na)
    for (int nb = 0; nb <= cutoff; ++nb)
      A(index(na - 1, nb), index(na, nb)) = std::sqrt(static_cast<double>(na));
  return A;
}

Eigen::MatrixXd TruncatedFockSpace::annihilator_b() const {
  const auto n = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int na = 0; na <= cutoff; ++na)
    for (int nb = 1; nb <= cutoff; ++nb)
      A(index(na, nb - 1), index(na, nb)) = std::sqrt(static_cast<double>(nb));
  return A;
}

Eigen::MatrixXcd build_hamiltonian(double eps_a, double eps_b, cplx coupling,
                                   const TruncatedFockSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
  for (int na = 0; na <= space.cutoff; ++na) {
    for (int nb = 0; nb <= space.cutoff; ++nb) {
      const auto i = space.index(na, nb);
      H(i, i) = eps_a * na + eps_b * nb;
      if (na > 0 && nb > 0) {
        // <na-1, nb-1| c a b |na, nb> = c sqrt(na nb), and its adjoint.
        const auto j = space.index(na - 1, nb - 1);
        const double amp = std::sqrt(static_cast<double>(na) * nb);
        H(j, i) = coupling * amp;
        H(i, j) = std::conj(coupling) * amp;
      }
    }
  }
  return H;
}

namespace {

void fix_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Eigen::Index imax = 0;
  v.cwiseAbs().maxCoeff(&imax);
  const cplx c = v(imax);
  if (std::abs(c) > 0.0) {
    v *= std::conj(c) / std::abs(c);
    v(imax) = std::abs(c);
  }
}

} // namespace

OracleSolution oracle_spectrum(const Eigen::MatrixXcd& H, const TruncatedFockSpace& space) {
  const auto n = static_cast<Eigen::Index>(space.dim());
  if (H.rows() != n || H.cols() != n) throw InvalidInput("Hamiltonian does not match the space");
  if ((H - H.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidInput("oracle Hamiltonian is not Hermitian");

  auto delta_of = [&](Eigen::Index i) {
    const auto [na, nb] = space.occupations(static_cast<std::size_t>(i));
    return na - nb;
  };
  bool conserves = true;
  for (Eigen::Index c = 0; c < n && conserves; ++c)
    for (Eigen::Index r = 0; r < n; ++r)
      if (H(r, c) != cplx{0.0, 0.0} && delta_of(r) != delta_of(c)) {
        conserves = false;
        break;
      }

  struct Eigenpair {
    double value;
    int sector;
    Eigen::VectorXcd vec;
  };
  std::vector<Eigenpair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));

  if (conserves) {
    std::map<int, std::vector<Eigen::Index>> blocks;
    for (Eigen::Index i = 0; i < n; ++i) blocks[delta_of(i)].push_back(i);
    for (const auto& [delta, idx] : blocks) {
      const auto m = static_cast<Eigen::Index>(idx.size());
      Eigen::MatrixXcd block(m, m);
      for (Eigen::Index r = 0; r < m; ++r)
        for (Eigen::Index c = 0; c < m; ++c) block(r, c) = H(idx[r], idx[c]);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(block);
      for (Eigen::Index c = 0; c < m; ++c) {
        Eigen::VectorXcd full = Eigen::VectorXcd::Zero(n);
        for (Eigen::Index r = 0; r < m; ++r) full(idx[r]) = es.eigenvectors()(r, c);
        pairs.push_back({es.eigenvalues()(c), delta, std::move(full)});
      }
    }
  } else {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H);
    for (Eigen::Index c = 0; c < n; ++c)
      pairs.push_back({es.eigenvalues()(c), 0, es.eigenvectors().col(c)});
  }

  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.value < b.value; });

  OracleSolution sol;
  sol.space = space;
  sol.eigenvalues.resize(n);
  sol.eigenvectors.resize(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    sol.eigenvalues(c) = pairs[c].value;
    sol.eigenvectors.col(c) = pairs[c].vec;
    fix_phase(sol.eigenvectors.col(c));
    if (conserves) sol.sector.push_back(pairs[c].sector);
  }
  return sol;
}

std::vector<double> OracleSolution::sector_eigenvalues(int delta) const {
  if (!sector_resolved()) throw InvalidInput("solution is not resolved by sector");
  std::vector<double> out;
  for (std::size_t c = 0; c < sector.size(); ++c)
    if (sector[c] == delta) out.push_back(eigenvalues(static_cast<Eigen::Index>(c)));
  return out;
}

double OracleSolution::ground_energy() const {
  if (!sector_resolved()) return eigenvalues(0);
  return sector_eigenvalues(0).front();
}

OracleSolution solve_oracle(const OracleProblem& problem, int cutoff, int probe_extra,
                            double shift_tol, int n_check) {
  const TruncatedFockSpace space(cutoff);
  OracleSolution sol = oracle_spectrum(
      build_hamiltonian(problem.eps_a, problem.eps_b, problem.coupling, space), space);

  const TruncatedFockSpace probe_space(cutoff + probe_extra);
  const OracleSolution probe = oracle_spectrum(
      build_hamiltonian(problem.eps_a, problem.eps_b, problem.coupling, probe_space), probe_space);

  const Eigen::Index count = std::min<Eigen::Index>(n_check, sol.eigenvalues.size());
  double shift = 0.0;
  for (Eigen::Index i = 0; i < count; ++i)
    shift = std::max(shift, std::abs(sol.eigenvalues(i) - probe.eigenvalues(i)));
  sol.convergence_shift = shift;
  sol.converged = shift < shift_tol;
  return sol;
}

std::vector<double> overlap_amplitudes(const OracleSolution& sol, int m, int n,
                                       std::optional<int> sector) {
  if (!sol.converged)
    throw InvalidInput("oracle solution not converged (shift " +
                       std::to_string(sol.convergence_shift) + "); increase the cutoff");
  if (!sol.sector_resolved()) throw InvalidInput("solution is not resolved by sector");
  const int delta = sector.value_or(m - n);
  const auto ref = static_cast<Eigen::Index>(sol.space.index(m, n));
  std::vector<double> out;
  for (std::size_t c = 0; c < sol.sector.size(); ++c)
    if (sol.sector[c] == delta)
      out.push_back(std::norm(sol.eigenvectors(ref, static_cast<Eigen::Index>(c))));
  return out;
}

namespace {

std::pair<int, int> sector_offsets(int delta) {
  const int ad = std::abs(delta);
  return {(delta + ad) / 2, (ad - delta) / 2};
}

} // namespace

Eigen::MatrixXcd build_sector_hamiltonian(const OracleProblem& problem, int delta, int cutoff) {
  const int ad = std::abs(delta);
  if (cutoff < ad + 1) throw InvalidInput("sector cutoff too small for this delta");
  const auto [da, db] = sector_offsets(delta);
  const int top = cutoff - ad; // largest l keeping both occupations <= cutoff
  const Eigen::Index n = top + 1;
  Eigen::MatrixXcd H = Eigen::MatrixXcd::Zero(n, n);
  for (int l = 0; l <= top; ++l) {
    H(l, l) = problem.eps_a * (l + da) + problem.eps_b * (l + db);
    if (l < top) {
      const double amp = std::sqrt(static_cast<double>(l + 1 + da) * (l + 1 + db));
      H(l, l + 1) = problem.coupling * amp;
      H(l + 1, l) = std::conj(problem.coupling) * amp;
    }
  }
  return H;
}

SectorSolution solve_sector(const OracleProblem& problem, int delta, int cutoff, int probe_extra,
                            double shift_tol, int n_check) {
  auto solve = [&](int c) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(build_sector_hamiltonian(problem, delta, c));
    return es;
  };
  const auto es = solve(cutoff);
  const auto probe = solve(cutoff + probe_extra);

  SectorSolution sol;
  sol.delta = delta;
  sol.cutoff = cutoff;
  sol.eigenvalues = es.eigenvalues();
  sol.eigenvectors = es.eigenvectors();
  for (Eigen::Index c = 0; c < sol.eigenvectors.cols(); ++c) fix_phase(sol.eigenvectors.col(c));

  const Eigen::Index count = std::min<Eigen::Index>(n_check, sol.eigenvalues.size());
  double shift = 0.0;
  for (Eigen::Index i = 0; i < count; ++i)
    shift = std::max(shift, std::abs(sol.eigenvalues(i) - probe.eigenvalues()(i)));
  sol.convergence_shift = shift;
  sol.converged = shift < shift_tol;
  return sol;
}

std::vector<double> sector_overlaps(const SectorSolution& sol, int m, int n) {
  if (!sol.converged)
    throw InvalidInput("sector solution not converged (shift " +
                       std::to_string(sol.convergence_shift) + "); increase the cutoff");
  if (m - n != sol.delta) throw InvalidInput("reference state lies outside the sector");
  const int l = std::min(m, n);
  std::vector<double> out(static_cast<std::size_t>(sol.eigenvectors.cols()));
  for (Eigen::Index c = 0; c < sol.eigenvectors.cols(); ++c)
    out[c] = std::norm(sol.eigenvectors(l, c));
  return out;
}

double number_state_expectation(const Eigen::MatrixXcd& H, const TruncatedFockSpace& space, int m,
                                int n) {
  const auto i = static_cast<Eigen::Index>(space.index(m, n));
  return H(i, i).real();
}

} // namespace magnon
