#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "magnon/lattice.hpp"

namespace magnon {

/// Two-mode number basis |n_a, n_b> with 0 <= n_a, n_b <= cutoff, ordered
/// lexicographically (n_a major).
struct TruncatedFockSpace {
  int cutoff = 1;

  explicit TruncatedFockSpace(int cutoff);

  std::size_t dim() const noexcept {
    return static_cast<std::size_t>(cutoff + 1) * static_cast<std::size_t>(cutoff + 1);
  }
  std::size_t index(int na, int nb) const;
  std::pair<int, int> occupations(std::size_t index) const;

  /// Annihilators of either mode as dense matrices.
  Eigen::MatrixXd annihilator_a() const;
  Eigen::MatrixXd annihilator_b() const;
};

/// eps_a a^dag a + eps_b b^dag b + c a b + c^* a^dag b^dag
Eigen::MatrixXcd build_hamiltonian(double eps_a, double eps_b, cplx coupling,
                                   const TruncatedFockSpace& space);

struct OracleSolution {
  TruncatedFockSpace space{1};
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, number basis
  /// n_a - n_b of each eigenvector; empty when the input mixed sectors.
  std::vector<int> sector;
  bool converged = false;
  double convergence_shift = 0.0;

  bool sector_resolved() const noexcept { return !sector.empty(); }
  /// Eigenvalues of one sector, ascending.
  std::vector<double> sector_eigenvalues(int delta) const;
  /// Lowest eigenvalue of the delta = 0 sector.
  double ground_energy() const;
};

/// Dense Hermitian eigendecomposition. When H conserves n_a - n_b the
/// sectors are solved separately, so degenerate levels from different
/// sectors never mix. Non-Hermitian input (beyond 1e-10) throws InvalidInput.
/// The largest-modulus component of every eigenvector is real positive.
OracleSolution oracle_spectrum(const Eigen::MatrixXcd& H, const TruncatedFockSpace& space);

struct OracleProblem {
  double eps_a = 1.0;
  double eps_b = 1.0;
  cplx coupling{0.0, 0.0};
};

/// Solves at cutoff and at cutoff + probe_extra; converged when the lowest
/// n_check eigenvalues move by less than shift_tol.
OracleSolution solve_oracle(const OracleProblem& problem, int cutoff, int probe_extra = 8,
                            double shift_tol = 1e-9, int n_check = 6);

/// |<eigvec|m, n>|^2 over the eigenvectors of `sector` (default m - n),
/// ascending in energy. Refuses unconverged solutions.
std::vector<double> overlap_amplitudes(const OracleSolution& sol, int m, int n,
                                       std::optional<int> sector = std::nullopt);

/// One conserved sector n_a - n_b = delta on its own, basis
/// |l + delta_a, l + delta_b> with occupations up to cutoff. Reaches the
/// cutoffs strong squeezing needs without the full (cutoff + 1)^2 space.
struct SectorSolution {
  int delta = 0;
  int cutoff = 0;
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXcd eigenvectors; // columns, sector basis indexed by l
  bool converged = false;
  double convergence_shift = 0.0;
};

Eigen::MatrixXcd build_sector_hamiltonian(const OracleProblem& problem, int delta, int cutoff);

SectorSolution solve_sector(const OracleProblem& problem, int delta, int cutoff,
                            int probe_extra = 8, double shift_tol = 1e-9, int n_check = 6);

/// |<eigvec|m, n>|^2 ascending in energy; (m, n) must lie in the sector.
std::vector<double> sector_overlaps(const SectorSolution& sol, int m, int n);

/// <m, n|H|m, n>
double number_state_expectation(const Eigen::MatrixXcd& H, const TruncatedFockSpace& space, int m,
                                int n);

} // namespace magnon
