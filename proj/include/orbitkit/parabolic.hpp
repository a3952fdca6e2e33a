#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace orbitkit {

// Floating-point subspace of R^m kept as orthonormal rows (SVD-cleaned).
// Used where exact rational bases are unavailable, e.g. eigenspace sums of
// a derivation with irrational eigenvalues.
class FloatSubspace {
public:
  explicit FloatSubspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  // Orthonormalize the row span of `rows`, dropping directions whose
  // singular value falls below rank_tol relative to the largest.
  static FloatSubspace from_rows(const Eigen::MatrixXd& rows, double rank_tol = 1e-9);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return static_cast<std::size_t>(basis_.rows()); }
  const Eigen::MatrixXd& basis() const { return basis_; }

  // Distance from v to the subspace is below tol (scaled by max(1, |v|)).
  bool contains(const Eigen::VectorXd& v, double tol = 1e-9) const;

private:
  std::size_t ambient_;
  Eigen::MatrixXd basis_; // dim x ambient, orthonormal rows
};

// Additive Jordan data of a real matrix x together with the attached
// parabolic: x = x_h + x_e + x_n (hyperbolic / elliptic / nilpotent,
// pairwise commuting), n = sum of the positive eigenspaces of ad(x_h),
// p = its normalizer (centralizer of x_h plus n), and the pairing of x
// against p by the trace form. Matrices embed in gl(n, R); subspaces of
// gl(n, R) are vectorized row-major into R^{n^2}.
struct ParabolicDatum {
  Eigen::MatrixXd x_h;
  Eigen::MatrixXd x_e;
  Eigen::MatrixXd x_n;
  FloatSubspace n_space;
  FloatSubspace p_space;
  Eigen::VectorXd y; // Tr(x * B_r) over the basis rows of p_space
};

// Throws std::runtime_error when the numerical eigenstructure cannot be
// resolved to tolerance 1e-9 (reconstruction, commutation, or the vanishing
// of the trace pairing on n).
ParabolicDatum jordan_parabolic(const Eigen::MatrixXd& x);

// Row-major vectorization helpers for gl(n, R) <-> R^{n^2}.
Eigen::VectorXd flatten_matrix(const Eigen::MatrixXd& m);
Eigen::MatrixXd unflatten_matrix(const Eigen::VectorXd& v, std::size_t n);

} // namespace orbitkit
