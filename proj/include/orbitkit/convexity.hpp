#pragma once

#include "orbitkit/rng.hpp"
#include "orbitkit/weights.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace orbitkit {

// Haar-distributed unitary: thin QR of a complex Gaussian matrix with the
// phases of the R diagonal folded back into Q.
Eigen::MatrixXcd haar_unitary(std::size_t n, SplitMix64& rng);

// Diagonal of u diag(spectrum) u*, computed as |u_ij|^2-weighted averages so
// the result is exactly real.
std::vector<double> conjugated_diagonal(const Eigen::MatrixXcd& u,
                                        const std::vector<double>& spectrum);

// Monte Carlo check that diagonals of random conjugates of diag(spectrum)
// stay inside the permutation hull of the spectrum.  A sample passes when
// its majorization slack is >= -1e-10 and its total deviates by <= 1e-10.
struct SampleReport {
  std::size_t count;
  double pass_fraction;
  double min_slack;
  double max_slack;
  double max_total_dev;
};
SampleReport kostant_sample(const std::vector<double>& spectrum, std::size_t count,
                            std::uint64_t seed);

// Hermitian idempotent of fixed rank; make_projector_point enforces
// Hermitian within 1e-12, idempotent within 1e-10, trace within 1e-10 of k.
struct ProjectorPoint {
  Eigen::MatrixXcd matrix;
};
ProjectorPoint make_projector_point(const Eigen::MatrixXcd& m, std::size_t k);

// Normalized coordinate products rho_j = |det v[S_j,:]|^2 / det(v*v), one
// per vertex (S_j = support of the 0/1 vertex vector); they sum to 1 over
// the full vertex set when v has k columns.
std::vector<double> vertex_masses(const Eigen::MatrixXcd& v,
                                  const std::vector<WeightVector>& vertices);

// Log of the target functional prod_j rho_j^{c_j} on n-by-k frames, and its
// Euclidean gradient (conjugate-linear convention: the directional
// derivative along d is Re tr(G* d)).  Both are invariant under right
// GL(k) moves of the frame.
double frame_objective(const Eigen::MatrixXcd& v,
                       const std::vector<WeightVector>& vertices,
                       const std::vector<double>& coeffs);
Eigen::MatrixXcd frame_gradient(const Eigen::MatrixXcd& v,
                                const std::vector<WeightVector>& vertices,
                                const std::vector<double>& coeffs);

struct AscentReport {
  ProjectorPoint point;
  std::vector<double> moment; // diagonal of the projector
  double residual;            // max |moment - sum_j coeffs_j vertex_j|
  double rho;                 // final value of prod_j rho_j^{c_j}
  bool converged;
  std::size_t iterations;
};

// Backtracking gradient ascent of frame_objective over rank-k projectors,
// started from the first k Fourier columns (all vertex masses positive
// there).  At a critical point the projector diagonal equals the convex
// combination of the vertices; converged means that residual dropped below
// tol within the iteration cap, otherwise the best point seen is reported.
AscentReport kostant_ascent(const std::vector<WeightVector>& vertices,
                            const std::vector<double>& coeffs, std::size_t k,
                            double tol, std::size_t max_iter = 5000);

} // namespace orbitkit
