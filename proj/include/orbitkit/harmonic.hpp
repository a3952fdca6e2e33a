#pragma once

#include "orbitkit/finite_group.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

namespace orbitkit {

// A complex-valued function on a finite group, normalized at the identity and
// Hermitian-symmetric (m(g^-1) = conj m(g) within 1e-12).  Entries may be left
// undefined (NaN) when only part of the group has been sampled; operations
// that need an undefined value refuse with std::domain_error.  Positivity is
// *not* an invariant here — gram_psd decides it.
struct StateSample {
  FiniteGroup group;
  std::vector<std::complex<double>> values;
};

StateSample make_state(FiniteGroup g, std::vector<std::complex<double>> values);

bool state_defined(const StateSample& m, int g);

// The function equal to chi on the subgroup h and zero elsewhere — the
// localized state attached to a subgroup character.
std::vector<std::complex<double>> zero_extension(const FiniteGroup& g,
                                                 const std::vector<int>& h,
                                                 const std::vector<std::complex<double>>& chi);

// Gram matrix G_{ab} = m(a^-1 b) over the subset; psd iff the smallest
// eigenvalue is >= -tol.
struct GramReport {
  double min_eigenvalue;
  bool psd;
};
GramReport gram_psd(const StateSample& m, const std::vector<int>& subset, double tol);

// Slacks of the three classical state inequalities over the given pairs
// (g, h): bound 1 - |m(g)|; increment sqrt(2 Re(1 - m(g^-1 h))) - |m(g) - m(h)|;
// product sqrt(1-|m(g)|^2) sqrt(1-|m(h)|^2) - |m(gh) - m(g)m(h)|.  Each slack
// is the minimum over the pairs; a true state keeps all three nonnegative.
// subgroup_defect is max |m(gh) - m(g)| over pairs whose h has m(h) = 1
// within 1e-12 (the level set m = 1 is a subgroup, so m must be constant on
// its cosets).
struct InequalityReport {
  double bound_slack;
  double increment_slack;
  double product_slack;
  double subgroup_defect;
  bool pass; // slacks >= -1e-12 and subgroup_defect <= 1e-9
};
InequalityReport state_inequalities(const StateSample& m,
                                    const std::vector<std::pair<int, int>>& pairs);

// Cyclic unitary module built from a positive-definite state: the group
// algebra with inner product <delta_a, delta_b> = m(a^-1 b), divided by its
// null space.  action[g] is unitary, cyclic is the class of delta at the
// identity, and m(g) = <cyclic, action[g] cyclic> within 1e-10 (verified;
// std::domain_error on a gram that is not positive semidefinite).
struct GnsModule {
  std::size_t dim;
  std::vector<Eigen::MatrixXcd> action;
  Eigen::VectorXcd cyclic;
};
GnsModule gns_finite(const StateSample& m);

// Induction of a one-dimensional character chi of the subgroup h to g, on the
// functions f with f(xh) = conj(chi(h)) f(x) and the l2 norm over cosets.
// Basis: one function per left coset, supported there, pinned at the sorted
// coset representatives.  cyclic realizes the zero_extension state.
struct InducedModule {
  std::size_t dim;
  std::vector<int> coset_reps;
  std::vector<Eigen::MatrixXcd> action;
  Eigen::VectorXcd cyclic;
};
InducedModule ind_discrete(const std::vector<std::complex<double>>& chi,
                           const std::vector<int>& h, const FiniteGroup& g);

// Unitary map intertwining two cyclic modules of the same state, fixed by
// sending one orbit of the cyclic vector onto the other.  Verified to 1e-10
// (unitarity, equivariance, cyclic match); std::domain_error if no such map
// exists at that accuracy.
Eigen::MatrixXcd cyclic_intertwiner(const std::vector<Eigen::MatrixXcd>& action1,
                                    const Eigen::VectorXcd& cyclic1,
                                    const std::vector<Eigen::MatrixXcd>& action2,
                                    const Eigen::VectorXcd& cyclic2);

// Double-coset bound vs. exact intertwining dimension between ind(chi, h)
// and ind(eta, k).  bound counts double cosets HaK with chi = eta(a^-1 . a)
// on H meet aKa^-1; exact solves T rho1(g) = rho2(g) T over all g as one
// least-squares system and counts its kernel.  Throws std::logic_error if
// exact ever exceeded bound.
struct MackeyReport {
  int bound;
  int exact;
};
MackeyReport mackey_shoda(const std::vector<std::complex<double>>& chi,
                          const std::vector<int>& h,
                          const std::vector<std::complex<double>>& eta,
                          const std::vector<int>& k, const FiniteGroup& g);

// Spectral measure of a state on a finite abelian group: inverse Fourier
// transform over the character basis of abelian_characters (same order).
// Must be nonnegative within 1e-10 (std::domain_error otherwise — the state
// is not positive-definite); concentrated iff the total mass outside the
// allowed character indices is <= 1e-9.
struct ConcentrationReport {
  std::vector<double> spectrum;
  double outside_mass;
  bool concentrated;
};
ConcentrationReport concentration_check(const StateSample& m,
                                        const std::vector<int>& allowed);

} // namespace orbitkit
