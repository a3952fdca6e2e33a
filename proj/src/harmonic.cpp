#include "orbitkit/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace orbitkit {

namespace {

bool defined(std::complex<double> v) {
  return !std::isnan(v.real()) && !std::isnan(v.imag());
}

std::complex<double> value_at(const StateSample& m, int g) {
  const std::complex<double> v = m.values[g];
  if (!defined(v)) throw std::domain_error("state value undefined at a required element");
  return v;
}

void require_total(const StateSample& m) {
  for (const auto& v : m.values)
    if (!defined(v)) throw std::domain_error("operation needs the state on the whole group");
}

Eigen::MatrixXcd gram_matrix(const StateSample& m, const std::vector<int>& subset) {
  const int s = static_cast<int>(subset.size());
  Eigen::MatrixXcd gram(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j)
      gram(i, j) = value_at(m, m.group.op(m.group.inverse(subset[i]), subset[j]));
  return gram;
}

void validate_character(const FiniteGroup& g, const std::vector<int>& h,
                        const std::vector<std::complex<double>>& chi) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("element list is not a subgroup");
  if (chi.size() != h.size())
    throw std::invalid_argument("character length does not match the subgroup");
  const int m = static_cast<int>(h.size());
  std::vector<int> pos(g.order(), -1);
  for (int p = 0; p < m; ++p) pos[h[p]] = p;
  for (int p = 0; p < m; ++p) {
    if (std::abs(std::abs(chi[p]) - 1.0) > 1e-10)
      throw std::invalid_argument("character value is not unimodular");
    for (int q = 0; q < m; ++q)
      if (std::abs(chi[pos[g.op(h[p], h[q])]] - chi[p] * chi[q]) > 1e-10)
        throw std::invalid_argument("character is not multiplicative");
  }
}

} // namespace

StateSample make_state(FiniteGroup g, std::vector<std::complex<double>> values) {
  if (values.size() != g.order())
    throw std::invalid_argument("state needs one value per group element");
  const std::complex<double> at_e = values[g.identity];
  if (!defined(at_e) || std::abs(at_e - 1.0) > 1e-12)
    throw std::invalid_argument("state value at the identity must be 1");
  for (int a = 0; a < static_cast<int>(g.order()); ++a) {
    const std::complex<double> v = values[a];
    const std::complex<double> w = values[g.inverse(a)];
    if (defined(v) != defined(w))
      throw std::invalid_argument("state defined at an element but not at its inverse");
    if (defined(v) && std::abs(w - std::conj(v)) > 1e-12)
      throw std::invalid_argument("state is not Hermitian-symmetric");
  }
  return StateSample{std::move(g), std::move(values)};
}

bool state_defined(const StateSample& m, int g) { return defined(m.values[g]); }

std::vector<std::complex<double>> zero_extension(const FiniteGroup& g,
                                                 const std::vector<int>& h,
                                                 const std::vector<std::complex<double>>& chi) {
  validate_character(g, h, chi);
  std::vector<std::complex<double>> values(g.order(), 0.0);
  for (std::size_t p = 0; p < h.size(); ++p) values[h[p]] = chi[p];
  return values;
}

GramReport gram_psd(const StateSample& m, const std::vector<int>& subset, double tol) {
  if (subset.empty()) throw std::invalid_argument("gram subset is empty");
  for (int v : subset)
    if (v < 0 || v >= static_cast<int>(m.group.order()))
      throw std::invalid_argument("gram subset index out of range");
  const Eigen::MatrixXcd gram = gram_matrix(m, subset);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  return GramReport{min_eig, min_eig >= -tol};
}

InequalityReport state_inequalities(const StateSample& m,
                                    const std::vector<std::pair<int, int>>& pairs) {
  const double inf = std::numeric_limits<double>::infinity();
  InequalityReport rep{inf, inf, inf, 0.0, true};
  for (const auto& [g, h] : pairs) {
    const std::complex<double> mg = value_at(m, g);
    const std::complex<double> mh = value_at(m, h);
    const std::complex<double> mgh = value_at(m, m.group.op(g, h));
    const std::complex<double> mgih = value_at(m, m.group.op(m.group.inverse(g), h));

    rep.bound_slack = std::min({rep.bound_slack, 1.0 - std::abs(mg), 1.0 - std::abs(mh)});
    rep.increment_slack =
        std::min(rep.increment_slack,
                 std::sqrt(std::max(0.0, 2.0 * (1.0 - mgih.real()))) - std::abs(mg - mh));
    rep.product_slack =
        std::min(rep.product_slack, std::sqrt(std::max(0.0, 1.0 - std::norm(mg))) *
                                            std::sqrt(std::max(0.0, 1.0 - std::norm(mh))) -
                                        std::abs(mgh - mg * mh));
    if (std::abs(mh - 1.0) <= 1e-12)
      rep.subgroup_defect = std::max(rep.subgroup_defect, std::abs(mgh - mg));
  }
  rep.pass = rep.bound_slack >= -1e-12 && rep.increment_slack >= -1e-12 &&
             rep.product_slack >= -1e-12 && rep.subgroup_defect <= 1e-9;
  return rep;
}

GnsModule gns_finite(const StateSample& m) {
  require_total(m);
  const int n = static_cast<int>(m.group.order());
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  const Eigen::MatrixXcd gram = gram_matrix(m, all);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram);
  if (es.info() != Eigen::Success) throw std::runtime_error("gram eigensolve failed");
  const Eigen::VectorXd lam = es.eigenvalues();
  if (lam.minCoeff() < -1e-10)
    throw std::domain_error("state gram matrix is not positive semidefinite");

  const double cutoff = 1e-11 * std::max(1.0, lam.maxCoeff());
  std::vector<int> keep;
  for (int j = 0; j < n; ++j)
    if (lam(j) > cutoff) keep.push_back(j);
  const int d = static_cast<int>(keep.size());

  Eigen::MatrixXcd u(n, d);
  Eigen::VectorXd root(d), root_inv(d);
  for (int j = 0; j < d; ++j) {
    u.col(j) = es.eigenvectors().col(keep[j]);
    root(j) = std::sqrt(lam(keep[j]));
    root_inv(j) = 1.0 / root(j);
  }

  GnsModule mod;
  mod.dim = static_cast<std::size_t>(d);
  mod.cyclic = root.asDiagonal() * u.row(m.group.identity).adjoint().eval();
  mod.action.reserve(n);
  for (int g = 0; g < n; ++g) {
    // Left translation permutes the delta basis; push it through the
    // square-root coordinates of the positive part of the gram form.
    Eigen::MatrixXcd pu(n, d);
    const int gi = m.group.inverse(g);
    for (int x = 0; x < n; ++x) pu.row(x) = u.row(m.group.op(gi, x));
    mod.action.push_back(root.asDiagonal() * (u.adjoint() * pu) * root_inv.asDiagonal());
  }

  double err = 0.0;
  for (int g = 0; g < n; ++g)
    err = std::max(err, std::abs(std::complex<double>(mod.cyclic.dot(mod.action[g] * mod.cyclic)) -
                                 m.values[g]));
  if (err > 1e-10)
    throw std::domain_error("cyclic reconstruction failed: state is too far from positive");
  return mod;
}

InducedModule ind_discrete(const std::vector<std::complex<double>>& chi,
                           const std::vector<int>& h, const FiniteGroup& g) {
  validate_character(g, h, chi);
  const int n = static_cast<int>(g.order());
  std::vector<int> pos(n, -1);
  for (std::size_t p = 0; p < h.size(); ++p) pos[h[p]] = static_cast<int>(p);

  std::vector<int> coset(n, -1);
  std::vector<int> reps;
  for (int a = 0; a < n; ++a) {
    if (coset[a] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int hh : h) coset[g.op(a, hh)] = id;
  }
  const int d = static_cast<int>(reps.size());

  InducedModule mod;
  mod.dim = static_cast<std::size_t>(d);
  mod.coset_reps = reps;
  mod.action.reserve(n);
  for (int a = 0; a < n; ++a) {
    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(d, d);
    const int ai = g.inverse(a);
    for (int j = 0; j < d; ++j) {
      const int x = g.op(ai, reps[j]); // lands in the coset of some rep_i
      const int i = coset[x];
      rho(j, i) = std::conj(chi[pos[g.op(g.inverse(reps[i]), x)]]);
    }
    mod.action.push_back(std::move(rho));
  }

  // The cyclic vector is conj(chi) extended by zero; its only nonzero coset
  // is h itself, evaluated at that coset's representative.
  mod.cyclic = Eigen::VectorXcd::Zero(d);
  const int i0 = coset[g.identity];
  mod.cyclic(i0) = std::conj(chi[pos[reps[i0]]]);
  return mod;
}

Eigen::MatrixXcd cyclic_intertwiner(const std::vector<Eigen::MatrixXcd>& action1,
                                    const Eigen::VectorXcd& cyclic1,
                                    const std::vector<Eigen::MatrixXcd>& action2,
                                    const Eigen::VectorXcd& cyclic2) {
  if (action1.size() != action2.size())
    throw std::invalid_argument("modules act for different groups");
  const int n = static_cast<int>(action1.size());
  const int d1 = static_cast<int>(cyclic1.size());
  const int d2 = static_cast<int>(cyclic2.size());
  if (d1 != d2) throw std::domain_error("no cyclic intertwiner: dimensions differ");

  Eigen::MatrixXcd a(d1, n), b(d2, n);
  for (int g = 0; g < n; ++g) {
    a.col(g) = action1[g] * cyclic1;
    b.col(g) = action2[g] * cyclic2;
  }
  const Eigen::MatrixXcd t =
      a.transpose().completeOrthogonalDecomposition().solve(b.transpose()).transpose();

  double defect = (t.adjoint() * t - Eigen::MatrixXcd::Identity(d1, d1)).cwiseAbs().maxCoeff();
  defect = std::max(defect, (t * cyclic1 - cyclic2).cwiseAbs().maxCoeff());
  for (int g = 0; g < n; ++g)
    defect = std::max(defect, (t * action1[g] - action2[g] * t).cwiseAbs().maxCoeff());
  if (defect > 1e-10)
    throw std::domain_error("no cyclic intertwiner within tolerance");
  return t;
}

MackeyReport mackey_shoda(const std::vector<std::complex<double>>& chi,
                          const std::vector<int>& h,
                          const std::vector<std::complex<double>>& eta,
                          const std::vector<int>& k, const FiniteGroup& g) {
  const InducedModule rho1 = ind_discrete(chi, h, g);
  const InducedModule rho2 = ind_discrete(eta, k, g);
  const int n = static_cast<int>(g.order());

  std::vector<int> pos_h(n, -1), pos_k(n, -1);
  for (std::size_t p = 0; p < h.size(); ++p) pos_h[h[p]] = static_cast<int>(p);
  for (std::size_t p = 0; p < k.size(); ++p) pos_k[k[p]] = static_cast<int>(p);

  int bound = 0;
  std::vector<char> visited(n, 0);
  for (int a = 0; a < n; ++a) {
    if (visited[a]) continue;
    for (int hh : h)
      for (int kk : k) visited[g.op(g.op(hh, a), kk)] = 1;
    // Character agreement on h meet a k a^-1, enumerated from the k side.
    bool compatible = true;
    const int ai = g.inverse(a);
    for (std::size_t p = 0; p < k.size() && compatible; ++p) {
      const int x = g.op(g.op(a, k[p]), ai);
      if (pos_h[x] >= 0) compatible = std::abs(chi[pos_h[x]] - eta[p]) <= 1e-9;
    }
    if (compatible) ++bound;
  }

  // Normal equations of the stacked system T rho1(g) = rho2(g) T over all g:
  // the averaged operator (1/n) sum conj(rho1) (x) rho2 is the orthogonal
  // projector onto the intertwiners, so its spectrum splits at n/2 cleanly.
  const int d1 = static_cast<int>(rho1.dim), d2 = static_cast<int>(rho2.dim);
  Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(d1 * d2, d1 * d2);
  for (int a = 0; a < n; ++a)
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < d1; ++j)
        c.block(i * d2, j * d2, d2, d2) += std::conj(rho1.action[a](i, j)) * rho2.action[a];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(c, Eigen::EigenvaluesOnly);
  int exact = 0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    if (es.eigenvalues()(i) > 0.5 * n) ++exact;

  if (exact > bound)
    throw std::logic_error("intertwining dimension exceeded the double-coset bound");
  return MackeyReport{bound, exact};
}

ConcentrationReport concentration_check(const StateSample& m, const std::vector<int>& allowed) {
  require_total(m);
  const auto chars = abelian_characters(m.group); // throws unless abelian
  const int n = static_cast<int>(m.group.order());

  ConcentrationReport rep;
  rep.spectrum.resize(n);
  for (int j = 0; j < n; ++j) {
    std::complex<double> mass = 0.0;
    for (int a = 0; a < n; ++a) mass += m.values[a] * std::conj(chars[j][a]);
    mass /= static_cast<double>(n);
    if (mass.real() < -1e-10 || std::abs(mass.imag()) > 1e-10)
      throw std::domain_error("negative spectral mass: state is not positive-definite");
    rep.spectrum[j] = mass.real();
  }

  std::vector<char> ok(n, 0);
  for (int j : allowed) {
    if (j < 0 || j >= n) throw std::invalid_argument("allowed character index out of range");
    ok[j] = 1;
  }
  rep.outside_mass = 0.0;
  for (int j = 0; j < n; ++j)
    if (!ok[j]) rep.outside_mass += rep.spectrum[j];
  rep.concentrated = rep.outside_mass <= 1e-9;
  return rep;
}

} // namespace orbitkit
