#include "orbitkit/orbit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace orbitkit {

namespace {

// ---- symbolic coadjoint flow -------------------------------------------

using PolyVec = std::vector<Poly>;

PolyVec poly_covector(const Covector& x, std::size_t nvars) {
  PolyVec out;
  out.reserve(x.size());
  for (const auto& c : x) out.push_back(Poly::constant(nvars, c));
  return out;
}

// K_w(P)_i = sum_l [e_i, w]_l P_l, the coadjoint derivative along w acting
// coordinatewise on a polynomial covector.
PolyVec coadjoint_apply(const LieAlgebra& alg, const RatVec& w, const PolyVec& p) {
  const std::size_t n = alg.dim();
  PolyVec out(n, Poly(p.empty() ? 0 : p[0].nvars()));
  for (std::size_t i = 0; i < n; ++i) {
    RatVec br = alg.bracket(alg.basis_vector(i), w);
    Poly acc(p[0].nvars());
    for (std::size_t l = 0; l < n; ++l)
      if (!br[l].is_zero()) acc = acc + p[l] * br[l];
    out[i] = acc;
  }
  return out;
}

// exp(t*w) applied to a polynomial covector, with t a chart variable.
PolyVec symbolic_exp(const LieAlgebra& alg, const RatVec& w, std::size_t tvar, PolyVec p) {
  const std::size_t nvars = p[0].nvars();
  Poly t = Poly::variable(nvars, tvar);
  PolyVec acc = p;
  PolyVec term = p;
  Poly tpow = Poly::constant(nvars, Rational(1));
  Rational factorial(1);
  for (std::size_t r = 1;; ++r) {
    term = coadjoint_apply(alg, w, term);
    bool all_zero = true;
    for (const auto& q : term)
      if (!q.is_zero()) { all_zero = false; break; }
    if (all_zero) break;
    if (r > alg.dim() + 1)
      throw std::logic_error("symbolic exp series failed to terminate");
    tpow = tpow * t;
    factorial *= Rational((std::int64_t)r);
    Poly coeff = tpow * (Rational(1) / factorial);
    for (std::size_t i = 0; i < acc.size(); ++i)
      acc[i] = acc[i] + term[i] * coeff;
  }
  return acc;
}

// ---- floating-coefficient polynomials for the membership test -----------

struct DPoly {
  std::size_t nvars = 0;
  std::map<std::vector<int>, double> terms;

  static DPoly from(const Poly& p) {
    DPoly d;
    d.nvars = p.nvars();
    for (const auto& [m, c] : p.terms()) d.terms[m] = c.to_double();
    return d;
  }
  bool depends_on(std::size_t v, double eps) const {
    for (const auto& [m, c] : terms)
      if (m[v] > 0 && std::abs(c) > eps) return true;
    return false;
  }
  int degree_in(std::size_t v, double eps) const {
    int d = 0;
    for (const auto& [m, c] : terms)
      if (std::abs(c) > eps) d = std::max(d, m[v]);
    return d;
  }
  double constant_term() const {
    auto it = terms.find(std::vector<int>(nvars, 0));
    return it == terms.end() ? 0.0 : it->second;
  }
  bool is_constant(double eps) const {
    for (const auto& [m, c] : terms) {
      bool unit = true;
      for (int e : m)
        if (e != 0) { unit = false; break; }
      if (!unit && std::abs(c) > eps) return false;
    }
    return true;
  }
  std::vector<std::size_t> vars_present(double eps) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars; ++v)
      if (depends_on(v, eps)) out.push_back(v);
    return out;
  }
  void substitute(std::size_t v, double value) {
    std::map<std::vector<int>, double> next;
    for (const auto& [m, c] : terms) {
      double coeff = c;
      for (int k = 0; k < m[v]; ++k) coeff *= value;
      std::vector<int> m2 = m;
      m2[v] = 0;
      next[m2] += coeff;
    }
    terms = std::move(next);
  }
  // coefficient of v^k with all other exponents zero
  double univariate_coeff(std::size_t v, int k) const {
    for (const auto& [m, c] : terms) {
      if (m[v] != k) continue;
      bool pure = true;
      for (std::size_t w = 0; w < nvars; ++w)
        if (w != v && m[w] != 0) { pure = false; break; }
      if (pure) return c;
    }
    return 0.0;
  }
};

constexpr double kCoeffEps = 1e-12;

// ---- flag and complement helpers ----------------------------------------

// Rows of `outer` extending `inner` to a basis of outer.
RatMat complement_rows(const Subspace& inner, const Subspace& outer) {
  RatMat acc = inner.basis();
  RatMat added;
  for (const auto& row : outer.basis()) {
    RatMat probe = acc;
    probe.push_back(row);
    if (rref(probe).size() > acc.size()) {
      acc.push_back(row);
      rref(acc);
      added.push_back(row);
    }
  }
  return added;
}

// Ascending central series computed inside a subalgebra, in ambient coords.
std::vector<Subspace> ascending_series_within(const LieAlgebra& alg, const Subspace& sub) {
  const std::size_t n = alg.dim();
  const RatMat& b = sub.basis();
  const std::size_t s = b.size();
  std::vector<Subspace> series;
  Subspace z = alg.zero_subspace(Side::algebra);
  while (true) {
    // next = {v in sub : [v, sub] in z}
    RatMat ann = nullspace(z.basis(), n);
    RatMat constraints; // over lambda in R^s with v = sum lambda_r b_r
    for (std::size_t j = 0; j < s; ++j) {
      std::vector<RatVec> br(s);
      for (std::size_t r = 0; r < s; ++r) br[r] = alg.bracket(b[r], b[j]);
      for (const auto& q : ann) {
        RatVec row(s);
        for (std::size_t r = 0; r < s; ++r) row[r] = dot(q, br[r]);
        if (!is_zero(row)) constraints.push_back(std::move(row));
      }
    }
    RatMat lambda_basis = nullspace(constraints, s);
    RatMat rows;
    for (const auto& lam : lambda_basis) {
      RatVec v(n);
      for (std::size_t r = 0; r < s; ++r)
        if (!lam[r].is_zero()) v = add(v, scale(lam[r], b[r]));
      rows.push_back(std::move(v));
    }
    Subspace next(Side::algebra, n, std::move(rows));
    if (next.dim() == z.dim()) break; // stationary
    z = next;
    series.push_back(z);
    if (z.dim() == s) break;
  }
  return series;
}

// Full flag of subspaces of `sub` refining its ascending central series,
// each term one dimension bigger than the last.
std::vector<Subspace> refined_central_flag(const LieAlgebra& alg, const Subspace& sub) {
  std::vector<Subspace> chain = ascending_series_within(alg, sub);
  chain.push_back(sub);
  std::vector<Subspace> flag;
  RatMat acc;
  for (const auto& term : chain) {
    for (const auto& row : term.basis()) {
      RatMat probe = acc;
      probe.push_back(row);
      if (rref(probe).size() > acc.size()) {
        acc = std::move(probe);
        flag.push_back(Subspace(Side::algebra, alg.dim(), acc));
      }
    }
  }
  return flag;
}

Subspace perp_within(const LieAlgebra& alg, const Subspace& sub, const Subspace& e,
                     const Covector& x) {
  return alg.perp_at(e, x).intersect(sub);
}

} // namespace

// ---- orbit datum ----------------------------------------------------------

OrbitDatum orbit_datum(const LieAlgebra& alg, const Covector& x) {
  const std::size_t n = alg.dim();
  if (x.size() != n) throw std::invalid_argument("orbit_datum: covector length mismatch");

  // Krylov closure: smallest ad*-invariant subspace containing x.
  RatMat rows = {x};
  rref(rows);
  bool grew = true;
  while (grew) {
    grew = false;
    RatMat snapshot = rows;
    for (const auto& s : snapshot) {
      for (std::size_t j = 0; j < n; ++j) {
        Covector image = alg.coadjoint_vector(alg.basis_vector(j), s);
        if (is_zero(image)) continue;
        RatMat probe = rows;
        probe.push_back(image);
        if (rref(probe).size() > rows.size()) {
          rows = std::move(probe);
          grew = true;
        }
      }
    }
  }
  Subspace span(Side::dual, n, rows);

  // c = {Z : K_Z vanishes on span}: rows indexed by (span basis s, coord i).
  RatMat constraints;
  for (const auto& s : span.basis()) {
    for (std::size_t i = 0; i < n; ++i) {
      RatVec row(n);
      for (std::size_t j = 0; j < n; ++j)
        row[j] = pair_with(s, alg.bracket_basis(i, j));
      if (!is_zero(row)) constraints.push_back(std::move(row));
    }
  }
  Subspace c(Side::algebra, n, nullspace(constraints, n));
  Subspace o = span.annihilator();
  const std::size_t affine = n - c.dim();

  return OrbitDatum{alg, x, std::move(span), std::move(o), std::move(c), affine};
}

std::size_t orbit_dimension(const LieAlgebra& alg, const Covector& x) {
  return alg.dim() - alg.perp_at(alg.whole_algebra(), x).dim();
}

XAbelianReport x_abelian_check(const OrbitDatum& datum, const Subspace& a) {
  const LieAlgebra& alg = datum.alg;
  XAbelianReport rep{};
  rep.x_abelian = datum.o.contains(alg.bracket_span(a, a));
  rep.x_central = datum.o.contains(alg.bracket_span(alg.whole_algebra(), a));
  rep.subalgebra = alg.is_subalgebra(a);
  return rep;
}

// ---- orbit charts and projections ----------------------------------------

std::vector<Poly> orbit_chart(const OrbitDatum& datum, std::vector<std::size_t>* jumps_out) {
  const LieAlgebra& alg = datum.alg;
  const std::size_t n = alg.dim();
  if (!alg.nilpotent_class())
    throw std::domain_error("orbit_chart: algebra is not nilpotent");

  // The basis must present an ascending chain of ideals V_k = span(e1..ek).
  RatMat flag_rows;
  for (std::size_t k = 0; k < n; ++k) {
    flag_rows.push_back(alg.basis_vector(k));
    Subspace vk(Side::algebra, n, flag_rows);
    if (!alg.is_ideal(vk))
      throw std::domain_error("orbit_chart: fixture basis is not an ideal flag");
  }

  Subspace gx = alg.perp_at(alg.whole_algebra(), datum.base);
  std::vector<std::size_t> jumps;
  std::size_t prev = 0;
  RatMat vk_rows;
  for (std::size_t k = 0; k < n; ++k) {
    vk_rows.push_back(alg.basis_vector(k));
    std::size_t cur = gx.intersect(Subspace(Side::algebra, n, vk_rows)).dim();
    if (cur == prev) jumps.push_back(k);
    prev = cur;
  }

  PolyVec p = poly_covector(datum.base, jumps.size());
  // Largest jump direction applied first (innermost).
  for (std::size_t r = jumps.size(); r-- > 0;)
    p = symbolic_exp(alg, alg.basis_vector(jumps[r]), r, std::move(p));
  if (jumps_out) *jumps_out = jumps;
  return p;
}

OrbitProjection project_orbit(const OrbitDatum& datum, const Subspace& a,
                              const std::vector<GridRange>& grid) {
  if (a.side() != Side::algebra || a.ambient_dim() != datum.alg.dim())
    throw std::invalid_argument("project_orbit: a must be a subspace of the algebra");
  if (grid.empty()) throw std::invalid_argument("project_orbit: empty grid");
  for (const auto& g : grid)
    if (g.count == 0) throw std::invalid_argument("project_orbit: empty grid range");

  std::vector<std::size_t> jumps;
  std::vector<Poly> chart = orbit_chart(datum, &jumps);
  const std::size_t m = jumps.size();

  std::vector<GridRange> ranges = grid;
  if (ranges.size() == 1 && m > 1) ranges.assign(m, grid[0]);
  if (m > 0 && ranges.size() != m)
    throw std::invalid_argument("project_orbit: grid arity does not match chart parameters");

  // Restriction of the chart to a*: one polynomial per basis row of a.
  std::vector<Poly> restriction;
  for (const auto& row : a.basis()) {
    Poly acc(m);
    for (std::size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) acc = acc + chart[i] * row[i];
    restriction.push_back(std::move(acc));
  }

  // Sample the grid in row-major order.
  std::vector<std::vector<double>> cloud;
  std::vector<std::size_t> idx(m, 0);
  while (true) {
    std::vector<double> t(m);
    for (std::size_t v = 0; v < m; ++v) {
      const GridRange& r = ranges[v];
      t[v] = r.count == 1 ? r.lo : r.lo + (r.hi - r.lo) * (double)idx[v] / (double)(r.count - 1);
    }
    std::vector<double> pt;
    pt.reserve(restriction.size());
    for (const auto& poly : restriction) pt.push_back(poly.evaluate(t));
    cloud.push_back(std::move(pt));
    // odometer
    std::size_t v = m;
    while (v > 0) {
      --v;
      if (++idx[v] < ranges[v].count) break;
      idx[v] = 0;
      if (v == 0) { v = SIZE_MAX; break; }
    }
    if (m == 0 || v == SIZE_MAX) break;
  }

  return OrbitProjection(std::move(jumps), std::move(restriction), std::move(cloud));
}

bool OrbitProjection::contains(const std::vector<double>& q, double tol) const {
  if (q.size() != restriction_.size())
    throw std::invalid_argument("membership query has wrong dimension");

  std::vector<DPoly> coords;
  coords.reserve(restriction_.size());
  for (const auto& p : restriction_) coords.push_back(DPoly::from(p));
  std::vector<double> target = q;
  std::vector<bool> coord_active(coords.size(), true);
  const std::size_t nvars = restriction_.empty() ? 0 : restriction_[0].nvars();
  std::vector<bool> var_active(nvars, true);

  bool progress = true;
  while (progress) {
    progress = false;

    // Constant coordinates become direct comparisons.
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (!coord_active[i] || !coords[i].is_constant(kCoeffEps)) continue;
      if (std::abs(coords[i].constant_term() - target[i]) > tol) return false;
      coord_active[i] = false;
      progress = true;
    }

    // A coordinate affine in a single variable pins that variable.
    for (std::size_t i = 0; i < coords.size() && !progress; ++i) {
      if (!coord_active[i]) continue;
      auto vars = coords[i].vars_present(kCoeffEps);
      if (vars.size() != 1 || coords[i].degree_in(vars[0], kCoeffEps) != 1) continue;
      double a = coords[i].univariate_coeff(vars[0], 1);
      if (std::abs(a) <= kCoeffEps) continue;
      double value = (target[i] - coords[i].constant_term()) / a;
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (coord_active[j]) coords[j].substitute(vars[0], value);
      coord_active[i] = false;
      var_active[vars[0]] = false;
      progress = true;
    }

    // A variable entering exactly one coordinate, affinely and with constant
    // slope, makes that coordinate freely solvable -- drop both.
    for (std::size_t v = 0; v < nvars && !progress; ++v) {
      if (!var_active[v]) continue;
      std::size_t host = SIZE_MAX, hits = 0;
      for (std::size_t i = 0; i < coords.size(); ++i)
        if (coord_active[i] && coords[i].depends_on(v, kCoeffEps)) { host = i; ++hits; }
      if (hits != 1) continue;
      if (coords[host].degree_in(v, kCoeffEps) != 1) continue;
      // slope must not involve other variables
      bool constant_slope = true;
      for (const auto& [mono, c] : coords[host].terms) {
        if (mono[v] != 1 || std::abs(c) <= kCoeffEps) continue;
        for (std::size_t w = 0; w < nvars; ++w)
          if (w != v && mono[w] != 0) { constant_slope = false; break; }
      }
      double slope = coords[host].univariate_coeff(v, 1);
      if (!constant_slope || std::abs(slope) <= kCoeffEps) continue;
      coord_active[host] = false;
      var_active[v] = false;
      progress = true;
    }
  }

  std::vector<std::size_t> remaining;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coord_active[i]) remaining.push_back(i);
  if (remaining.empty()) return true;

  if (remaining.size() == 1) {
    const DPoly& f = coords[remaining[0]];
    double y = target[remaining[0]];
    auto vars = f.vars_present(kCoeffEps);
    if (vars.size() == 1) {
      std::size_t v = vars[0];
      int deg = f.degree_in(v, kCoeffEps);
      double lead = f.univariate_coeff(v, deg);
      if (deg % 2 == 1 && std::abs(lead) > kCoeffEps) return true; // odd degree is onto
      if (deg == 2 && std::abs(lead) > kCoeffEps) {
        double b = f.univariate_coeff(v, 1);
        double c0 = f.constant_term();
        double extremum = c0 - b * b / (4.0 * lead);
        return lead > 0 ? y >= extremum - tol : y <= extremum + tol;
      }
    }
  }

  // Fallback: proximity against the sampled cloud.
  for (const auto& pt : cloud_) {
    double d = 0;
    for (std::size_t i = 0; i < pt.size(); ++i) d = std::max(d, std::abs(pt[i] - q[i]));
    if (d <= tol) return true;
  }
  return false;
}

// ---- polarization ---------------------------------------------------------

Subspace polarize(const LieAlgebra& alg, const Covector& x) {
  if (!alg.nilpotent_class())
    throw std::domain_error("polarize: algebra is not nilpotent");
  Subspace gi = alg.whole_algebra();
  for (std::size_t iter = 0; iter <= alg.dim(); ++iter) {
    Subspace radical = perp_within(alg, gi, gi, x);
    if (radical == gi) return gi;
    bool found = false;
    for (const Subspace& a : refined_central_flag(alg, gi)) {
      Subspace aperp = perp_within(alg, gi, a, x);
      if (aperp.contains(a) && aperp != gi) {
        gi = aperp;
        found = true;
        break;
      }
    }
    if (!found) {
      std::ostringstream msg;
      msg << "polarize: no qualifying ideal at stage " << iter
          << " (current dimension " << gi.dim() << ", candidates tried "
          << refined_central_flag(alg, gi).size() << ")";
      throw std::runtime_error(msg.str());
    }
  }
  throw std::logic_error("polarize: failed to converge");
}

// ---- subordinate / polarization / Pukanszky -------------------------------

namespace {

// Exact elimination: repeatedly solve coordinates that are affine in a single
// remaining variable; returns true when all coordinates vanish identically.
bool exact_reach(std::vector<Poly> f) {
  const std::size_t nvars = f.empty() ? 0 : f[0].nvars();
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < f.size() && !progress; ++i) {
      auto vars = f[i].variables_present();
      if (vars.size() != 1 || f[i].degree_in(vars[0]) != 1) continue;
      Poly a(nvars), b(nvars);
      f[i].split_affine_in(vars[0], a, b);
      if (!a.is_constant()) continue;
      Rational value = -b.constant_term() / a.constant_term();
      for (auto& poly : f) poly = poly.substitute(vars[0], value);
      progress = true;
    }
  }
  for (const auto& poly : f)
    if (!poly.is_zero()) return false;
  return true;
}

bool newton_reach(const std::vector<Poly>& f, std::size_t nvars) {
  std::vector<std::vector<Poly>> jac(f.size());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t v = 0; v < nvars; ++v)
      jac[i].push_back(f[i].derivative(v));

  std::vector<double> t(nvars, 0.0);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<double> val(f.size());
    double resid = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      val[i] = f[i].evaluate(t);
      resid = std::max(resid, std::abs(val[i]));
    }
    if (resid <= 1e-9) return true;
    // Normal equations (J^T J) d = -J^T F, solved by Gaussian elimination.
    std::vector<std::vector<double>> J(f.size(), std::vector<double>(nvars));
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t v = 0; v < nvars; ++v) J[i][v] = jac[i][v].evaluate(t);
    std::vector<std::vector<double>> A(nvars, std::vector<double>(nvars + 1, 0.0));
    for (std::size_t u = 0; u < nvars; ++u) {
      for (std::size_t v = 0; v < nvars; ++v)
        for (std::size_t i = 0; i < f.size(); ++i) A[u][v] += J[i][u] * J[i][v];
      A[u][u] += 1e-12; // keep the system solvable when J is rank-deficient
      for (std::size_t i = 0; i < f.size(); ++i) A[u][nvars] -= J[i][u] * val[i];
    }
    for (std::size_t col = 0; col < nvars; ++col) {
      std::size_t piv = col;
      for (std::size_t r = col + 1; r < nvars; ++r)
        if (std::abs(A[r][col]) > std::abs(A[piv][col])) piv = r;
      std::swap(A[col], A[piv]);
      if (std::abs(A[col][col]) < 1e-300) continue;
      for (std::size_t r = 0; r < nvars; ++r) {
        if (r == col) continue;
        double fct = A[r][col] / A[col][col];
        for (std::size_t cc = col; cc <= nvars; ++cc) A[r][cc] -= fct * A[col][cc];
      }
    }
    for (std::size_t v = 0; v < nvars; ++v)
      t[v] += std::abs(A[v][v]) < 1e-300 ? 0.0 : A[v][nvars] / A[v][v];
  }
  double resid = 0;
  for (const auto& poly : f) resid = std::max(resid, std::abs(poly.evaluate(t)));
  return resid <= 1e-9;
}

} // namespace

SubordinateReport subordinate_pukanszky_check(const LieAlgebra& alg, const Subspace& h,
                                              const Covector& x) {
  if (h.side() != Side::algebra || h.ambient_dim() != alg.dim())
    throw std::invalid_argument("subordinate_pukanszky_check: h must live in the algebra");
  if (!alg.is_subalgebra(h))
    throw std::invalid_argument("subordinate_pukanszky_check: h is not a subalgebra");
  if (!alg.nilpotent_class())
    throw std::domain_error("subordinate_pukanszky_check: algebra is not nilpotent");

  SubordinateReport rep{};
  rep.subordinate = true;
  const RatMat& hb = h.basis();
  for (std::size_t i = 0; i < hb.size() && rep.subordinate; ++i)
    for (std::size_t j = i + 1; j < hb.size(); ++j)
      if (!pair_with(x, alg.bracket(hb[i], hb[j])).is_zero()) {
        rep.subordinate = false;
        break;
      }

  std::size_t dim_x = orbit_dimension(alg, x);
  rep.polarization = rep.subordinate && dim_x % 2 == 0 &&
                     h.dim() == alg.dim() - dim_x / 2;

  // Pukanszky: every point x + u, u in orth(h), is reached by flowing along
  // the directions of h that move x (a complement of the stabilizer in h).
  Subspace gx = alg.perp_at(alg.whole_algebra(), x);
  RatMat moving = complement_rows(gx.intersect(h), h);
  rep.pukanszky = true;
  Subspace ohr = orth(h);
  for (const auto& u : ohr.basis()) {
    PolyVec p = poly_covector(x, moving.size());
    for (std::size_t r = moving.size(); r-- > 0;)
      p = symbolic_exp(alg, moving[r], r, std::move(p));
    std::vector<Poly> f;
    for (std::size_t i = 0; i < p.size(); ++i)
      f.push_back(p[i] - Poly::constant(moving.size(), x[i] + u[i]));
    if (exact_reach(f)) continue;
    if (!newton_reach(f, moving.size())) {
      rep.pukanszky = false;
      break;
    }
  }
  return rep;
}

// ---- flat / Corwin --------------------------------------------------------

FlatCorwinReport flat_corwin_check(const OrbitDatum& datum) {
  const LieAlgebra& alg = datum.alg;
  FlatCorwinReport rep{};
  Subspace gx = alg.perp_at(alg.whole_algebra(), datum.base);
  rep.flat = gx.contains(alg.bracket_span(alg.whole_algebra(), gx));

  std::vector<Subspace> candidates;
  auto push_unique = [&candidates](const Subspace& s) {
    for (const auto& seen : candidates)
      if (seen == s) return;
    candidates.push_back(s);
  };
  std::vector<Subspace> asc = alg.ascending_central_series();
  std::vector<Subspace> low = alg.lower_central_series();
  for (const auto& s : asc) push_unique(s);
  for (const auto& s : low) push_unique(s);
  for (const auto& a : asc)
    for (const auto& b : low) push_unique(a.intersect(b));

  rep.corwin = false;
  for (const auto& a : candidates) {
    if (!alg.is_ideal(a)) continue;
    if (!datum.o.contains(alg.bracket_span(a, a))) continue; // not X-abelian
    Subspace b = alg.perp_at(a, datum.base);
    Subspace c2 = alg.perp_at(b, datum.base);
    if (c2.contains(alg.bracket_span(b, c2))) {
      rep.corwin = true;
      rep.witness_a = a;
      break;
    }
  }
  return rep;
}

// ---- little group ---------------------------------------------------------

LittleGroupDatum little_group_datum(const OrbitDatum& datum, const Subspace& a) {
  const LieAlgebra& alg = datum.alg;
  if (!alg.is_ideal(a))
    throw std::invalid_argument("little_group_datum: a is not an ideal");
  if (!datum.o.contains(alg.bracket_span(a, a)))
    throw std::invalid_argument("little_group_datum: a is not X-abelian");

  LittleGroupDatum out{a, {}, alg.zero_subspace(Side::algebra), {}, 0, 0};
  out.h = alg.perp_at(a, datum.base);
  for (const auto& row : a.basis()) out.p.push_back(pair_with(datum.base, row));
  for (const auto& row : out.h.basis()) out.y_base.push_back(pair_with(datum.base, row));

  RatMat moves;
  for (const auto& row : a.basis()) {
    Covector v = alg.coadjoint_vector(row, datum.base);
    if (!is_zero(v)) moves.push_back(std::move(v));
  }
  out.dim_GH = rank(moves);
  out.dim_Y = out.h.dim() - alg.perp_at(out.h, datum.base).intersect(out.h).dim();

  if (!out.h.contains(a))
    throw std::logic_error("little_group_datum: a is not contained in h");
  std::size_t dim_x = orbit_dimension(alg, datum.base);
  if (dim_x != 2 * out.dim_GH + out.dim_Y)
    throw std::logic_error("little_group_datum: dimension bookkeeping failed");
  // a must stabilize p: <x,[Z,W]> = 0 for Z, W in a (brackets stay in a).
  const RatMat& ab = a.basis();
  for (std::size_t i = 0; i < ab.size(); ++i)
    for (std::size_t j = i + 1; j < ab.size(); ++j)
      if (!pair_with(datum.base, alg.bracket(ab[i], ab[j])).is_zero())
        throw std::logic_error("little_group_datum: a does not stabilize p");
  return out;
}

std::size_t induction_dim(std::size_t dim_GH, std::size_t dim_Y) {
  return 2 * dim_GH + dim_Y;
}

} // namespace orbitkit
