#include "orbitkit/finite_group.hpp"

#include "orbitkit/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace orbitkit {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

int element_order(const FiniteGroup& g, int a) {
  int k = 1;
  int b = a;
  while (b != g.identity) {
    b = g.op(b, a);
    ++k;
  }
  return k;
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

} // namespace

bool FiniteGroup::abelian() const {
  const int n = static_cast<int>(order());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (mul[a][b] != mul[b][a]) return false;
  return true;
}

FiniteGroup group_from_table(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw std::invalid_argument("group table is empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("group table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("group table entry out of range");
  }

  FiniteGroup g;
  g.mul = std::move(table);

  int e = -1;
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = g.mul[a][b] == b && g.mul[b][a] == b;
    if (ok) {
      e = a;
      break;
    }
  }
  if (e < 0) throw std::invalid_argument("group table has no identity");
  g.identity = e;

  g.inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (g.mul[a][b] == e && g.mul[b][a] == e) {
        g.inv[a] = b;
        break;
      }
    if (g.inv[a] < 0) throw std::invalid_argument("group table element has no inverse");
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
          throw std::invalid_argument("group table is not associative");

  return g;
}

FiniteGroup load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open group file: " + path);
  std::string tag;
  long long n = 0;
  if (!(in >> tag >> n) || tag != "order" || n <= 0)
    throw std::invalid_argument("group file must start with 'order N': " + path);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(n),
                                      std::vector<int>(static_cast<std::size_t>(n)));
  for (auto& row : table)
    for (int& v : row)
      if (!(in >> v)) throw std::invalid_argument("group file table is truncated: " + path);
  return group_from_table(std::move(table));
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw std::invalid_argument("cyclic group order must be positive");
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return group_from_table(std::move(table));
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw std::invalid_argument("dihedral group parameter must be positive");
  const int m = 2 * n;
  const auto mod = [n](int v) { return ((v % n) + n) % n; };
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const bool fa = a >= n, fb = b >= n;
      const int ra = a % n, rb = b % n;
      // With s r^a s = r^-a, the rotation part of the product flips sign
      // exactly when the right factor carries the reflection.
      const int rot = fb ? mod(rb - ra) : mod(ra + rb);
      table[a][b] = (fa != fb ? n : 0) + rot;
    }
  return group_from_table(std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = static_cast<int>(a.order()), nb = static_cast<int>(b.order());
  const int n = na * nb;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      table[i][j] = a.op(i / nb, j / nb) * nb + b.op(i % nb, j % nb);
  return group_from_table(std::move(table));
}

FiniteGroup heisenberg_mod(int p) {
  if (p <= 1) throw std::invalid_argument("heisenberg modulus must be at least 2");
  const int n = p * p * p;
  const auto idx = [p](int a, int b, int c) { return (a * p + b) * p + c; };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < p; ++a)
    for (int b = 0; b < p; ++b)
      for (int c = 0; c < p; ++c)
        for (int a2 = 0; a2 < p; ++a2)
          for (int b2 = 0; b2 < p; ++b2)
            for (int c2 = 0; c2 < p; ++c2)
              table[idx(a, b, c)][idx(a2, b2, c2)] =
                  idx((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p);
  return group_from_table(std::move(table));
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
  const int n = static_cast<int>(g.order());
  for (int v : gens)
    if (v < 0 || v >= n) throw std::invalid_argument("generator index out of range");
  std::vector<char> seen(n, 0);
  std::queue<int> work;
  seen[g.identity] = 1;
  work.push(g.identity);
  while (!work.empty()) {
    const int x = work.front();
    work.pop();
    for (int v : gens) {
      const int y = g.op(x, v);
      if (!seen[y]) {
        seen[y] = 1;
        work.push(y);
      }
    }
  }
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (seen[i]) out.push_back(i);
  return out;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  if (h.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int v : h) {
    if (v < 0 || v >= static_cast<int>(g.order())) return false;
    in[v] = 1;
  }
  if (!in[g.identity]) return false;
  for (int a : h) {
    if (!in[g.inverse(a)]) return false;
    for (int b : h)
      if (!in[g.op(a, b)]) return false;
  }
  return true;
}

std::vector<int> center_of(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::vector<int> out;
  for (int a = 0; a < n; ++a) {
    bool central = true;
    for (int b = 0; b < n && central; ++b) central = g.op(a, b) == g.op(b, a);
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<int> commutator_subgroup(const FiniteGroup& g, const std::vector<int>& h) {
  std::vector<int> gens;
  for (int a : h)
    for (int b : h)
      gens.push_back(g.op(g.op(a, b), g.op(g.inverse(a), g.inverse(b))));
  gens = sorted_unique(std::move(gens));
  return subgroup_closure(g, gens);
}

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> closure = subgroup_closure(g, gens);
  while (closure.size() < g.order()) {
    std::vector<char> in(g.order(), 0);
    for (int v : closure) in[v] = 1;
    for (int a = 0; a < static_cast<int>(g.order()); ++a)
      if (!in[a]) {
        gens.push_back(a);
        break;
      }
    closure = subgroup_closure(g, gens);
  }
  return gens;
}

std::vector<std::vector<std::complex<double>>> abelian_characters(const FiniteGroup& a) {
  if (!a.abelian()) throw std::invalid_argument("character basis needs an abelian group");
  const int n = static_cast<int>(a.order());

  std::vector<int> orders(n);
  for (int v = 0; v < n; ++v) orders[v] = element_order(a, v);

  SplitMix64 rng(0xc0ffee);
  for (int attempt = 0; attempt < 8; ++attempt) {
    // A random real combination of the translation operators is a normal
    // matrix whose eigenvectors are the characters whenever its eigenvalues
    // are simple; retry with fresh coefficients if a collision slipped in.
    Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(n, n);
    for (int v = 0; v < n; ++v) {
      const double c = rng.uniform() * 2.0 - 1.0;
      for (int b = 0; b < n; ++b) t(a.op(v, b), b) += c;
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(t);
    if (es.info() != Eigen::Success) continue;

    std::vector<std::vector<std::complex<double>>> chars;
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      Eigen::VectorXcd v = es.eigenvectors().col(j);
      const std::complex<double> at_e = v(a.identity);
      if (std::abs(at_e) < 1e-8) {
        ok = false;
        break;
      }
      v /= at_e;
      std::vector<std::complex<double>> chi(n);
      for (int b = 0; b < n; ++b) {
        if (std::abs(std::abs(v(b)) - 1.0) > 1e-6) {
          ok = false;
          break;
        }
        const int k = orders[b];
        const double turns = std::arg(v(b)) / kTwoPi * k;
        chi[b] = std::polar(1.0, kTwoPi * std::round(turns) / k);
        if (std::abs(chi[b] - v(b)) > 1e-6) ok = false;
      }
      if (!ok) break;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          ok = std::abs(chi[a.op(x, y)] - chi[x] * chi[y]) <= 1e-9;
      chars.push_back(std::move(chi));
    }
    if (!ok) continue;

    std::sort(chars.begin(), chars.end(),
              [](const std::vector<std::complex<double>>& x,
                 const std::vector<std::complex<double>>& y) {
                for (std::size_t i = 0; i < x.size(); ++i) {
                  if (x[i].real() != y[i].real()) return x[i].real() < y[i].real();
                  if (x[i].imag() != y[i].imag()) return x[i].imag() < y[i].imag();
                }
                return false;
              });
    for (std::size_t i = 0; i + 1 < chars.size(); ++i)
      if (chars[i] == chars[i + 1]) {
        ok = false;
        break;
      }
    if (ok) return chars;
  }
  throw std::runtime_error("character diagonalization failed to separate");
}

std::vector<std::vector<std::complex<double>>> subgroup_characters(
    const FiniteGroup& g, const std::vector<int>& h) {
  if (!is_subgroup(g, h)) throw std::invalid_argument("element list is not a subgroup");
  const int m = static_cast<int>(h.size());
  std::vector<int> pos(g.order(), -1);
  for (int p = 0; p < m; ++p) pos[h[p]] = p;

  std::vector<std::vector<int>> hmul(m, std::vector<int>(m));
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) hmul[p][q] = pos[g.op(h[p], h[q])];
  const FiniteGroup sub = group_from_table(std::move(hmul));

  const std::vector<int> derived = commutator_subgroup(sub, [m] {
    std::vector<int> all(m);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }());

  // Cosets of the derived subgroup carry the abelian quotient whose
  // characters are exactly the one-dimensional characters of h.
  std::vector<int> coset(m, -1);
  std::vector<int> reps;
  for (int p = 0; p < m; ++p) {
    if (coset[p] >= 0) continue;
    const int id = static_cast<int>(reps.size());
    for (int d : derived) coset[sub.op(p, d)] = id;
    reps.push_back(p);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> qmul(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) qmul[i][j] = coset[sub.op(reps[i], reps[j])];
  const FiniteGroup quot = group_from_table(std::move(qmul));

  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& chi_q : abelian_characters(quot)) {
    std::vector<std::complex<double>> chi(m);
    for (int p = 0; p < m; ++p) chi[p] = chi_q[coset[p]];
    out.push_back(std::move(chi));
  }
  return out;
}

} // namespace orbitkit
