#include "orbitkit/linalg.hpp"

#include <algorithm>

namespace orbitkit {

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t ncols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = Rational(1) / m[row][col];
    for (std::size_t j = col; j < ncols; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col].is_zero()) continue;
      Rational f = m[i][col];
      for (std::size_t j = col; j < ncols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  m.resize(row);
  return pivots;
}

RatMat nullspace(const RatMat& m, std::size_t ncols) {
  RatMat red = m;
  for (const auto& r : red)
    if (r.size() != ncols) throw std::invalid_argument("nullspace: row length mismatch");
  std::vector<std::size_t> pivots = rref(red);
  std::vector<bool> is_pivot(ncols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  RatMat basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(ncols);
    v[free] = Rational(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -red[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool solve(const RatMat& a, const RatVec& b, RatVec& x) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t ncols = a.empty() ? x.size() : a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  std::vector<std::size_t> pivots = rref(aug);
  x.assign(ncols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == ncols) return false; // pivot in the constant column
    x[pivots[i]] = aug[i][ncols];
  }
  return true;
}

bool Subspace::contains(const RatVec& v) const {
  if (v.size() != ambient_)
    throw std::invalid_argument("Subspace::contains: dimension mismatch");
  RatVec r = v;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    // rows_ is in RREF: eliminate using each row's leading 1.
    std::size_t lead = 0;
    while (lead < ambient_ && rows_[i][lead].is_zero()) ++lead;
    if (lead == ambient_) continue;
    if (!r[lead].is_zero()) {
      Rational f = r[lead];
      for (std::size_t j = lead; j < ambient_; ++j) r[j] -= f * rows_[i][j];
    }
  }
  return is_zero(r);
}

bool Subspace::contains(const Subspace& other) const {
  check_compatible_(other, "contains");
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  a.check_compatible_(b, "sum");
  RatMat rows = a.rows_;
  rows.insert(rows.end(), b.rows_.begin(), b.rows_.end());
  return Subspace(a.side_, a.ambient_, std::move(rows));
}

Subspace Subspace::intersect(const Subspace& other) const {
  check_compatible_(other, "intersect");
  // U cap V is the annihilator of ann(U) + ann(V).
  RatMat w = nullspace(rows_, ambient_);
  RatMat w2 = nullspace(other.rows_, ambient_);
  w.insert(w.end(), w2.begin(), w2.end());
  return Subspace(side_, ambient_, nullspace(w, ambient_));
}

Subspace Subspace::annihilator() const {
  Side flip = side_ == Side::algebra ? Side::dual : Side::algebra;
  return Subspace(flip, ambient_, nullspace(rows_, ambient_));
}

} // namespace orbitkit
