#pragma once

#include "orbitkit/rational.hpp"

#include <vector>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbitkit {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVec zeros(std::size_t n) { return RatVec(n); }

inline bool is_zero(const RatVec& v) {
  for (const auto& x : v) if (!x.is_zero()) return false;
  return true;
}

inline RatVec add(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline RatVec sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline RatVec scale(const Rational& c, const RatVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

// Reduced row echelon form in place; zero rows are removed.
// Returns the pivot column of each surviving row, in order.
std::vector<std::size_t> rref(RatMat& m);

inline std::size_t rank(RatMat m) { return rref(m).size(); }

// Basis (as rows) of {v : m v = 0}, where m has `ncols` columns.
RatMat nullspace(const RatMat& m, std::size_t ncols);

// One exact solution of A x = b, written into x; returns false when inconsistent.
bool solve(const RatMat& a, const RatVec& b, RatVec& x);

// Which of the two mutually dual ambient spaces a subspace lives in: the Lie
// algebra itself or its dual. The annihilator construction swaps the tag.
enum class Side { algebra, dual };

// A linear subspace held in reduced-row-echelon canonical form, so that two
// subspaces are equal exactly when their representations coincide.
class Subspace {
public:
  Subspace(Side side, std::size_t ambient_dim)
      : side_(side), ambient_(ambient_dim) {}
  Subspace(Side side, std::size_t ambient_dim, RatMat spanning_rows)
      : side_(side), ambient_(ambient_dim), rows_(std::move(spanning_rows)) {
    for (const auto& r : rows_)
      if (r.size() != ambient_)
        throw std::invalid_argument("Subspace: row length != ambient dimension");
    rref(rows_);
  }

  Side side() const { return side_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const RatMat& basis() const { return rows_; }

  bool contains(const RatVec& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.side_ == b.side_ && a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

  // Span of the union of the two bases.
  friend Subspace operator+(const Subspace& a, const Subspace& b);

  Subspace intersect(const Subspace& other) const;

  // Annihilator under the standard pairing; lands in the opposite ambient space.
  Subspace annihilator() const;

private:
  Side side_;
  std::size_t ambient_;
  RatMat rows_;

  void check_compatible_(const Subspace& other, const char* what) const {
    if (side_ != other.side_ || ambient_ != other.ambient_)
      throw std::invalid_argument(std::string(what) + ": subspaces live in different spaces");
  }
};

} // namespace orbitkit
