#pragma once

#include "orbitkit/linalg.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbitkit {

// Coordinates of a linear functional on the algebra, in the dual basis.
using Covector = RatVec;

struct StructureReport {
  bool antisymmetric = false;
  bool jacobi = false;
  std::optional<int> nilpotent_class;
};

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

// A finite-dimensional real Lie algebra presented by structure constants on a
// chosen basis. Brackets are stored sparsely for ordered index pairs i < j;
// antisymmetry is implied. All arithmetic is exact.
class LieAlgebra {
public:
  LieAlgebra(std::size_t dim,
             std::vector<std::string> labels,
             std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets,
             std::map<std::string, Covector> named_covectors = {});

  // Bracket-file grammar: '#' comments; `dim N`; optional `basis l1 ... lN`
  // (default labels e1..eN); `bracket li lj -> q1*lk1 + q2*lk2 + ...` with
  // rational coefficients `p` or `p/q`; optional `covector name q1 ... qN`
  // lines naming distinguished dual points. Unlisted brackets are zero.
  static LieAlgebra parse(const std::string& text);
  static LieAlgebra load(const std::string& path);

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t index_of(const std::string& label) const;
  const std::map<std::string, Covector>& named_covectors() const { return covectors_; }

  RatVec basis_vector(std::size_t i) const;
  // [e_i, e_j] expanded on the basis.
  RatVec bracket_basis(std::size_t i, std::size_t j) const;
  RatVec bracket(const RatVec& u, const RatVec& v) const;

  StructureReport structure_check() const;
  std::optional<int> nilpotent_class() const { return nilpotent_class_; }

  // The covector W -> <x, [W, Z]>.
  Covector coadjoint_vector(const RatVec& z, const Covector& x) const;
  // Coadjoint flow exp(Z)(x) as a terminating power series; requires nilpotency.
  Covector exp_coadjoint(const RatVec& z, const Covector& x) const;

  // {W : <x, [W, Z]> = 0 for all Z in e}.
  Subspace perp_at(const Subspace& e, const Covector& x) const;

  Subspace whole_algebra() const;
  Subspace zero_subspace(Side side) const { return Subspace(side, dim_); }
  Subspace span_of(Side side, RatMat rows) const { return Subspace(side, dim_, std::move(rows)); }

  // Span of all [a_i, b_j] over bases of a and b.
  Subspace bracket_span(const Subspace& a, const Subspace& b) const;
  bool is_subalgebra(const Subspace& s) const;
  bool is_ideal(const Subspace& s) const;

  Subspace center() const;
  // C^1 = [g,g], C^{k+1} = [g, C^k]; stops at zero or when stationary.
  std::vector<Subspace> lower_central_series() const;
  // Z_1 = center, Z_{k+1} = {v : [v,g] in Z_k}; stops at g or when stationary.
  std::vector<Subspace> ascending_central_series() const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::map<std::pair<std::size_t, std::size_t>, RatVec> brackets_;
  std::map<std::string, Covector> covectors_;
  std::optional<int> nilpotent_class_;

  void compute_nilpotency_();
};

// Pairing of a dual-coordinate covector with an algebra vector.
inline Rational pair_with(const Covector& x, const RatVec& v) { return dot(x, v); }

// Annihilator passage between the algebra and its dual.
inline Subspace orth(const Subspace& s) { return s.annihilator(); }

} // namespace orbitkit
