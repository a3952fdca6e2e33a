#pragma once

#include "orbitkit/lie_algebra.hpp"
#include "orbitkit/polynomial.hpp"

#include <optional>
#include <vector>

namespace orbitkit {

// Linear data attached to a coadjoint orbit X through a base point:
// the linear span of X, its annihilator o, the kernel ideal c of the
// moment-variation map, and the dimension of the affine hull base + orth(c).
struct OrbitDatum {
  LieAlgebra alg;
  Covector base;
  Subspace span;               // dual side
  Subspace o;                  // algebra side, orth(span)
  Subspace c;                  // algebra side, {Z : K_Z kills span}
  std::size_t affine_hull_dim;
};

OrbitDatum orbit_datum(const LieAlgebra& alg, const Covector& x);

// dim X = dim g - dim of the stabilizer of x.
std::size_t orbit_dimension(const LieAlgebra& alg, const Covector& x);

struct XAbelianReport {
  bool x_abelian;   // all pairwise brackets of a land in o
  bool x_central;   // [g, a] lands in o
  bool subalgebra;  // a closed under the bracket
};

XAbelianReport x_abelian_check(const OrbitDatum& datum, const Subspace& a);

struct GridRange {
  double lo;
  double hi;
  std::size_t count; // number of samples, >= 1
};

// Orbit points restricted to the dual of a subalgebra a, described both as a
// finite sampled cloud and symbolically (polynomials in the orbit chart
// parameters), with a membership test for query points in a*.
class OrbitProjection {
public:
  OrbitProjection(std::vector<std::size_t> jump_indices,
                  std::vector<Poly> restriction,
                  std::vector<std::vector<double>> cloud)
      : jump_indices_(std::move(jump_indices)),
        restriction_(std::move(restriction)),
        cloud_(std::move(cloud)) {}

  // Chart directions: basis indices where the stabilizer meets the ideal
  // flag without growing.
  const std::vector<std::size_t>& jump_indices() const { return jump_indices_; }
  // Coordinates in the basis of a*, as polynomials in the chart parameters.
  const std::vector<Poly>& restriction() const { return restriction_; }
  const std::vector<std::vector<double>>& cloud() const { return cloud_; }

  // Whether q lies within tol of the projected orbit region. Resolves the
  // region symbolically (elimination on the chart polynomials) where the
  // shape is recognizable; falls back to proximity against the sampled cloud.
  bool contains(const std::vector<double>& q, double tol) const;

private:
  std::vector<std::size_t> jump_indices_;
  std::vector<Poly> restriction_;
  std::vector<std::vector<double>> cloud_;
};

// Second-kind coordinate chart for the orbit itself: one polynomial per
// ambient dual coordinate, in one parameter per jump index.
std::vector<Poly> orbit_chart(const OrbitDatum& datum, std::vector<std::size_t>* jumps_out = nullptr);

OrbitProjection project_orbit(const OrbitDatum& datum, const Subspace& a,
                              const std::vector<GridRange>& grid);

// Iterated-perp polarization at x; throws std::runtime_error with stage
// information when no qualifying ideal exists at some step.
Subspace polarize(const LieAlgebra& alg, const Covector& x);

struct SubordinateReport {
  bool subordinate;
  bool polarization;
  bool pukanszky;
};

SubordinateReport subordinate_pukanszky_check(const LieAlgebra& alg, const Subspace& h,
                                              const Covector& x);

struct FlatCorwinReport {
  bool flat;
  bool corwin;
  std::optional<Subspace> witness_a;
};

FlatCorwinReport flat_corwin_check(const OrbitDatum& datum);

struct LittleGroupDatum {
  Subspace ideal_a;
  RatVec p;        // base restricted to a, in a's canonical basis
  Subspace h;      // stabilizer algebra of p
  RatVec y_base;   // base restricted to h
  std::size_t dim_GH;
  std::size_t dim_Y;
};

LittleGroupDatum little_group_datum(const OrbitDatum& datum, const Subspace& a);

std::size_t induction_dim(std::size_t dim_GH, std::size_t dim_Y);

} // namespace orbitkit
