#pragma once

#include "orbitkit/rational.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace orbitkit {

// Integer weight for u(n), indexed by the diagonal entries.  Dominance
// (weakly decreasing entries) is a predicate, not a type invariant, so the
// same type can hold Weyl-orbit points and raw weight-lattice elements.
using WeightVector = std::vector<int>;

bool is_dominant(const WeightVector& w);

// Partial-sum order on dominant weights: every prefix sum of lambda is at
// most the corresponding prefix sum of mu, with equal totals.  Throws
// std::invalid_argument unless both inputs are dominant and of equal length.
bool dominance_leq(const WeightVector& lambda, const WeightVector& mu);

// All distinct permutations of mu, lexicographically sorted.
std::vector<WeightVector> weyl_orbit(const WeightVector& mu);

// Exact test for p lying in the convex hull of the permutations of mu.
// Equivalent to majorization: sorted prefix sums of p dominated by those of
// mu, equal totals.  Throws std::invalid_argument on length mismatch or
// non-dominant mu.
bool hull_membership(const std::vector<Rational>& p, const WeightVector& mu);

// Floating-point companion for sampled points.  min_slack is the smallest
// value over proper prefixes of (prefix sum of sorted spectrum) minus
// (prefix sum of sorted p); nonnegative slack plus near-zero total_dev
// means p is majorized by the spectrum up to roundoff.
struct MajorizationSlack {
  double min_slack;
  double total_dev;
};
MajorizationSlack majorization_slack(std::vector<double> p,
                                     std::vector<double> spectrum);

// Weight multiset of the irreducible u(n) module with highest weight lambda,
// enumerated through Gelfand-Tsetlin patterns.  The multiplicity total
// equals weyl_dim(lambda).  Throws std::invalid_argument unless lambda is
// dominant.
std::map<WeightVector, int> weights_of_irrep(const WeightVector& lambda);

long long weyl_dim(const WeightVector& lambda);

// True iff the module with highest weight lambda occurs in the quantum
// family of the orbit through mu, i.e. lambda <= mu in dominance order.
// With verify set, the answer is recomputed geometrically (every weight of
// the lambda-module must lie in the hull of the mu-orbit) and a
// std::logic_error is raised if the two characterizations disagree.
bool quantum_check(const WeightVector& lambda, const WeightVector& mu,
                   bool verify = false);

// All dominant lambda with lambda <= mu, by bounded lattice search;
// lexicographically sorted, descending in the leading entries.
std::vector<WeightVector> list_quantum_modules(const WeightVector& mu);

// Quantum vs. classical partition functions over the diagonal direction z.
// lhs averages exp(-<nu,z>) over the weight multiset of the lambda-module;
// rhs is the normalized orbital integral of exp(-<p,z>) over the mu-orbit,
// evaluated by the exact stationary-point expansion (one term per orbit
// point, alternating-descent denominators).  holds <=> lhs >= rhs.
struct PartitionReport {
  double lhs;
  double rhs;
  bool holds;
};
PartitionReport partition_check(const WeightVector& lambda,
                                const WeightVector& mu,
                                const std::vector<double>& z);

} // namespace orbitkit
