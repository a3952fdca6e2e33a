#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace orbitkit {

// Finite group presented by its full multiplication table.  Constructed only
// through the factories below, which validate the axioms (identity, inverses,
// associativity) and throw std::invalid_argument on a broken table.
struct FiniteGroup {
  std::vector<std::vector<int>> mul; // mul[a][b] = index of a*b
  std::vector<int> inv;
  int identity = 0;

  std::size_t order() const { return mul.size(); }
  int op(int a, int b) const { return mul[a][b]; }
  int inverse(int a) const { return inv[a]; }
  int conj(int a, int b) const { return mul[mul[a][b]][inv[a]]; } // a b a^-1
  bool abelian() const;
};

FiniteGroup group_from_table(std::vector<std::vector<int>> table);

// Text format: a line "order N" followed by N rows of N indices.
FiniteGroup load_group(const std::string& path);

FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n); // order 2n: indices 0..n-1 rotations, n..2n-1 reflections
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Upper unitriangular 3x3 matrices over Z/p, order p^3.  Element (a, b, c)
// with top row (1, a, c) and middle row (0, 1, b) sits at index a*p*p + b*p + c;
// the product picks up the twist c + c' + a*b'.
FiniteGroup heisenberg_mod(int p);

// Smallest subgroup containing the generators, as a sorted index list.
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);

// True iff h (a sorted-or-not index list) is closed under products and
// inverses and contains the identity.
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& h);

std::vector<int> center_of(const FiniteGroup& g);

// Subgroup generated by all commutators of elements of h.
std::vector<int> commutator_subgroup(const FiniteGroup& g, const std::vector<int>& h);

// A generating set of g of at most log2|g| elements, greedily extended.
std::vector<int> small_generating_set(const FiniteGroup& g);

// The |A| characters of an abelian group, each a value list indexed by group
// element, in a deterministic order (lexicographic in the value lists).
// Obtained by simultaneously diagonalizing the translation operators and
// snapping each value to the exact root of unity it approximates.  Throws
// std::invalid_argument if the group is not abelian.
std::vector<std::vector<std::complex<double>>> abelian_characters(const FiniteGroup& a);

// The one-dimensional characters of the subgroup h of g (i.e. the characters
// of h modulo its commutator subgroup), as value lists parallel to h.
std::vector<std::vector<std::complex<double>>> subgroup_characters(
    const FiniteGroup& g, const std::vector<int>& h);

} // namespace orbitkit
