#pragma once

#include <array>
#include <vector>

#include "skl/rootsys.hpp"

namespace skl::toric {

using IVec2 = std::array<long long, 2>;

// Strongly convex rational cone in a rank-2 lattice, stored with primitive
// generators. The constructor reduces by gcd and throws std::invalid_argument
// on dependent generators.
struct Cone2D {
  IVec2 u, v;

  Cone2D(IVec2 u_, IVec2 v_);
  bool contains(const IVec2& p) const;
};

Cone2D dual_cone(const Cone2D& c);

// Minimal generating set of the semigroup of lattice points, by enumeration
// over the fundamental parallelogram of the generators followed by an
// irreducibility filter. Sorted lexicographically.
std::vector<IVec2> hilbert_basis(const Cone2D& c);

// The unique (up to scale) additive relation among exactly three semigroup
// generators, split by sign: lhs and rhs are exponent vectors aligned with
// the input, with disjoint supports and equal lattice value. Throws when the
// input size differs from 3 or no rank-1 relation exists.
struct BinomialRelation {
  std::array<long long, 3> lhs;
  std::array<long long, 3> rhs;
};

BinomialRelation binomial_relation(const std::vector<IVec2>& basis);

// Ray data of the local model X(O): the graphs (1, a) over the W-orbit of
// the given coweight, in Z + Ch(T)* coordinates (first entry the loop
// direction). Exact rationals; cardinality equals the orbit size.
std::vector<RatVec> rays_of_XO(const rootsys::RootSystem& rs, const RatVec& orbit_rep);

} // namespace skl::toric
