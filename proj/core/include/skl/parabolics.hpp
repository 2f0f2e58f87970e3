#pragma once

#include <vector>

#include "skl/rootsys.hpp"

namespace skl::parabolics {

// Simple roots alpha_i (1-based Bourbaki indices) whose dual coweight
// alpha_i^* pairs with every root in {0, 1, -1}; the corresponding orbit in
// the loop Grassmannian is the flag variety G/P_{alpha_i} itself.
std::vector<int> compact_orbit_roots(const rootsys::RootSystem& rs);

// sum over roots beta of max(0, -alpha_i^*(beta)); equals dim G/P_{alpha_i}
// (and gamma of the alpha_i^* orbit) when the compact-orbit condition holds.
long long flag_dimension(const rootsys::RootSystem& rs, int i);

struct TableRow {
  rootsys::CartanType type;
  std::vector<int> compact_roots;
  std::vector<long long> flag_dims; // aligned with compact_roots
};

// All types A1.., B2.., C2.., D3.. up to max_rank, plus E6..E8, F4, G2 when
// their rank fits.
std::vector<TableRow> classification_table(int max_rank);

} // namespace skl::parabolics
