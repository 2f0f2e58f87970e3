#pragma once

#include <vector>

#include "skl/ratlin.hpp"

namespace skl::lattice {

using IMat = std::vector<std::vector<long long>>;

// U * A * V = D with U, V unimodular and D diagonal with d_1 | d_2 | ...
struct SmithForm {
  IMat u, v;
  std::vector<long long> diag; // nonnegative, length min(m, n)
};

SmithForm smith_normal_form(IMat a);

// The finite-presentation quotient L / S of a lattice L (columns `basis`,
// in ambient rational coordinates) by the sublattice S spanned by `sub_gens`.
// Elements are classified by an exact normal form derived from the Smith
// decomposition of the inclusion matrix.
class LatticeQuotient {
 public:
  LatticeQuotient(std::vector<RatVec> basis, const std::vector<RatVec>& sub_gens);

  // Invariant factors aligned with the reduced coordinates: entry d > 0
  // means a Z/d factor, d == 0 a free Z factor.
  const std::vector<long long>& invariants() const { return invariants_; }

  // Coordinates of the class of `ambient` in the normal form. Throws
  // std::invalid_argument when the vector is not in L.
  std::vector<long long> reduce(const RatVec& ambient) const;
  bool is_identity(const RatVec& ambient) const;

 private:
  std::vector<RatVec> basis_;
  IMat u_;
  std::vector<long long> invariants_;
};

} // namespace skl::lattice
