#include "skl/lattice.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace skl::lattice {

namespace {

IMat identity(std::size_t n) {
  IMat m(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void row_add(IMat& m, std::size_t dst, std::size_t src, long long f) {
  for (std::size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

void col_add(IMat& m, std::size_t dst, std::size_t src, long long f) {
  for (std::size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

void row_swap(IMat& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void col_swap(IMat& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

void row_neg(IMat& m, std::size_t i) {
  for (auto& x : m[i]) x = -x;
}

} // namespace

SmithForm smith_normal_form(IMat a) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a[0].size();
  SmithForm s;
  s.u = identity(m);
  s.v = identity(n);
  const std::size_t k = std::min(m, n);

  for (std::size_t t = 0; t < k; ++t) {
    // Move a nonzero pivot of minimal magnitude to (t, t).
    for (;;) {
      std::size_t pi = t, pj = t;
      long long best = 0;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (best == 0 || std::llabs(a[i][j]) < best)) {
            best = std::llabs(a[i][j]);
            pi = i;
            pj = j;
          }
      if (best == 0) break; // block is zero
      if (pi != t) {
        row_swap(a, pi, t);
        row_swap(s.u, pi, t);
      }
      if (pj != t) {
        col_swap(a, pj, t);
        col_swap(s.v, pj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        long long q = a[i][t] / a[t][t];
        row_add(a, i, t, -q);
        row_add(s.u, i, t, -q);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        long long q = a[t][j] / a[t][t];
        col_add(a, j, t, -q);
        col_add(s.v, j, t, -q);
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the remaining block by the pivot.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m && fixed; ++i)
        for (std::size_t j = t + 1; j < n && fixed; ++j)
          if (a[i][j] % a[t][t] != 0) {
            row_add(a, t, i, 1);
            row_add(s.u, t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (a[t][t] < 0) {
      row_neg(a, t);
      row_neg(s.u, t);
    }
  }
  s.diag.resize(k);
  for (std::size_t t = 0; t < k; ++t) s.diag[t] = a[t][t];
  return s;
}

LatticeQuotient::LatticeQuotient(std::vector<RatVec> basis, const std::vector<RatVec>& sub_gens)
    : basis_(std::move(basis)) {
  const std::size_t r = basis_.size();
  IMat incl(r, std::vector<long long>(sub_gens.size(), 0));
  for (std::size_t j = 0; j < sub_gens.size(); ++j) {
    auto x = solve_columns(basis_, sub_gens[j]);
    if (!x || !is_integral(*x))
      throw std::invalid_argument("sublattice generator outside the lattice");
    for (std::size_t i = 0; i < r; ++i) incl[i][j] = (*x)[i].numerator();
  }
  SmithForm s = smith_normal_form(std::move(incl));
  u_ = std::move(s.u);
  invariants_.assign(r, 0);
  for (std::size_t i = 0; i < s.diag.size(); ++i) invariants_[i] = s.diag[i];
}

std::vector<long long> LatticeQuotient::reduce(const RatVec& ambient) const {
  auto x = solve_columns(basis_, ambient);
  if (!x || !is_integral(*x))
    throw std::invalid_argument("vector outside the declared cocharacter lattice");
  const std::size_t r = basis_.size();
  std::vector<long long> y(r, 0);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) y[i] += u_[i][j] * (*x)[j].numerator();
  for (std::size_t i = 0; i < r; ++i) {
    if (invariants_[i] > 0) {
      y[i] %= invariants_[i];
      if (y[i] < 0) y[i] += invariants_[i];
    }
  }
  return y;
}

bool LatticeQuotient::is_identity(const RatVec& ambient) const {
  for (long long c : reduce(ambient))
    if (c != 0) return false;
  return true;
}

} // namespace skl::lattice
