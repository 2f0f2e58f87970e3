#include <doctest.h>

#include <random>

#include "skl/lattice.hpp"

using namespace skl;
using namespace skl::lattice;

namespace {

long long det3(const IMat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

IMat matmul(const IMat& a, const IMat& b) {
  IMat c(a.size(), std::vector<long long>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

} // namespace

TEST_CASE("smith normal form: U A V = D with unimodular transforms") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> entry(-6, 6);
  for (int trial = 0; trial < 50; ++trial) {
    IMat a(3, std::vector<long long>(3));
    for (auto& row : a)
      for (auto& x : row) x = entry(rng);
    auto s = smith_normal_form(a);
    CHECK(std::abs(det3(s.u)) == 1);
    CHECK(std::abs(det3(s.v)) == 1);
    IMat d = matmul(matmul(s.u, a), s.v);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(d[i][j] == (i == j ? s.diag[i] : 0));
    for (std::size_t i = 0; i + 1 < 3; ++i) {
      CHECK(s.diag[i] >= 0);
      if (s.diag[i] != 0) CHECK(s.diag[i + 1] % s.diag[i] == 0);
    }
  }
}

TEST_CASE("smith normal form: known invariant factors") {
  // Z^2 / <(2,0),(0,3)> = Z/6 after divisibility normalization: diag (1, 6).
  auto s = smith_normal_form({{2, 0}, {0, 3}});
  CHECK(s.diag == std::vector<long long>{1, 6});
  auto t = smith_normal_form({{4, 0}, {0, 6}});
  CHECK(t.diag == std::vector<long long>{2, 12});
  auto z = smith_normal_form({{0, 0}, {0, 0}});
  CHECK(z.diag == std::vector<long long>{0, 0});
}

TEST_CASE("lattice quotient: rectangular sublattice and rank drop") {
  std::vector<RatVec> basis = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
  LatticeQuotient q(basis, {{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
  long long torsion = 1;
  for (long long d : q.invariants())
    if (d > 1) torsion *= d;
  CHECK(torsion == 6);
  CHECK(q.is_identity({Rat(2), Rat(3)}));
  CHECK_FALSE(q.is_identity({Rat(1), Rat(0)}));
  CHECK_FALSE(q.is_identity({Rat(0), Rat(2)}));
  CHECK_THROWS_AS(q.reduce({Rat(1, 2), Rat(0)}), std::invalid_argument);

  // One generator in Z^2: quotient has a free factor.
  LatticeQuotient half(basis, {{Rat(1), Rat(1)}});
  CHECK(half.is_identity({Rat(3), Rat(3)}));
  CHECK_FALSE(half.is_identity({Rat(1), Rat(0)}));
}

TEST_CASE("lattice quotient rejects generators outside the lattice") {
  std::vector<RatVec> basis = {{Rat(2), Rat(0)}, {Rat(0), Rat(2)}};
  CHECK_THROWS_AS(LatticeQuotient(basis, {{Rat(1), Rat(0)}}), std::invalid_argument);
}
