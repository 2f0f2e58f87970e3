#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "skl/toric.hpp"

using namespace skl;
using namespace skl::toric;

namespace {

long long cross(const IVec2& a, const IVec2& b) { return a[0] * b[1] - a[1] * b[0]; }

// Hirzebruch-Jung size oracle: normalize the cone to ((0,1), (n,-q)) with
// 0 <= q < n by a unimodular map; the Hilbert basis has 2 + len(HJ(n/q))
// elements (2 when the cone is smooth), where HJ is the ceiling continued
// fraction n/q = a1 - 1/(a2 - 1/(...)).
std::size_t hj_size_oracle(const Cone2D& c) {
  // Map u -> (0,1): rows (-u1, u0) and (x, y) with u0 x + u1 y = 1.
  long long a = c.u[0], b = c.u[1];
  long long x = 0, y = 0;
  for (long long t = -200; t <= 200 && !(x || y); ++t)
    for (long long s = -200; s <= 200; ++s)
      if (a * s + b * t == 1) {
        x = s;
        y = t;
        break;
      }
  REQUIRE((a * x + b * y) == 1);
  long long n = -b * c.v[0] + a * c.v[1];
  long long d = x * c.v[0] + y * c.v[1];
  if (n < 0) n = -n; // orientation flip fixes (0,1)
  REQUIRE(n > 0);
  long long q = ((-d) % n + n) % n;
  if (q == 0) return 2; // smooth
  std::size_t len = 0;
  while (q > 0) {
    long long ai = (n + q - 1) / q; // ceil(n/q)
    ++len;
    long long next_q = ai * q - n;
    n = q;
    q = next_q;
  }
  return 2 + len;
}

// Irreducibility by brute force: any decomposition p = q + r with q, r in the
// semigroup has q inside the parallelogram {s u + t v : 0 <= s <= s_p,
// 0 <= t <= t_p}, so a box scan over it is exhaustive.
bool irreducible_in_cone(const Cone2D& c, const IVec2& p) {
  long long det = cross(c.u, c.v);
  long long sp = cross(p, c.v), tp = cross(c.u, p);
  if (det < 0) {
    sp = -sp;
    tp = -tp;
    det = -det;
  }
  double s_hi = static_cast<double>(sp) / det, t_hi = static_cast<double>(tp) / det;
  long long bx = static_cast<long long>(std::ceil(s_hi * std::abs(c.u[0]) + t_hi * std::abs(c.v[0]))) + 1;
  long long by = static_cast<long long>(std::ceil(s_hi * std::abs(c.u[1]) + t_hi * std::abs(c.v[1]))) + 1;
  for (long long qx = -bx; qx <= bx; ++qx)
    for (long long qy = -by; qy <= by; ++qy) {
      IVec2 q{qx, qy};
      IVec2 r{p[0] - qx, p[1] - qy};
      if ((qx || qy) && (r[0] || r[1]) && c.contains(q) && c.contains(r)) return false;
    }
  return true;
}

} // namespace

TEST_CASE("cone construction: primitivity and degeneracy") {
  Cone2D c({2, 4}, {3, 0});
  CHECK(c.u == IVec2{1, 2});
  CHECK(c.v == IVec2{1, 0});
  CHECK_THROWS_AS(Cone2D({1, 2}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(Cone2D({0, 0}, {1, 0}), std::invalid_argument);
}

TEST_CASE("dual cone: SL(2) model, first quadrant, double duality") {
  for (long long k = 1; k <= 5; ++k) {
    Cone2D sigma({1, k}, {1, -k});
    Cone2D dual = dual_cone(sigma);
    std::set<IVec2> rays{dual.u, dual.v};
    CHECK(rays == std::set<IVec2>{{k, 1}, {k, -1}});
    Cone2D twice = dual_cone(dual);
    CHECK(std::set<IVec2>{twice.u, twice.v} == std::set<IVec2>{{1, k}, {1, -k}});
  }
  Cone2D quadrant({1, 0}, {0, 1});
  Cone2D dq = dual_cone(quadrant);
  CHECK(std::set<IVec2>{dq.u, dq.v} == std::set<IVec2>{{1, 0}, {0, 1}});
}

TEST_CASE("dual of <e, e+2a> verified by membership brute force") {
  Cone2D sigma({1, 0}, {1, 2});
  Cone2D dual = dual_cone(sigma);
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y) {
      bool in_dual_def = x >= 0 && x + 2 * y >= 0;
      CHECK(dual.contains({x, y}) == in_dual_def);
    }
}

TEST_CASE("hilbert basis: SL(2) dual cones give {e*, ke*+a*, ke*-a*}") {
  for (long long k = 1; k <= 5; ++k) {
    auto basis = hilbert_basis(dual_cone(Cone2D({1, k}, {1, -k})));
    std::vector<IVec2> expected{{1, 0}, {k, -1}, {k, 1}};
    std::sort(expected.begin(), expected.end());
    CHECK(basis == expected);
  }
}

TEST_CASE("hilbert basis: first quadrant") {
  CHECK(hilbert_basis(Cone2D({1, 0}, {0, 1})) == std::vector<IVec2>{{0, 1}, {1, 0}});
}

TEST_CASE("hilbert basis size matches the continued-fraction oracle") {
  auto dual = dual_cone(Cone2D({1, 0}, {1, 5}));
  CHECK(hj_size_oracle(dual) == 3);
  CHECK(hilbert_basis(dual).size() == 3);
  // And the primal, which is the degree-5 rational normal cone: 6 generators.
  CHECK(hj_size_oracle(Cone2D({1, 0}, {1, 5})) == 6);
  CHECK(hilbert_basis(Cone2D({1, 0}, {1, 5})).size() == 6);

  for (const auto& c : {Cone2D({2, 1}, {1, 3}), Cone2D({1, -2}, {3, 1}), Cone2D({1, 0}, {0, 1}),
                        Cone2D({3, -1}, {2, 5})}) {
    CHECK(hilbert_basis(c).size() == hj_size_oracle(c));
    CHECK(hilbert_basis(dual_cone(c)).size() == hj_size_oracle(dual_cone(c)));
  }
}

TEST_CASE("hilbert basis elements are irreducible and generate") {
  std::mt19937_64 rng(4);
  for (const auto& c : {dual_cone(Cone2D({1, 3}, {1, -3})), Cone2D({2, 1}, {1, 4})}) {
    auto basis = hilbert_basis(c);
    for (const auto& p : basis) CHECK(irreducible_in_cone(c, p));
    // Completeness nearby: every irreducible point within a small box is listed.
    for (long long x = -6; x <= 6; ++x)
      for (long long y = -6; y <= 6; ++y) {
        IVec2 p{x, y};
        if ((!x && !y) || !c.contains(p)) continue;
        bool listed = std::find(basis.begin(), basis.end(), p) != basis.end();
        CHECK(listed == irreducible_in_cone(c, p));
      }
    // Generation: random semigroup points up to height 50 decompose greedily.
    std::uniform_int_distribution<long long> pick(-50, 50);
    int tested = 0;
    while (tested < 40) {
      IVec2 p{pick(rng), pick(rng)};
      if ((!p[0] && !p[1]) || !c.contains(p)) continue;
      ++tested;
      IVec2 rem = p;
      bool progress = true;
      while ((rem[0] || rem[1]) && progress) {
        progress = false;
        for (const auto& b : basis) {
          IVec2 next{rem[0] - b[0], rem[1] - b[1]};
          if ((next[0] == 0 && next[1] == 0) || c.contains(next)) {
            rem = next;
            progress = true;
            break;
          }
        }
      }
      CHECK((rem[0] == 0 && rem[1] == 0));
    }
  }
}

TEST_CASE("binomial relation: x^{2k} = wz for the SL(2) family") {
  for (long long k = 1; k <= 5; ++k) {
    auto basis = hilbert_basis(dual_cone(Cone2D({1, k}, {1, -k})));
    auto rel = binomial_relation(basis);
    const auto e_star = std::find(basis.begin(), basis.end(), IVec2{1, 0});
    REQUIRE(e_star != basis.end());
    const std::size_t i = e_star - basis.begin();
    CHECK(rel.lhs[i] == 2 * k);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(rel.rhs[j] == (j == i ? 0 : 1));
      if (j != i) CHECK(rel.lhs[j] == 0);
    }
  }
}

TEST_CASE("binomial relation rejects free semigroups and wrong sizes") {
  auto quadrant = hilbert_basis(Cone2D({1, 0}, {0, 1}));
  CHECK(quadrant.size() == 2);
  CHECK_THROWS_AS(binomial_relation(quadrant), std::invalid_argument);
  CHECK_THROWS_AS(binomial_relation({{1, 0}, {2, 0}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("rays of X(O): SL(2), zero orbit, D4 spinor orbit") {
  auto a1 = rootsys::build_root_system({rootsys::Family::A, 1});
  for (long long k = 1; k <= 3; ++k) {
    RatVec v = vscale(Rat(k), a1.simple_coroots[0]);
    auto rays = rays_of_XO(a1, v);
    CHECK(rays.size() == 2);
    std::set<RatVec> got(rays.begin(), rays.end());
    RatVec plus{Rat(1), Rat(k), Rat(-k)};
    RatVec minus{Rat(1), Rat(-k), Rat(k)};
    CHECK(got == std::set<RatVec>{plus, minus});
  }
  auto zero = rays_of_XO(a1, RatVec(2, Rat(0)));
  CHECK(zero == std::vector<RatVec>{{Rat(1), Rat(0), Rat(0)}});

  auto d4 = rootsys::build_root_system({rootsys::Family::D, 4});
  auto rays = rays_of_XO(d4, d4.fundamental_coweights[3]);
  CHECK(rays.size() == 8);
  for (const auto& r : rays) CHECK(r[0] == Rat(1));
}
