#include "skl/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace skl::toric {

namespace {

long long det2(const IVec2& a, const IVec2& b) { return a[0] * b[1] - a[1] * b[0]; }

IVec2 primitive(IVec2 p) {
  long long g = std::gcd(std::llabs(p[0]), std::llabs(p[1]));
  if (g > 1) {
    p[0] /= g;
    p[1] /= g;
  }
  return p;
}

} // namespace

Cone2D::Cone2D(IVec2 u_, IVec2 v_) : u(primitive(u_)), v(primitive(v_)) {
  if ((u[0] == 0 && u[1] == 0) || (v[0] == 0 && v[1] == 0) || det2(u, v) == 0)
    throw std::invalid_argument("Cone2D: generators must be linearly independent");
}

bool Cone2D::contains(const IVec2& p) const {
  // p = s u + t v with s, t >= 0, via Cramer.
  long long d = det2(u, v);
  long long s_num = det2(p, v);
  long long t_num = det2(u, p);
  if (d < 0) {
    d = -d;
    s_num = -s_num;
    t_num = -t_num;
  }
  return s_num >= 0 && t_num >= 0;
}

Cone2D dual_cone(const Cone2D& c) {
  // The two facet normals, oriented into the cone.
  IVec2 nu{-c.u[1], c.u[0]};
  IVec2 nv{-c.v[1], c.v[0]};
  auto dotp = [](const IVec2& a, const IVec2& b) { return a[0] * b[0] + a[1] * b[1]; };
  if (dotp(nu, c.v) < 0) nu = {-nu[0], -nu[1]};
  if (dotp(nv, c.u) < 0) nv = {-nv[0], -nv[1]};
  return Cone2D(nu, nv);
}

std::vector<IVec2> hilbert_basis(const Cone2D& c) {
  // Every irreducible semigroup element lies in {s u + t v : 0 <= s, t <= 1}.
  long long min_x = std::min({0LL, c.u[0], c.v[0], c.u[0] + c.v[0]});
  long long max_x = std::max({0LL, c.u[0], c.v[0], c.u[0] + c.v[0]});
  long long min_y = std::min({0LL, c.u[1], c.v[1], c.u[1] + c.v[1]});
  long long max_y = std::max({0LL, c.u[1], c.v[1], c.u[1] + c.v[1]});
  const long long d = std::llabs(det2(c.u, c.v));
  std::vector<IVec2> candidates;
  for (long long x = min_x; x <= max_x; ++x)
    for (long long y = min_y; y <= max_y; ++y) {
      if (x == 0 && y == 0) continue;
      IVec2 p{x, y};
      if (!c.contains(p)) continue;
      // s, t <= 1 in the Cramer coordinates.
      long long s_num = det2(p, c.v);
      long long t_num = det2(c.u, p);
      if (det2(c.u, c.v) < 0) {
        s_num = -s_num;
        t_num = -t_num;
      }
      if (s_num <= d && t_num <= d) candidates.push_back(p);
    }
  std::vector<IVec2> basis;
  for (const auto& p : candidates) {
    bool reducible = false;
    for (const auto& q : candidates) {
      if (q == p) continue;
      IVec2 rem{p[0] - q[0], p[1] - q[1]};
      if ((rem[0] != 0 || rem[1] != 0) && c.contains(rem)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

BinomialRelation binomial_relation(const std::vector<IVec2>& basis) {
  if (basis.size() != 3)
    throw std::invalid_argument("binomial_relation: need exactly 3 generators (free semigroup?)");
  const IVec2 &a = basis[0], &b = basis[1], &c = basis[2];
  // Kernel generator of the 2x3 matrix [a b c].
  std::array<long long, 3> k{det2(b, c), det2(c, a), det2(a, b)};
  long long g = std::gcd(std::gcd(std::llabs(k[0]), std::llabs(k[1])), std::llabs(k[2]));
  if (g == 0) throw std::invalid_argument("binomial_relation: no rank-1 relation");
  for (auto& x : k) x /= g;
  if (std::count(k.begin(), k.end(), 0LL) > 0)
    throw std::invalid_argument("binomial_relation: degenerate relation (collinear pair)");
  // Orient so that exactly one exponent is on the left.
  int pos = 0;
  for (long long x : k)
    if (x > 0) ++pos;
  if (pos == 2)
    for (auto& x : k) x = -x;
  BinomialRelation rel{{0, 0, 0}, {0, 0, 0}};
  for (int i = 0; i < 3; ++i) {
    if (k[i] > 0)
      rel.lhs[i] = k[i];
    else
      rel.rhs[i] = -k[i];
  }
  return rel;
}

std::vector<RatVec> rays_of_XO(const rootsys::RootSystem& rs, const RatVec& orbit_rep) {
  bool zero = std::all_of(orbit_rep.begin(), orbit_rep.end(), [](const Rat& c) { return c == Rat(0); });
  if (zero) {
    RatVec ray(rs.ambient_dim + 1, Rat(0));
    ray[0] = Rat(1);
    return {ray};
  }
  std::vector<RatVec> rays;
  for (const auto& a : rootsys::weyl_orbit(rs, orbit_rep)) {
    RatVec ray;
    ray.reserve(rs.ambient_dim + 1);
    ray.push_back(Rat(1));
    ray.insert(ray.end(), a.begin(), a.end());
    rays.push_back(std::move(ray));
  }
  return rays;
}

} // namespace skl::toric
