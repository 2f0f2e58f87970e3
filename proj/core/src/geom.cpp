#include "skl/geom.hpp"

#include <stdexcept>

#include "skl/leafdim.hpp"
#include "skl/parabolics.hpp"

namespace skl::geom {

long long intersect(const DivisorClassLattice& l, const DivisorClass& c1, const DivisorClass& c2) {
  const std::size_t r = l.labels.size();
  if (c1.size() != r || c2.size() != r) throw std::invalid_argument("intersect: rank mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) s += c1[i] * l.gram[i][j] * c2[j];
  return s;
}

long long arithmetic_genus(const DivisorClassLattice& l, const DivisorClass& c) {
  long long self = intersect(l, c, c);
  long long kc = intersect(l, l.canonical, c);
  if ((self + kc) % 2 != 0)
    throw std::invalid_argument("arithmetic_genus: C.C + K.C is odd");
  return 1 + (self + kc) / 2;
}

std::pair<DivisorClassLattice, DivisorClass> isotropic_example_model(long long n) {
  if (n < 2) throw std::invalid_argument("isotropic_example_model: n >= 2");
  DivisorClassLattice l;
  l.labels = {"phi", "z", "E10", "E1inf", "E20", "E2inf"};
  l.gram.assign(6, std::vector<long long>(6, 0));
  l.gram[0][1] = l.gram[1][0] = 1;
  for (int i = 2; i < 6; ++i) l.gram[i][i] = -1;
  l.canonical = {2, -2, 1, 1, 1, 1};
  DivisorClass gamma = {2 * n, 2 * n, -n, -n, -n, -n};
  return {l, gamma};
}

std::pair<DivisorClassLattice, DivisorClass> quadric_example_model(long long n) {
  if (n < 2) throw std::invalid_argument("quadric_example_model: n >= 2");
  DivisorClassLattice l;
  l.labels = {"s", "f"};
  l.gram = {{0, 1}, {1, 0}};
  l.canonical = {-2, 0};
  DivisorClass curve = {n, 2};
  return {l, curve};
}

long long geometric_genus_after_nodes(long long p_a, long long node_count) {
  if (node_count < 0 || node_count > p_a)
    throw std::invalid_argument("geometric_genus_after_nodes: node count out of range");
  return p_a - node_count;
}

long long riemann_hurwitz_quotient(long long g_cover, long long degree, long long ramification) {
  long long lhs = 2 * g_cover - 2 - ramification;
  if (lhs % degree != 0 || (lhs / degree + 2) % 2 != 0)
    throw std::invalid_argument("riemann_hurwitz_quotient: non-integral quotient genus");
  long long g = (lhs / degree + 2) / 2;
  if (g < 0) throw std::invalid_argument("riemann_hurwitz_quotient: negative genus");
  return g;
}

long long riemann_hurwitz_cover(long long g_base, long long degree, long long ramification) {
  long long two_g = degree * (2 * g_base - 2) + ramification + 2;
  if (two_g % 2 != 0) throw std::invalid_argument("riemann_hurwitz_cover: non-integral genus");
  long long g = two_g / 2;
  if (g < 0) throw std::invalid_argument("riemann_hurwitz_cover: negative genus");
  return g;
}

long long prym_dimension(long long g_cover, long long g_quotient) {
  if (g_cover < g_quotient) throw std::invalid_argument("prym_dimension: g_cover < g_quotient");
  return g_cover - g_quotient;
}

ExampleTag example_tag_from_string(const std::string& s) {
  if (s == "quadric") return ExampleTag::Quadric;
  if (s == "isotropic") return ExampleTag::Isotropic;
  if (s == "calogero") return ExampleTag::Calogero;
  if (s == "grassmann") return ExampleTag::Grassmann;
  throw std::invalid_argument("unknown example tag '" + s + "'");
}

std::string example_tag_name(ExampleTag t) {
  switch (t) {
    case ExampleTag::Quadric: return "quadric";
    case ExampleTag::Isotropic: return "isotropic";
    case ExampleTag::Calogero: return "calogero";
    case ExampleTag::Grassmann: return "grassmann";
  }
  throw std::logic_error("unreachable");
}

std::vector<ChainStep> genus_chain(ExampleTag tag, long long n) {
  std::vector<ChainStep> chain;
  switch (tag) {
    case ExampleTag::Isotropic: {
      auto [l, gamma] = isotropic_example_model(n);
      chain.push_back({"gamma.gamma", intersect(l, gamma, gamma)});
      chain.push_back({"K.gamma", intersect(l, l.canonical, gamma)});
      long long pa = arithmetic_genus(l, gamma);
      chain.push_back({"arithmetic_genus", pa});
      // n nodes along each of the two invariant sections.
      long long g_nodal = geometric_genus_after_nodes(pa, 2 * n);
      chain.push_back({"geometric_genus_after_nodes", g_nodal});
      long long g_quot = riemann_hurwitz_quotient(g_nodal, 2, 4 * n);
      chain.push_back({"genus_mod_center", g_quot});
      long long g_half = riemann_hurwitz_quotient(g_quot, 2, 0);
      chain.push_back({"genus_mod_free_involution", g_half});
      chain.push_back({"prym_dimension", prym_dimension(g_quot, g_half)});
      break;
    }
    case ExampleTag::Quadric: {
      auto [l, curve] = quadric_example_model(n);
      chain.push_back({"Gamma.Gamma", intersect(l, curve, curve)});
      chain.push_back({"deg_omega_restriction",
                       intersect(l, curve, curve) + intersect(l, l.canonical, curve)});
      long long pa = arithmetic_genus(l, curve);
      chain.push_back({"arithmetic_genus", pa});
      long long g_cover = riemann_hurwitz_cover(pa, 2, 0); // unramified double cover
      chain.push_back({"double_cover_genus", g_cover});
      chain.push_back({"prym_dimension", prym_dimension(g_cover, pa)});
      break;
    }
    case ExampleTag::Calogero: {
      // Cyclic n-cover of the elliptic base, totally ramified over two points.
      long long g = riemann_hurwitz_cover(1, n, 2 * (n - 1));
      chain.push_back({"spectral_curve_genus", g});
      break;
    }
    case ExampleTag::Grassmann: {
      auto rs = rootsys::build_root_system({rootsys::Family::A, static_cast<int>(n) - 1});
      for (int k = 1; k < n; ++k)
        chain.push_back({"grassmannian_dim_k" + std::to_string(k), parabolics::flag_dimension(rs, k)});
      break;
    }
  }
  return chain;
}

bool halfdim_consistency(ExampleTag tag, long long n) {
  using leafdim::cplx;
  const cplx tau(0.21, 1.13);
  const cplx p1(0.17, 0.23), p2(0.61, 0.48);
  const int ni = static_cast<int>(n);
  switch (tag) {
    case ExampleTag::Quadric: {
      auto chain = genus_chain(tag, n);
      long long prym = chain.back().value;
      auto sd = leafdim::make_quadric_data(ni, tau, p1, p2);
      return 2 * prym == leafdim::leaf_dimension(sd);
    }
    case ExampleTag::Isotropic: {
      auto chain = genus_chain(tag, n);
      long long prym = chain.back().value;
      auto sd = leafdim::make_isotropic_data(ni, tau, p1, p2);
      return 2 * prym == leafdim::leaf_dimension(sd);
    }
    case ExampleTag::Calogero: {
      long long genus = genus_chain(tag, n).front().value;
      auto sd = leafdim::make_calogero_data(ni, tau, p1, p2);
      return 2 * genus == leafdim::leaf_dimension(sd);
    }
    case ExampleTag::Grassmann: {
      for (int k = 1; k < n; ++k) {
        auto sd = leafdim::make_grassmann_data(ni, k, tau, p1, p2);
        auto rs = rootsys::build_root_system({rootsys::Family::A, ni - 1});
        long long flag = leafdim::gamma_orbit(rs, rs.fundamental_coweights[k - 1]);
        if (2 * flag != leafdim::leaf_dimension(sd)) return false;
      }
      return true;
    }
  }
  throw std::logic_error("unreachable");
}

} // namespace skl::geom
