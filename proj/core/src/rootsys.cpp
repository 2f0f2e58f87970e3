#include "skl/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace skl::rootsys {

namespace {

RatVec eps(int dim, int i) { // epsilon_i, 1-based
  RatVec v(dim, Rat(0));
  v[i - 1] = Rat(1);
  return v;
}

std::vector<RatVec> simple_roots_for(const CartanType& t, int& ambient_dim) {
  const int n = t.rank;
  std::vector<RatVec> s;
  switch (t.family) {
    case Family::A: {
      ambient_dim = n + 1;
      for (int i = 1; i <= n; ++i) s.push_back(vsub(eps(ambient_dim, i), eps(ambient_dim, i + 1)));
      break;
    }
    case Family::B: {
      ambient_dim = n;
      for (int i = 1; i < n; ++i) s.push_back(vsub(eps(n, i), eps(n, i + 1)));
      s.push_back(eps(n, n));
      break;
    }
    case Family::C: {
      ambient_dim = n;
      for (int i = 1; i < n; ++i) s.push_back(vsub(eps(n, i), eps(n, i + 1)));
      s.push_back(vscale(Rat(2), eps(n, n)));
      break;
    }
    case Family::D: {
      ambient_dim = n;
      for (int i = 1; i < n; ++i) s.push_back(vsub(eps(n, i), eps(n, i + 1)));
      s.push_back(vadd(eps(n, n - 1), eps(n, n)));
      break;
    }
    case Family::E: {
      ambient_dim = 8;
      // Bourbaki plates V-VII; E6/E7 are the first 6/7 simple roots of E8.
      RatVec a1(8, Rat(-1, 2)); // (1/2)(e1 + e8) - (1/2)(e2 + ... + e7)
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      std::vector<RatVec> e8;
      e8.push_back(a1);
      e8.push_back(vadd(eps(8, 1), eps(8, 2)));
      e8.push_back(vsub(eps(8, 2), eps(8, 1)));
      for (int i = 3; i <= 7; ++i) e8.push_back(vsub(eps(8, i), eps(8, i - 1)));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F: {
      ambient_dim = 4;
      s.push_back(vsub(eps(4, 2), eps(4, 3)));
      s.push_back(vsub(eps(4, 3), eps(4, 4)));
      s.push_back(eps(4, 4));
      RatVec a4(4, Rat(-1, 2));
      a4[0] = Rat(1, 2);
      s.push_back(a4);
      break;
    }
    case Family::G: {
      ambient_dim = 3;
      s.push_back(vsub(eps(3, 1), eps(3, 2)));
      RatVec a2(3, Rat(1));
      a2[0] = Rat(-2);
      s.push_back(a2);
      break;
    }
  }
  return s;
}

} // namespace

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default: throw std::invalid_argument(std::string("unknown Cartan family '") + c + "'");
  }
}

char family_char(Family f) { return static_cast<char>(f); }

void validate(const CartanType& t) {
  const int n = t.rank;
  bool ok = false;
  switch (t.family) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 2; break; // D2 = A1 x A1, wanted by the rank-2 quadric/isotropic data
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid rank " + std::to_string(n) + " for family " +
                                family_char(t.family));
}

std::string RootSystem::name() const {
  return std::string(1, family_char(type.family)) + std::to_string(type.rank);
}

RatVec RootSystem::reflect(const RatVec& v, const RatVec& root) const {
  Rat c = Rat(2) * dot(v, root) / dot(root, root);
  return vsub(v, vscale(c, root));
}

bool RootSystem::is_dominant(const RatVec& ambient) const {
  for (const auto& a : simple_roots)
    if (dot(a, ambient) < Rat(0)) return false;
  return true;
}

RatVec RootSystem::to_ambient(const LatticeVector& v) const {
  switch (v.basis) {
    case Basis::Ambient:
      if (static_cast<int>(v.coords.size()) != ambient_dim)
        throw std::invalid_argument("ambient vector has length " + std::to_string(v.coords.size()) +
                                    ", expected " + std::to_string(ambient_dim));
      return v.coords;
    case Basis::FundamentalWeight:
    case Basis::FundamentalCoweight: {
      if (static_cast<int>(v.coords.size()) != rank())
        throw std::invalid_argument("basis vector has length " + std::to_string(v.coords.size()) +
                                    ", expected rank " + std::to_string(rank()));
      const auto& basis =
          v.basis == Basis::FundamentalWeight ? fundamental_weights : fundamental_coweights;
      RatVec out(ambient_dim, Rat(0));
      for (int i = 0; i < rank(); ++i) out = vadd(out, vscale(v.coords[i], basis[i]));
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

LatticeVector RootSystem::from_ambient(const RatVec& ambient, Basis target) const {
  if (static_cast<int>(ambient.size()) != ambient_dim)
    throw std::invalid_argument("from_ambient: wrong length");
  if (target == Basis::Ambient) return {ambient, Basis::Ambient};
  RatVec coords(rank());
  for (int i = 0; i < rank(); ++i)
    coords[i] = target == Basis::FundamentalWeight ? dot(ambient, simple_coroots[i])
                                                   : dot(ambient, simple_roots[i]);
  // Reconstruct and compare: rejects vectors outside the root span rather
  // than projecting them.
  LatticeVector out{coords, target};
  if (to_ambient(out) != ambient)
    throw std::invalid_argument("vector is not in the span of the roots; cannot express in " +
                                std::string(target == Basis::FundamentalWeight
                                                ? "fundamental-weight"
                                                : "fundamental-coweight") +
                                " basis");
  return out;
}

RootSystem build_root_system(const CartanType& t) {
  validate(t);
  RootSystem rs;
  rs.type = t;
  rs.simple_roots = simple_roots_for(t, rs.ambient_dim);
  const int r = t.rank;

  for (const auto& a : rs.simple_roots)
    rs.simple_coroots.push_back(vscale(Rat(2) / dot(a, a), a));

  // Reflection closure of the simple roots.
  std::set<RatVec> closure(rs.simple_roots.begin(), rs.simple_roots.end());
  std::deque<RatVec> queue(rs.simple_roots.begin(), rs.simple_roots.end());
  while (!queue.empty()) {
    RatVec v = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      RatVec w = rs.reflect(v, a);
      if (closure.insert(w).second) queue.push_back(w);
    }
  }
  rs.roots.assign(closure.begin(), closure.end());

  // Simple-root expansions; every root must be all-nonnegative or
  // all-nonpositive in this basis.
  for (const auto& b : rs.roots) {
    auto x = solve_columns(rs.simple_roots, b);
    if (!x) throw std::logic_error("root outside the span of the simple roots");
    rs.root_simple_coords.push_back(*x);
    bool nonneg = std::all_of(x->begin(), x->end(), [](const Rat& c) { return c >= Rat(0); });
    bool nonpos = std::all_of(x->begin(), x->end(), [](const Rat& c) { return c <= Rat(0); });
    if (!nonneg && !nonpos) throw std::logic_error("root with mixed-sign expansion");
    if (nonneg) rs.positive_roots.push_back(b);
  }
  if (rs.roots.size() != 2 * rs.positive_roots.size())
    throw std::logic_error("|Phi| != 2 |Phi_+|");

  rs.cartan_matrix.assign(r, std::vector<long long>(r, 0));
  RatMat cartan_rat(r, RatVec(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Rat c = dot(rs.simple_roots[i], rs.simple_coroots[j]);
      if (!is_integer(c)) throw std::logic_error("non-integral Cartan entry");
      rs.cartan_matrix[i][j] = c.numerator();
      cartan_rat[i][j] = c;
    }

  // lambda_i = sum_k (C^-1)_{ik} alpha_k and lambda_i^vee = sum_k (C^-1)_{ki} alpha_k^vee.
  RatMat cinv = mat_inverse(cartan_rat);
  for (int i = 0; i < r; ++i) {
    RatVec w(rs.ambient_dim, Rat(0)), cw(rs.ambient_dim, Rat(0));
    for (int k = 0; k < r; ++k) {
      w = vadd(w, vscale(cinv[i][k], rs.simple_roots[k]));
      cw = vadd(cw, vscale(cinv[k][i], rs.simple_coroots[k]));
    }
    rs.fundamental_weights.push_back(w);
    rs.fundamental_coweights.push_back(cw);
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (dot(rs.fundamental_weights[i], rs.simple_coroots[j]) != Rat(i == j ? 1 : 0))
        throw std::logic_error("(lambda_i, alpha_j^vee) != delta_ij");
      if (dot(rs.fundamental_coweights[i], rs.simple_roots[j]) != Rat(i == j ? 1 : 0))
        throw std::logic_error("(lambda_i^vee, alpha_j) != delta_ij");
    }

  RatVec delta(rs.ambient_dim, Rat(0));
  for (const auto& w : rs.fundamental_weights) delta = vadd(delta, w);
  RatVec half_sum(rs.ambient_dim, Rat(0));
  for (const auto& b : rs.positive_roots) half_sum = vadd(half_sum, b);
  half_sum = vscale(Rat(1, 2), half_sum);
  if (delta != half_sum) throw std::logic_error("delta != half sum of positive roots");
  rs.weyl_vector = delta;

  return rs;
}

std::set<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& ambient_v) {
  if (static_cast<int>(ambient_v.size()) != rs.ambient_dim)
    throw std::invalid_argument("weyl_orbit: wrong vector length");
  std::set<RatVec> orbit{ambient_v};
  std::deque<RatVec> queue{ambient_v};
  while (!queue.empty()) {
    RatVec v = queue.front();
    queue.pop_front();
    for (const auto& a : rs.simple_roots) {
      RatVec w = rs.reflect(v, a);
      if (orbit.insert(w).second) queue.push_back(w);
    }
  }
  return orbit;
}

std::set<LatticeVector> orbit_as_lattice_vectors(const RootSystem& rs, const LatticeVector& v) {
  std::set<LatticeVector> out;
  for (const auto& w : weyl_orbit(rs, rs.to_ambient(v))) out.insert({w, Basis::Ambient});
  return out;
}

RatVec dominant_representative(const RootSystem& rs, const RatVec& ambient_v) {
  RatVec v = ambient_v;
  for (;;) {
    bool moved = false;
    for (const auto& a : rs.simple_roots) {
      if (dot(a, v) < Rat(0)) {
        v = rs.reflect(v, a);
        moved = true;
      }
    }
    if (!moved) return v;
  }
}

RatVec antidominant_representative(const RootSystem& rs, const RatVec& ambient_v) {
  return vneg(dominant_representative(rs, vneg(ambient_v)));
}

Rat pair(const RootSystem& rs, const LatticeVector& w, const LatticeVector& a) {
  if (w.basis == Basis::FundamentalCoweight)
    throw std::invalid_argument("pair: first argument must be on the weight side");
  if (a.basis == Basis::FundamentalWeight)
    throw std::invalid_argument("pair: second argument must be on the coweight side");
  return dot(rs.to_ambient(w), rs.to_ambient(a));
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  if (a.basis != b.basis) return a.basis < b.basis;
  return a.coords < b.coords;
}

} // namespace skl::rootsys
