#include "skl/leafdim.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace skl::leafdim {

using rootsys::Family;
using rootsys::RootSystem;

LatticeModel lattice_model_from_string(const std::string& s) {
  if (s == "simply_connected") return LatticeModel::SimplyConnected;
  if (s == "adjoint") return LatticeModel::Adjoint;
  if (s == "standard") return LatticeModel::Standard;
  if (s == "gl") return LatticeModel::GLFull;
  throw std::invalid_argument("unknown lattice model '" + s + "'");
}

std::string lattice_model_name(LatticeModel m) {
  switch (m) {
    case LatticeModel::SimplyConnected: return "simply_connected";
    case LatticeModel::Adjoint: return "adjoint";
    case LatticeModel::Standard: return "standard";
    case LatticeModel::GLFull: return "gl";
  }
  throw std::logic_error("unreachable");
}

bool GroupSpec::contains_coweight(const RatVec& ambient) const {
  auto x = solve_columns(cochar_basis, ambient);
  return x && is_integral(*x);
}

GroupSpec make_group(RootSystem rs, LatticeModel model, int center_dim) {
  GroupSpec g;
  g.model = model;
  switch (model) {
    case LatticeModel::SimplyConnected: g.cochar_basis = rs.simple_coroots; break;
    case LatticeModel::Adjoint: g.cochar_basis = rs.fundamental_coweights; break;
    case LatticeModel::Standard: {
      if (rs.type.family == Family::B || rs.type.family == Family::D) {
        for (int i = 0; i < rs.ambient_dim; ++i) {
          RatVec e(rs.ambient_dim, Rat(0));
          e[i] = Rat(1);
          g.cochar_basis.push_back(e);
        }
      } else {
        g.cochar_basis = rs.simple_coroots;
      }
      break;
    }
    case LatticeModel::GLFull: {
      if (rs.type.family != Family::A)
        throw std::invalid_argument("GL lattice model requires family A");
      for (int i = 0; i < rs.ambient_dim; ++i) {
        RatVec e(rs.ambient_dim, Rat(0));
        e[i] = Rat(1);
        g.cochar_basis.push_back(e);
      }
      break;
    }
  }
  g.center_dim = center_dim >= 0 ? center_dim : (model == LatticeModel::GLFull ? 1 : 0);
  g.rs = std::move(rs);
  return g;
}

SingularityData make_singularity_data(GroupSpec group, cplx tau,
                                      const std::vector<SingularityDatum>& raw) {
  SingularityData sd;
  sd.tau = tau;
  ellfun::EllipticContext ctx(tau);
  for (const auto& d : raw) {
    if (!group.contains_coweight(d.coweight))
      throw std::invalid_argument("coweight outside the declared cocharacter lattice");
    SingularityDatum nd;
    nd.point = ellfun::reduce_to_fundamental(ctx, d.point);
    nd.coweight = rootsys::dominant_representative(group.rs, d.coweight);
    for (const auto& prev : sd.points)
      if (ellfun::lattice_distance(ctx, prev.point - nd.point) < 1e-9)
        throw std::invalid_argument("singularity points collide modulo the period lattice");
    sd.points.push_back(std::move(nd));
  }
  sd.group = std::move(group);
  return sd;
}

namespace {

long long gamma_sum_over_roots(const RootSystem& rs, const RatVec& a) {
  Rat total(0);
  for (const auto& alpha : rs.roots) {
    Rat v = -dot(alpha, a);
    if (v > Rat(0)) total += v;
  }
  if (!is_integer(total))
    throw std::invalid_argument("gamma: coweight pairs non-integrally with the roots");
  return total.numerator();
}

} // namespace

long long gamma_orbit(const RootSystem& rs, const RatVec& orbit_rep) {
  const long long on_rep = gamma_sum_over_roots(rs, orbit_rep);
  const RatVec a = rootsys::antidominant_representative(rs, orbit_rep);
  const long long on_antidom = gamma_sum_over_roots(rs, a);
  Rat via_delta = Rat(-2) * dot(rs.weyl_vector, a);
  if (!is_integer(via_delta) || via_delta.numerator() != on_antidom || on_rep != on_antidom)
    throw std::logic_error("gamma: root-sum and -2 a(delta) routes disagree");
  return on_rep;
}

LeafDimension leaf_dimension_detail(const SingularityData& sd) {
  LeafDimension out;
  for (const auto& d : sd.points) {
    long long g = gamma_orbit(sd.group.rs, d.coweight);
    out.gamma_per_point.push_back(g);
    out.gamma_sum += g;
  }
  out.gamma_sum_even = out.gamma_sum % 2 == 0;
  out.dimension = 2 * sd.group.center_dim + out.gamma_sum;
  return out;
}

long long leaf_dimension(const SingularityData& sd) { return leaf_dimension_detail(sd).dimension; }

long long hecke_dimension(const SingularityData& sd) {
  return sd.group.center_dim + leaf_dimension_detail(sd).gamma_sum;
}

long long gl_leaf_dimension(int n, const std::vector<std::vector<long long>>& beta) {
  if (n < 1) throw std::invalid_argument("gl_leaf_dimension: n must be positive");
  long long dim = 2;
  for (const auto& row : beta) {
    if (static_cast<int>(row.size()) != n - 1)
      throw std::invalid_argument("gl_leaf_dimension: coefficient list must have length n-1");
    for (int i = 1; i <= n - 1; ++i) {
      if (row[i - 1] < 0) throw std::invalid_argument("gl_leaf_dimension: beta_i(p) must be >= 0");
      dim += row[i - 1] * static_cast<long long>(i) * (n - i);
    }
  }
  return dim;
}

bool Pi1Image::is_identity() const {
  return std::all_of(coords.begin(), coords.end(), [](long long c) { return c == 0; });
}

Pi1Image pi1_image(const SingularityData& sd) {
  lattice::LatticeQuotient q(sd.group.cochar_basis, sd.group.rs.simple_coroots);
  RatVec total(sd.group.rs.ambient_dim, Rat(0));
  for (const auto& d : sd.points) total = vadd(total, d.coweight);
  Pi1Image out;
  out.coords = q.reduce(total);
  out.invariants = q.invariants();
  return out;
}

Rat RatDivisor::degree() const {
  Rat d(0);
  for (const auto& [p, m] : entries) d += m;
  return d;
}

std::vector<RatVec> defining_representation_weights(const RootSystem& rs) {
  std::vector<RatVec> w;
  const int m = rs.ambient_dim;
  auto basis_vec = [m](int i, Rat s) {
    RatVec v(m, Rat(0));
    v[i] = s;
    return v;
  };
  switch (rs.type.family) {
    case Family::A:
      for (int i = 0; i < m; ++i) w.push_back(basis_vec(i, Rat(1)));
      break;
    case Family::B:
      for (int i = 0; i < m; ++i) w.push_back(basis_vec(i, Rat(1)));
      for (int i = 0; i < m; ++i) w.push_back(basis_vec(i, Rat(-1)));
      w.push_back(RatVec(m, Rat(0)));
      break;
    case Family::C:
    case Family::D:
      for (int i = 0; i < m; ++i) w.push_back(basis_vec(i, Rat(1)));
      for (int i = 0; i < m; ++i) w.push_back(basis_vec(i, Rat(-1)));
      break;
    default:
      throw std::invalid_argument("defining_representation_weights: classical families only");
  }
  return w;
}

namespace {

void require_w_invariant(const RootSystem& rs, const std::vector<RatVec>& weights) {
  std::set<RatVec> set(weights.begin(), weights.end());
  for (const auto& a : rs.simple_roots)
    for (const auto& w : set)
      if (!set.count(rs.reflect(w, a)))
        throw std::invalid_argument("rep_weights set is not W-invariant");
}

} // namespace

Rat d_minus(const std::vector<RatVec>& rep_weights, const RatVec& orbit_rep) {
  if (rep_weights.empty()) throw std::invalid_argument("d_minus: empty weight set");
  Rat best = dot(rep_weights[0], orbit_rep);
  for (const auto& w : rep_weights) best = std::min(best, dot(w, orbit_rep));
  return best;
}

Rat d_plus(const std::vector<RatVec>& rep_weights, const RatVec& orbit_rep) {
  if (rep_weights.empty()) throw std::invalid_argument("d_plus: empty weight set");
  Rat best = dot(rep_weights[0], orbit_rep);
  for (const auto& w : rep_weights) best = std::max(best, dot(w, orbit_rep));
  return best;
}

RatDivisor polar_divisor(const SingularityData& sd, const std::vector<RatVec>& rep_weights) {
  require_w_invariant(sd.group.rs, rep_weights);
  RatDivisor div;
  for (const auto& d : sd.points)
    div.entries.emplace_back(d.point, -d_minus(rep_weights, d.coweight));
  return div;
}

std::vector<RatDivisor> singularity_divisors(const SingularityData& sd) {
  const RootSystem& rs = sd.group.rs;
  std::vector<RatDivisor> divs(rs.rank());
  Rat total_degree(0);
  long long gamma_total = 0;
  for (const auto& d : sd.points) {
    RatVec a = rootsys::antidominant_representative(rs, d.coweight);
    gamma_total += gamma_orbit(rs, d.coweight);
    for (int i = 0; i < rs.rank(); ++i) {
      Rat coeff = -dot(rs.fundamental_weights[i], a);
      if (coeff < Rat(0)) throw std::logic_error("singularity divisor not effective");
      divs[i].entries.emplace_back(d.point, coeff);
      total_degree += coeff;
    }
  }
  if (total_degree * Rat(2) != Rat(gamma_total))
    throw std::logic_error("sum deg S_i != (1/2) sum gamma");
  return divs;
}

bool det_divisor_check(const SingularityData& sd, const std::vector<RatVec>& rep_weights,
                       double tol) {
  require_w_invariant(sd.group.rs, rep_weights);
  ellfun::EllipticContext ctx(sd.tau);
  std::vector<std::pair<cplx, long long>> zeros, poles;
  for (const auto& d : sd.points) {
    Rat z(0), p(0);
    for (const auto& w : rep_weights) {
      Rat ord = dot(w, d.coweight);
      if (ord < Rat(0)) z += -ord;
      if (ord > Rat(0)) p += ord;
    }
    if (!is_integer(z) || !is_integer(p))
      throw std::invalid_argument("det_divisor_check: non-integral weight pairings");
    if (z != Rat(0)) zeros.emplace_back(d.point, z.numerator());
    if (p != Rat(0)) poles.emplace_back(d.point, p.numerator());
  }
  return ellfun::linearly_equivalent(ctx, ellfun::make_divisor(ctx, zeros),
                                     ellfun::make_divisor(ctx, poles), tol);
}

// ---- worked examples ----

SingularityData make_calogero_data(int n, cplx tau, cplx p0, cplx p1) {
  if (n < 2) throw std::invalid_argument("calogero data needs n >= 2");
  auto rs = rootsys::build_root_system({Family::A, n - 1});
  auto g = make_group(std::move(rs), LatticeModel::GLFull);
  ellfun::EllipticContext ctx(tau);
  // Zero/polar data of rank profile (n | 1, n-1): full poles at p0, zeros of
  // ranks n-1 and 1 at p1 and the Abel-forced p2 = n p0 - (n-1) p1.
  cplx p2 = ellfun::reduce_to_fundamental(ctx, static_cast<double>(n) * p0 -
                                                   static_cast<double>(n - 1) * p1);
  RatVec a0(n, Rat(1));
  RatVec a1(n, Rat(-1));
  a1[0] = Rat(0); // dominant representative of the rank-(n-1) zero profile
  RatVec a2(n, Rat(0));
  a2[n - 1] = Rat(-1);
  return make_singularity_data(std::move(g), tau, {{p0, a0}, {p1, a1}, {p2, a2}});
}

SingularityData make_grassmann_data(int n, int k, cplx tau, cplx p_plus, cplx p_minus) {
  if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("grassmann data needs 0 < k < n");
  auto rs = rootsys::build_root_system({Family::A, n - 1});
  auto g = make_group(std::move(rs), LatticeModel::Adjoint);
  RatVec a_plus = g.rs.fundamental_coweights[k - 1];
  RatVec a_minus = vneg(a_plus);
  return make_singularity_data(std::move(g), tau, {{p_plus, a_plus}, {p_minus, a_minus}});
}

SingularityData make_quadric_data(int n, cplx tau, cplx p1, cplx p2) {
  if (n < 2) throw std::invalid_argument("quadric data needs n >= 2");
  auto rs = rootsys::build_root_system({Family::D, n});
  auto g = make_group(std::move(rs), LatticeModel::Standard);
  RatVec e1(n, Rat(0));
  e1[0] = Rat(1); // alpha_1^* for D_n
  return make_singularity_data(std::move(g), tau, {{p1, e1}, {p2, e1}});
}

SingularityData make_isotropic_data(int n, cplx tau, cplx p1, cplx p2) {
  if (n < 2) throw std::invalid_argument("isotropic data needs n >= 2");
  auto rs = rootsys::build_root_system({Family::D, n});
  auto g = make_group(std::move(rs), LatticeModel::Adjoint);
  RatVec a = g.rs.fundamental_coweights[n - 1]; // alpha_n^* = (1/2) sum e_i
  return make_singularity_data(std::move(g), tau, {{p1, a}, {p2, a}});
}

} // namespace skl::leafdim
