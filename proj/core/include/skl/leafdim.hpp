#pragma once

#include <complex>
#include <string>
#include <vector>

#include "skl/ellfun.hpp"
#include "skl/lattice.hpp"
#include "skl/rootsys.hpp"

namespace skl::leafdim {

using cplx = std::complex<double>;

// Which cocharacter lattice Ch(T)^* the group declares:
//   SimplyConnected - the coroot lattice,
//   Adjoint         - the full coweight lattice,
//   Standard        - the natural matrix-group lattice (Z^n in epsilon
//                     coordinates for SO(2n+1), SO(2n); coincides with the
//                     coroot lattice for SL(n), Sp(2n) and exceptional types),
//   GLFull          - type A only: Z^n plus the central direction, dim z = 1.
enum class LatticeModel { SimplyConnected, Adjoint, Standard, GLFull };

LatticeModel lattice_model_from_string(const std::string& s);
std::string lattice_model_name(LatticeModel m);

struct GroupSpec {
  rootsys::RootSystem rs;
  int center_dim = 0;
  LatticeModel model = LatticeModel::SimplyConnected;
  std::vector<RatVec> cochar_basis; // columns spanning Ch(T)^*, ambient coordinates

  bool contains_coweight(const RatVec& ambient) const;
};

GroupSpec make_group(rootsys::RootSystem rs, LatticeModel model, int center_dim = -1);

struct SingularityDatum {
  cplx point;     // representative on C/(Z + tau Z)
  RatVec coweight; // dominant representative of the W-orbit, ambient coordinates
};

struct SingularityData {
  GroupSpec group;
  cplx tau;
  std::vector<SingularityDatum> points;
};

// Normalizes coweights to their dominant representatives and points to the
// fundamental domain; throws std::invalid_argument when points collide mod
// the lattice or a coweight is outside the declared cocharacter lattice.
SingularityData make_singularity_data(GroupSpec group, cplx tau,
                                      const std::vector<SingularityDatum>& raw);

// gamma(O) = sum_{alpha in Phi} max(0, -alpha(a)), evaluated on the given
// representative, on the representative whose negative is dominant, and as
// -2 a(delta); the three values are asserted equal and returned.
long long gamma_orbit(const rootsys::RootSystem& rs, const RatVec& orbit_rep);

struct LeafDimension {
  long long dimension = 0;
  long long gamma_sum = 0;
  std::vector<long long> gamma_per_point;
  bool gamma_sum_even = true; // reported, never enforced
};

LeafDimension leaf_dimension_detail(const SingularityData& sd);
long long leaf_dimension(const SingularityData& sd); // 2 dim z + sum gamma
long long hecke_dimension(const SingularityData& sd); // dim z + sum gamma

// dim M(GL(n), c, O) = 2 + sum_p sum_i beta_i(p) i (n - i); beta rows are the
// coefficient lists (length n - 1, nonnegative) of the points.
long long gl_leaf_dimension(int n, const std::vector<std::vector<long long>>& beta);

struct Pi1Image {
  std::vector<long long> coords;     // normal-form coordinates of the class
  std::vector<long long> invariants; // d > 0: Z/d factor, d == 0: Z factor

  bool is_identity() const;
};

// Image of sum_p a_p in Ch(T)^* / (coroot lattice); identity is the
// topological non-emptiness condition for c2 - c1 = 0.
Pi1Image pi1_image(const SingularityData& sd);

struct RatDivisor {
  std::vector<std::pair<cplx, Rat>> entries;

  Rat degree() const;
};

// Weights of the defining representation of the classical group attached to
// the family (useful rep_weights for the divisor operations below).
std::vector<RatVec> defining_representation_weights(const rootsys::RootSystem& rs);

// d_-(O, rho) = min { w(a) : w in rep_weights, a in O }; the polar divisor
// takes coefficient -d_- at each point. rep_weights must be W-invariant.
Rat d_minus(const std::vector<RatVec>& rep_weights, const RatVec& orbit_rep);
Rat d_plus(const std::vector<RatVec>& rep_weights, const RatVec& orbit_rep);
RatDivisor polar_divisor(const SingularityData& sd, const std::vector<RatVec>& rep_weights);

// S_i = sum_p -lambda_i(a_p) p with a_p the orbit element whose negative is
// dominant; each S_i is effective and sum_i deg S_i = (1/2) sum_p gamma(O_p)
// (asserted).
std::vector<RatDivisor> singularity_divisors(const SingularityData& sd);

// Linear equivalence of the zero and polar divisors of det(rho(phi)):
// sum_p [sum_w max(0, -w(a_p))] p  ~  sum_p [sum_w max(0, w(a_p))] p,
// tested on the curve via degree plus Abel sum.
bool det_divisor_check(const SingularityData& sd, const std::vector<RatVec>& rep_weights,
                       double tol = 1e-9);

// Ready-made singularity data for the worked examples.
SingularityData make_calogero_data(int n, cplx tau, cplx p0, cplx p1);    // GL(n); p2 = n p0 - (n-1) p1
SingularityData make_grassmann_data(int n, int k, cplx tau, cplx p_plus, cplx p_minus); // PGL(n)
SingularityData make_quadric_data(int n, cplx tau, cplx p1, cplx p2);     // SO(2n)
SingularityData make_isotropic_data(int n, cplx tau, cplx p1, cplx p2);   // PO(2n)

} // namespace skl::leafdim
