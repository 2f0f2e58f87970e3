#pragma once

#include <set>
#include <string>
#include <vector>

#include "skl/ratlin.hpp"

namespace skl::rootsys {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_char(Family f);

struct CartanType {
  Family family;
  int rank;
};

// Throws std::invalid_argument when the rank is out of bounds for the family
// (A: >=1, B: >=2, C: >=2, D: >=3, E: 6..8, F: 4, G: 2).
void validate(const CartanType& t);

enum class Basis { Ambient, FundamentalWeight, FundamentalCoweight };

struct LatticeVector {
  RatVec coords;
  Basis basis = Basis::Ambient;
};

// Irreducible root system in the standard Bourbaki epsilon-coordinate
// realization. A_{n-1} lives in the trace-zero hyperplane of n coordinates,
// B/C/D use n coordinates, E types are realized inside R^8, F4 in R^4 and
// G2 in the trace-zero hyperplane of R^3. The inner product is the ambient
// dot product, so long roots of simply-laced types have squared length 2.
// Weights and coweights both live in ambient coordinates; the weight/coweight
// pairing is the dot product. All fields are exact rationals.
struct RootSystem {
  CartanType type;
  int ambient_dim = 0;

  std::vector<RatVec> simple_roots;   // Bourbaki numbering
  std::vector<RatVec> simple_coroots; // alpha^vee = 2 alpha / (alpha, alpha)
  std::vector<RatVec> roots;          // all of Phi
  std::vector<RatVec> positive_roots;
  // Expansion of roots[k] in the simple-root basis; used for the dual-basis
  // pairing alpha_i^*(beta).
  std::vector<RatVec> root_simple_coords;

  std::vector<RatVec> fundamental_weights;   // (lambda_i, alpha_j^vee) = delta_ij
  std::vector<RatVec> fundamental_coweights; // (lambda_i^vee, alpha_j) = delta_ij
  RatVec weyl_vector;                        // delta = sum lambda_i = half sum of Phi_+

  std::vector<std::vector<long long>> cartan_matrix; // C_ij = <alpha_i, alpha_j^vee>

  int rank() const { return type.rank; }
  std::string name() const;

  Rat form(const RatVec& a, const RatVec& b) const { return dot(a, b); }
  // Orthogonal reflection through the hyperplane of `root`.
  RatVec reflect(const RatVec& v, const RatVec& root) const;

  bool is_dominant(const RatVec& ambient) const;

  RatVec to_ambient(const LatticeVector& v) const;
  // Exact change of basis; throws std::invalid_argument when v is not in the
  // span of the roots (e.g. a GL-style vector with nonzero trace), so that
  // trace-zero and full coordinate vectors are never silently identified.
  LatticeVector from_ambient(const RatVec& ambient, Basis target) const;
};

RootSystem build_root_system(const CartanType& t);

// W-orbit by closure under the simple reflections.
std::set<RatVec> weyl_orbit(const RootSystem& rs, const RatVec& ambient_v);
std::set<LatticeVector> orbit_as_lattice_vectors(const RootSystem& rs, const LatticeVector& v);

RatVec dominant_representative(const RootSystem& rs, const RatVec& ambient_v);
// The unique orbit element whose negative is dominant.
RatVec antidominant_representative(const RootSystem& rs, const RatVec& ambient_v);

// Weight/coweight pairing <w, a>. The first argument must carry a weight-side
// basis tag, the second a coweight-side one (Ambient is accepted on either
// side); anything else throws std::invalid_argument.
Rat pair(const RootSystem& rs, const LatticeVector& w, const LatticeVector& a);

bool operator<(const LatticeVector& a, const LatticeVector& b);

} // namespace skl::rootsys
