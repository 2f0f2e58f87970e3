#include <doctest.h>

#include <random>

#include "skl/leafdim.hpp"

using namespace skl;
using namespace skl::leafdim;
using rootsys::Family;

namespace {

const cplx kTau(0.21, 1.13);
const cplx kP1(0.17, 0.23);
const cplx kP2(0.61, 0.48);

// Random dominant element of the coroot lattice.
RatVec random_dominant_coroot_vector(const rootsys::RootSystem& rs, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  RatVec v(rs.ambient_dim, Rat(0));
  for (const auto& c : rs.simple_coroots) v = vadd(v, vscale(Rat(coeff(rng)), c));
  return rootsys::dominant_representative(rs, v);
}

std::vector<rootsys::CartanType> classical_types_up_to(int max_rank) {
  std::vector<rootsys::CartanType> ts;
  for (int n = 1; n <= max_rank; ++n) ts.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) ts.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) ts.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) ts.push_back({Family::D, n});
  return ts;
}

} // namespace

TEST_CASE("gamma: zero coweight gives 0") {
  auto rs = rootsys::build_root_system({Family::B, 3});
  CHECK(gamma_orbit(rs, RatVec(3, Rat(0))) == 0);
}

TEST_CASE("gamma: GL orbit dual to lambda_i gives i(n-i)") {
  for (int n = 2; n <= 6; ++n) {
    auto rs = rootsys::build_root_system({Family::A, n - 1});
    for (int i = 1; i <= n - 1; ++i) {
      // Orbit of the epsilon-coordinate profile with i trailing -1 entries.
      RatVec a(n, Rat(0));
      for (int k = n - i; k < n; ++k) a[k] = Rat(-1);
      CHECK(gamma_orbit(rs, a) == static_cast<long long>(i) * (n - i));
      CHECK(gamma_orbit(rs, rs.fundamental_coweights[i - 1]) ==
            static_cast<long long>(i) * (n - i));
    }
  }
}

TEST_CASE("gamma: D_n spinor orbit gives n(n-1)/2") {
  for (int n = 3; n <= 6; ++n) {
    auto rs = rootsys::build_root_system({Family::D, n});
    CHECK(gamma_orbit(rs, rs.fundamental_coweights[n - 1]) ==
          static_cast<long long>(n) * (n - 1) / 2);
  }
}

TEST_CASE("gamma identity: root sum equals -2 a(delta) on random dominant coweights") {
  std::mt19937_64 rng(42);
  for (const auto& t : classical_types_up_to(6)) {
    auto rs = rootsys::build_root_system(t);
    for (int trial = 0; trial < 25; ++trial) {
      RatVec d = random_dominant_coroot_vector(rs, rng);
      RatVec a = vneg(d); // -a dominant
      // Independent evaluation of both routes.
      Rat root_sum(0);
      for (const auto& alpha : rs.roots) {
        Rat v = -dot(alpha, a);
        if (v > Rat(0)) root_sum += v;
      }
      CHECK(root_sum == Rat(-2) * dot(rs.weyl_vector, a));
      CHECK(gamma_orbit(rs, a) == root_sum.numerator());
    }
  }
}

TEST_CASE("gamma is invariant under the choice of orbit representative") {
  auto rs = rootsys::build_root_system({Family::D, 4});
  RatVec v = vadd(rs.fundamental_coweights[0], rs.fundamental_coweights[3]);
  long long expected = gamma_orbit(rs, v);
  for (const auto& w : rootsys::weyl_orbit(rs, v)) CHECK(gamma_orbit(rs, w) == expected);
}

TEST_CASE("leaf dimension: empty data for GL(n) gives 2") {
  auto g = make_group(rootsys::build_root_system({Family::A, 2}), LatticeModel::GLFull);
  auto sd = make_singularity_data(std::move(g), kTau, {});
  CHECK(leaf_dimension(sd) == 2);
}

TEST_CASE("leaf dimension: Calogero data gives 2n") {
  for (int n = 2; n <= 6; ++n) {
    auto sd = make_calogero_data(n, kTau, kP1, kP2);
    CHECK(leaf_dimension(sd) == 2 * n);
    CHECK(pi1_image(sd).is_identity());
    CHECK(leaf_dimension_detail(sd).gamma_sum_even);
  }
}

TEST_CASE("leaf dimension: Grassmannian data gives 2k(n-k)") {
  for (int n = 2; n <= 6; ++n)
    for (int k = 1; k < n; ++k) {
      auto sd = make_grassmann_data(n, k, kTau, kP1, kP2);
      CHECK(leaf_dimension(sd) == 2LL * k * (n - k));
      CHECK(pi1_image(sd).is_identity());
    }
}

TEST_CASE("leaf dimension: quadric data gives 4n-4, isotropic gives n^2-n") {
  for (int n = 2; n <= 6; ++n) {
    CHECK(leaf_dimension(make_quadric_data(n, kTau, kP1, kP2)) == 4 * n - 4);
    CHECK(leaf_dimension(make_isotropic_data(n, kTau, kP1, kP2)) ==
          static_cast<long long>(n) * n - n);
  }
}

TEST_CASE("hecke dimension: empty data for a semisimple group gives 0") {
  auto g = make_group(rootsys::build_root_system({Family::C, 3}), LatticeModel::SimplyConnected);
  auto sd = make_singularity_data(std::move(g), kTau, {});
  CHECK(hecke_dimension(sd) == 0);
}

TEST_CASE("hecke dimension: dim z + sum gamma on the worked examples") {
  // SO(2n) quadric data: gamma = 2n-2 per point by brute-force root count,
  // center 0, so the Hecke dimension is 4n-4 (= leaf dimension here).
  for (int n = 3; n <= 5; ++n) {
    auto sd = make_quadric_data(n, kTau, kP1, kP2);
    auto rs = rootsys::build_root_system({Family::D, n});
    RatVec e1(n, Rat(0));
    e1[0] = Rat(1);
    long long count = 0; // oracle: enumerate roots pairing to -1 with e1
    for (const auto& alpha : rs.roots)
      if (dot(alpha, e1) == Rat(-1)) ++count;
    CHECK(count == 2 * n - 2);
    CHECK(hecke_dimension(sd) == 2 * count);
  }
  // GL(n) Calogero data: 1 + (2n - 2).
  for (int n = 2; n <= 5; ++n)
    CHECK(hecke_dimension(make_calogero_data(n, kTau, kP1, kP2)) == 2 * n - 1);
}

TEST_CASE("gl_leaf_dimension closed form") {
  CHECK(gl_leaf_dimension(3, {}) == 2);
  CHECK(gl_leaf_dimension(3, {{1, 0}, {0, 1}}) == 6);
  // Simple zero/pole profile: 2 + sum r_p (n - r_p).
  for (int n = 2; n <= 6; ++n) {
    std::vector<std::vector<long long>> beta;
    for (long long r : {1LL, static_cast<long long>(n - 1)}) {
      std::vector<long long> row(n - 1, 0);
      row[r - 1] = 1; // beta_r = 1 encodes rank r
      beta.push_back(row);
    }
    CHECK(gl_leaf_dimension(n, beta) == 2 + 2 * (n - 1));
  }
  CHECK_THROWS_AS(gl_leaf_dimension(3, {{-1, 0}}), std::invalid_argument);
}

TEST_CASE("gl_leaf_dimension agrees with the general path on translated inputs") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (int n = 3; n <= 5; ++n) {
    auto rs = rootsys::build_root_system({Family::A, n - 1});
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<long long>> beta(2, std::vector<long long>(n - 1, 0));
      std::vector<SingularityDatum> data;
      const cplx pts[2] = {kP1, kP2};
      bool nonzero = false;
      for (int p = 0; p < 2; ++p) {
        RatVec b(n, Rat(0)); // coweight -sum_i beta_i lambda_i^vee
        for (int i = 1; i <= n - 1; ++i) {
          beta[p][i - 1] = coeff(rng);
          if (beta[p][i - 1] > 0) nonzero = true;
          b = vadd(b, vscale(Rat(beta[p][i - 1]), rs.fundamental_coweights[i - 1]));
        }
        data.push_back({pts[p], vneg(b)});
      }
      if (!nonzero) continue;
      auto g = make_group(rs, LatticeModel::Adjoint, 1); // GL-normalized center
      auto sd = make_singularity_data(std::move(g), kTau, data);
      CHECK(leaf_dimension(sd) == gl_leaf_dimension(n, beta));
    }
  }
}

TEST_CASE("leaf dimension is invariant when data uses any orbit representative") {
  auto rs = rootsys::build_root_system({Family::B, 3});
  RatVec v = vadd(rs.simple_coroots[0], vscale(Rat(2), rs.simple_coroots[2]));
  auto orbit = rootsys::weyl_orbit(rs, v);
  long long expected = -1;
  for (const auto& w : orbit) {
    auto g = make_group(rs, LatticeModel::SimplyConnected);
    auto sd = make_singularity_data(std::move(g), kTau, {{kP1, w}});
    long long dim = leaf_dimension(sd);
    if (expected < 0) expected = dim;
    CHECK(dim == expected);
  }
}

TEST_CASE("pi1_image: symmetric data maps to the identity") {
  auto rs = rootsys::build_root_system({Family::D, 4});
  auto g = make_group(rs, LatticeModel::Adjoint);
  RatVec a = rs.fundamental_coweights[3];
  auto sd = make_singularity_data(std::move(g), kTau, {{kP1, a}, {kP2, vneg(a)}});
  CHECK(pi1_image(sd).is_identity());
}

TEST_CASE("pi1_image: PGL(2) with a single alpha_1^* point is the nontrivial Z/2 class") {
  auto rs = rootsys::build_root_system({Family::A, 1});
  auto g = make_group(rs, LatticeModel::Adjoint);
  auto sd = make_singularity_data(std::move(g), kTau, {{kP1, rs.fundamental_coweights[0]}});
  auto img = pi1_image(sd);
  CHECK_FALSE(img.is_identity());
  long long torsion = 1;
  for (long long d : img.invariants)
    if (d > 1) torsion *= d;
  CHECK(torsion == 2);
}

TEST_CASE("pi1_image: PGL(n) coweight classes generate Z/n") {
  for (int n = 2; n <= 5; ++n) {
    auto rs = rootsys::build_root_system({Family::A, n - 1});
    auto g = make_group(rs, LatticeModel::Adjoint);
    auto sd = make_singularity_data(std::move(g), kTau, {{kP1, rs.fundamental_coweights[0]}});
    long long torsion = 1;
    for (long long d : pi1_image(sd).invariants)
      if (d > 1) torsion *= d;
    CHECK(torsion == n);
  }
}

TEST_CASE("pi1_image: SL(n) quotient is trivial") {
  for (int n = 2; n <= 4; ++n) {
    auto rs = rootsys::build_root_system({Family::A, n - 1});
    auto g = make_group(rs, LatticeModel::SimplyConnected);
    RatVec v = vadd(rs.simple_coroots[0], rs.simple_coroots[n - 2]);
    auto sd = make_singularity_data(std::move(g), kTau, {{kP1, v}});
    CHECK(pi1_image(sd).is_identity());
  }
}

TEST_CASE("pi1_image is additive under concatenation of data") {
  auto rs = rootsys::build_root_system({Family::D, 4});
  auto g = make_group(rs, LatticeModel::Standard);
  RatVec e1(4, Rat(0)), e2(4, Rat(0));
  e1[0] = Rat(1);
  e2[1] = Rat(1);
  auto one = make_singularity_data(g, kTau, {{kP1, e1}});
  auto two = make_singularity_data(g, kTau, {{kP2, e2}});
  auto both = make_singularity_data(g, kTau, {{kP1, e1}, {kP2, e2}});
  auto c1 = pi1_image(one).coords;
  auto c2 = pi1_image(two).coords;
  auto img = pi1_image(both);
  for (std::size_t i = 0; i < img.coords.size(); ++i) {
    long long sum = c1[i] + c2[i];
    if (img.invariants[i] > 0) sum %= img.invariants[i];
    CHECK(img.coords[i] == sum);
  }
}

TEST_CASE("coweights outside the declared lattice are rejected") {
  auto rs = rootsys::build_root_system({Family::D, 4});
  auto g = make_group(rs, LatticeModel::Standard); // SO(8): Z^4
  RatVec spinor = rs.fundamental_coweights[3];     // half-integral
  CHECK_THROWS_AS(make_singularity_data(std::move(g), kTau, {{kP1, spinor}}),
                  std::invalid_argument);
  auto g_adj = make_group(rs, LatticeModel::Adjoint);
  CHECK_NOTHROW(make_singularity_data(std::move(g_adj), kTau, {{kP1, spinor}}));
}

TEST_CASE("colliding points are rejected") {
  auto rs = rootsys::build_root_system({Family::A, 1});
  auto g = make_group(rs, LatticeModel::SimplyConnected);
  RatVec a = rs.simple_coroots[0];
  cplx shifted = kP1 + 1.0 + kTau; // same point mod the lattice
  CHECK_THROWS_AS(make_singularity_data(std::move(g), kTau, {{kP1, a}, {shifted, a}}),
                  std::invalid_argument);
}

TEST_CASE("d_plus / d_minus: orbit-representative invariance and symmetry") {
  std::mt19937_64 rng(77);
  for (const auto& t : {rootsys::CartanType{Family::A, 3}, rootsys::CartanType{Family::B, 3},
                        rootsys::CartanType{Family::C, 3}, rootsys::CartanType{Family::D, 4}}) {
    auto rs = rootsys::build_root_system(t);
    auto weights = defining_representation_weights(rs);
    for (int trial = 0; trial < 8; ++trial) {
      RatVec a = random_dominant_coroot_vector(rs, rng);
      Rat lo = d_minus(weights, a), hi = d_plus(weights, a);
      CHECK(lo <= hi);
      for (const auto& rep : rootsys::weyl_orbit(rs, a)) {
        CHECK(d_minus(weights, rep) == lo);
        CHECK(d_plus(weights, rep) == hi);
      }
      // With a negation-closed weight set (B/C/D defining reps), the minimum
      // is minus the maximum.
      if (t.family != Family::A) CHECK(lo == -hi);
    }
  }
}

TEST_CASE("polar divisor: GL examples") {
  auto rs = rootsys::build_root_system({Family::A, 2});
  auto weights = defining_representation_weights(rs);
  auto g = make_group(rs, LatticeModel::GLFull);

  SUBCASE("trivial orbit gives the zero divisor") {
    auto sd = make_singularity_data(g, kTau, {{kP1, RatVec(3, Rat(0))}});
    CHECK(polar_divisor(sd, weights).entries[0].second == Rat(0));
  }
  SUBCASE("diag(t,1,1) profile gives coefficient 0") {
    RatVec a(3, Rat(0));
    a[0] = Rat(1);
    auto sd = make_singularity_data(g, kTau, {{kP1, a}});
    CHECK(polar_divisor(sd, weights).entries[0].second == Rat(0));
  }
  SUBCASE("diag(1,1,t^-1) profile gives coefficient 1") {
    RatVec a(3, Rat(0));
    a[2] = Rat(-1);
    auto sd = make_singularity_data(g, kTau, {{kP1, a}});
    CHECK(polar_divisor(sd, weights).entries[0].second == Rat(1));
  }
  SUBCASE("non-W-invariant weight sets are rejected") {
    auto sd = make_singularity_data(g, kTau, {{kP1, RatVec(3, Rat(0))}});
    std::vector<RatVec> bad = {weights[0]};
    CHECK_THROWS_AS(polar_divisor(sd, bad), std::invalid_argument);
  }
}

TEST_CASE("singularity divisors: empty data, A2 example, Calogero degree") {
  SUBCASE("empty data gives zero divisors") {
    auto g = make_group(rootsys::build_root_system({Family::A, 2}), LatticeModel::SimplyConnected);
    auto sd = make_singularity_data(std::move(g), kTau, {});
    for (const auto& s : singularity_divisors(sd)) CHECK(s.degree() == Rat(0));
  }
  SUBCASE("A2, orbit of -lambda_1^vee: S_1 degree (lambda_1, lambda_1^vee) = 2/3") {
    auto rs = rootsys::build_root_system({Family::A, 2});
    auto g = make_group(rs, LatticeModel::Adjoint);
    auto sd = make_singularity_data(std::move(g), kTau, {{kP1, vneg(rs.fundamental_coweights[0])}});
    auto divs = singularity_divisors(sd);
    CHECK(divs[0].degree() == dot(rs.fundamental_weights[0], rs.fundamental_coweights[0]));
    CHECK(divs[0].degree() == Rat(2, 3));
    CHECK(divs[1].degree() == Rat(1, 3));
  }
  SUBCASE("Calogero n=3: total degree (2n-2)/2 = 2") {
    auto sd = make_calogero_data(3, kTau, kP1, kP2);
    Rat total(0);
    for (const auto& s : singularity_divisors(sd)) total += s.degree();
    CHECK(total == Rat(2));
  }
}

TEST_CASE("divisor identity sum deg S_i = (1/2) sum gamma on random data") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> npoints(1, 3);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (int trial = 0; trial < 60; ++trial) {
    const auto& types = classical_types_up_to(5);
    auto rs = rootsys::build_root_system(types[trial % types.size()]);
    auto g = make_group(rs, LatticeModel::SimplyConnected);
    ellfun::EllipticContext ctx(kTau);
    std::vector<SingularityDatum> data;
    int m = npoints(rng);
    for (int p = 0; p < m; ++p)
      data.push_back({ellfun::from_lattice_coords(ctx, unif(rng), 0.1 + 0.2 * p),
                      random_dominant_coroot_vector(rs, rng)});
    auto sd = make_singularity_data(std::move(g), kTau, data);
    Rat total(0);
    for (const auto& s : singularity_divisors(sd)) total += s.degree();
    CHECK(total * Rat(2) == Rat(leaf_dimension_detail(sd).gamma_sum));
  }
}

TEST_CASE("det divisor check: symmetric orbits, Calogero configuration, perturbation") {
  SUBCASE("orbit closed under negation at two points is trivially equivalent") {
    auto sd = make_quadric_data(4, kTau, kP1, kP2);
    auto weights = defining_representation_weights(sd.group.rs);
    CHECK(det_divisor_check(sd, weights));
  }
  SUBCASE("Calogero n p0 ~ (n-1) p1 + p2 holds by construction and fails perturbed") {
    for (int n : {2, 3, 5}) {
      auto sd = make_calogero_data(n, kTau, kP1, kP2);
      auto weights = defining_representation_weights(sd.group.rs);
      CHECK(det_divisor_check(sd, weights));
      auto bad = sd;
      bad.points[2].point += 0.05; // off the Abel-forced point
      CHECK_FALSE(det_divisor_check(bad, weights));
    }
  }
}
