#include "skl/checks.hpp"

#include <algorithm>
#include <random>

#include "skl/ellfun.hpp"
#include "skl/rmatrix.hpp"

namespace skl::checks {

namespace {

using ellfun::EllipticContext;
const cplx kTwoPiI(0.0, 2.0 * std::acos(-1.0));

double rel(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / (1.0 + std::abs(lhs) + std::abs(rhs)); }

// Random point inside the fundamental domain, away from the lattice.
cplx sample_point(const EllipticContext& ctx, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.08, 0.92);
  for (;;) {
    cplx z = ellfun::from_lattice_coords(ctx, unif(rng), unif(rng));
    if (ellfun::lattice_distance(ctx, z) > 0.05) return z;
  }
}

} // namespace

double EllfunReport::max_periodicity() const {
  return std::max({theta_shift_1, theta_shift_tau, theta_odd, sigma_shift_1, sigma_shift_tau,
                   sigma_symmetry, rho_shift_1, rho_shift_tau, rho_odd});
}

bool EllfunReport::pass(double tol_periodicity, double tol_residue) const {
  return max_periodicity() <= tol_periodicity &&
         std::max(sigma_residue_err, rho_residue_err) <= tol_residue;
}

EllfunReport run_ellfun_checks(cplx tau, int points, std::uint64_t seed) {
  EllipticContext ctx(tau);
  std::mt19937_64 rng(seed);
  EllfunReport r;
  for (int k = 0; k < points; ++k) {
    const cplx z = sample_point(ctx, rng);
    const cplx w = sample_point(ctx, rng);

    const cplx t = ellfun::theta1(ctx, z);
    r.theta_shift_1 = std::max(r.theta_shift_1, rel(ellfun::theta1(ctx, z + 1.0), -t));
    r.theta_shift_tau = std::max(
        r.theta_shift_tau,
        rel(ellfun::theta1(ctx, z + tau),
            t * std::exp(-kTwoPiI * z) * std::exp(-kTwoPiI * 0.5 * (tau + 1.0))));
    r.theta_odd = std::max(r.theta_odd, rel(ellfun::theta1(ctx, -z), -t));

    const cplx s = ellfun::sigma(ctx, w, z);
    r.sigma_shift_1 = std::max(r.sigma_shift_1, rel(ellfun::sigma(ctx, w, z + 1.0), s));
    r.sigma_shift_tau =
        std::max(r.sigma_shift_tau, rel(ellfun::sigma(ctx, w, z + tau), s * std::exp(kTwoPiI * w)));
    r.sigma_symmetry =
        std::max(r.sigma_symmetry, rel(ellfun::sigma(ctx, w, -z), -ellfun::sigma(ctx, -w, z)));

    const cplx p = ellfun::rho(ctx, z);
    r.rho_shift_1 = std::max(r.rho_shift_1, rel(ellfun::rho(ctx, z + 1.0), p));
    r.rho_shift_tau = std::max(r.rho_shift_tau, rel(ellfun::rho(ctx, z + tau), p - kTwoPiI));
    r.rho_odd = std::max(r.rho_odd, rel(ellfun::rho(ctx, -z), -p));
  }
  const cplx w0 = ellfun::from_lattice_coords(ctx, 0.37, 0.29);
  r.sigma_residue_err = std::abs(
      ellfun::contour_residue(
          ctx, [&](cplx z) { return ellfun::sigma(ctx, w0, z); }, 0.0, 0.1, 256) -
      1.0);
  r.rho_residue_err = std::abs(
      ellfun::contour_residue(ctx, [&](cplx z) { return ellfun::rho(ctx, z); }, 0.0, 0.1, 256) -
      1.0);
  return r;
}

bool CdybeReport::pass(double tol, double fd_tol) const {
  return antisymmetry_max <= 1e-10 && casimir_residue_err <= tol &&
         std::min(convention_a_max, convention_b_max) <= tol && fd_deviation_max <= fd_tol;
}

CdybeReport run_cdybe_checks(int n, cplx tau, int samples, std::uint64_t seed,
                             int antisymmetry_samples) {
  EllipticContext ctx(tau);
  auto rep = rmatrix::build_sl_rep(n);
  std::mt19937_64 rng(seed);
  CdybeReport rpt;

  for (int k = 0; k < antisymmetry_samples; ++k) {
    auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
    const cplx z = sample_point(ctx, rng);
    rpt.antisymmetry_max =
        std::max(rpt.antisymmetry_max, rmatrix::antisymmetry_residual(rep, ctx, lam, z));
  }

  {
    auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
    rmatrix::Mat res = rmatrix::Mat::Zero(n * n, n * n);
    const int nodes = 256;
    const double radius = 0.25;
    for (int k = 0; k < nodes; ++k) {
      const cplx zk = radius * std::exp(cplx(0.0, 2.0 * std::acos(-1.0) * k / nodes));
      res += rmatrix::felder_r(rep, ctx, lam, zk).m * zk;
    }
    res /= static_cast<double>(nodes);
    rpt.casimir_residue_err = (res - rep.casimir2()).norm();
  }

  for (int k = 0; k < samples; ++k) {
    auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
    const cplx z1 = sample_point(ctx, rng);
    cplx z2, z3;
    do {
      z2 = sample_point(ctx, rng);
    } while (ellfun::lattice_distance(ctx, z1 - z2) < 0.05);
    do {
      z3 = sample_point(ctx, rng);
    } while (ellfun::lattice_distance(ctx, z1 - z3) < 0.05 ||
             ellfun::lattice_distance(ctx, z2 - z3) < 0.05);
    auto res = rmatrix::cdybe_residual(rep, ctx, lam, z1, z2, z3);
    auto res_fd = rmatrix::cdybe_residual_fd(rep, ctx, lam, z1, z2, z3);
    rpt.convention_a_max = std::max(rpt.convention_a_max, res.convention_a);
    rpt.convention_b_max = std::max(rpt.convention_b_max, res.convention_b);
    rpt.fd_deviation_max =
        std::max({rpt.fd_deviation_max, std::abs(res.convention_a - res_fd.convention_a),
                  std::abs(res.convention_b - res_fd.convention_b)});
  }
  rpt.selected_convention = rpt.convention_a_max <= rpt.convention_b_max ? 'a' : 'b';
  return rpt;
}

bool ProjectionReport::pass(double tol_kernel, double tol_idem, double tol_skew) const {
  return std::max({reproduce_holomorphic, annihilate_rho, annihilate_sigma}) <= tol_kernel &&
         idempotence <= tol_idem && skew_adjoint <= tol_skew;
}

ProjectionReport run_projection_checks(int n, cplx tau, std::uint64_t seed) {
  EllipticContext ctx(tau);
  auto rep = rmatrix::build_sl_rep(n);
  std::mt19937_64 rng(seed);
  auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
  ProjectionReport rpt;
  const double radius = 0.25;
  const cplx zp(0.1, 0.02);

  // f(z) = z^2 h reproduces itself on U_+.
  {
    const rmatrix::Mat h = rep.cartan[0];
    auto f = [&](cplx z) { return (z * z * h).eval(); };
    auto split = rmatrix::split_loop_element(rep, ctx, lam, f, radius);
    rpt.reproduce_holomorphic = (split.plus(zp) - f(zp)).norm();
  }
  // f(z) = rho(z) h is the P_0 line.
  {
    const rmatrix::Mat h = rep.cartan[0];
    auto f = [&](cplx z) { return (ellfun::rho(ctx, z) * h).eval(); };
    auto split = rmatrix::split_loop_element(rep, ctx, lam, f, radius);
    rpt.annihilate_rho = split.plus(zp).norm();
    rpt.annihilate_rho = std::max(rpt.annihilate_rho, (split.zero(zp) - f(zp)).norm());
  }
  // f(z) = sigma_{-w}(z) e_{-alpha} with w = <alpha, lambda> spans the U_- side.
  {
    const int a = 0;
    const int opp = rep.opposite[a];
    const cplx w = rmatrix::root_pairing(rep, a, lam);
    auto f = [&, opp](cplx z) { return (ellfun::sigma(ctx, -w, z) * rep.roots[opp].e).eval(); };
    auto split = rmatrix::split_loop_element(rep, ctx, lam, f, radius);
    rpt.annihilate_sigma = split.plus(zp).norm();
  }
  // Idempotence on random Laurent loops of degree <= 5.
  {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
      rmatrix::LaurentLoop loop;
      loop.min_deg = -2;
      for (int k = 0; k < 8; ++k) { // degrees -2 .. 5
        rmatrix::Mat c = rmatrix::Mat::Zero(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) c(i, j) = cplx(unif(rng), unif(rng));
        c -= (c.trace() / static_cast<double>(n)) * rmatrix::Mat::Identity(n, n);
        loop.coeffs.push_back(c);
      }
      auto f = [&loop](cplx z) { return loop.eval(z); };
      auto split = rmatrix::split_loop_element(rep, ctx, lam, f, radius);
      auto split2 = rmatrix::split_loop_element(rep, ctx, lam, split.plus, radius * 0.6);
      for (cplx test : {cplx(0.05, 0.01), cplx(-0.04, 0.06), cplx(0.02, -0.08)})
        rpt.idempotence = std::max(rpt.idempotence, (split2.plus(test) - split.plus(test)).norm());
    }
  }
  // Skew-adjointness of R under the contour pairing.
  {
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    auto random_loop = [&](rmatrix::LaurentLoop& loop) {
      loop.min_deg = -2;
      loop.coeffs.clear();
      for (int k = 0; k < 5; ++k) {
        rmatrix::Mat c = rmatrix::Mat::Zero(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) c(i, j) = cplx(unif(rng), unif(rng));
        c -= (c.trace() / static_cast<double>(n)) * rmatrix::Mat::Identity(n, n);
        loop.coeffs.push_back(c);
      }
    };
    for (int trial = 0; trial < 3; ++trial) {
      rmatrix::LaurentLoop lf, lg;
      random_loop(lf);
      random_loop(lg);
      auto f = [&lf](cplx z) { return lf.eval(z); };
      auto g = [&lg](cplx z) { return lg.eval(z); };
      const double proj_radius = 0.35; // pairing contour at 0.25 sits inside
      auto split_f = rmatrix::split_loop_element(rep, ctx, lam, f, proj_radius);
      auto split_g = rmatrix::split_loop_element(rep, ctx, lam, g, proj_radius);
      auto rf = [&](cplx z) { return (split_f.plus(z) - 0.5 * f(z)).eval(); };
      auto rg = [&](cplx z) { return (split_g.plus(z) - 0.5 * g(z)).eval(); };
      cplx s = rmatrix::loop_pairing(rep, ctx, rf, g, 0.25, 128) +
               rmatrix::loop_pairing(rep, ctx, f, rg, 0.25, 128);
      rpt.skew_adjoint = std::max(rpt.skew_adjoint, std::abs(s));
    }
  }
  return rpt;
}

} // namespace skl::checks
