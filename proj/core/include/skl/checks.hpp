#pragma once

#include <complex>
#include <cstdint>

namespace skl::checks {

using cplx = std::complex<double>;

// Max residuals of the theta/sigma/rho functional equations over `points`
// random samples, plus the contour residues at the origin.
struct EllfunReport {
  double theta_shift_1 = 0.0;  // theta1(z+1) + theta1(z)
  double theta_shift_tau = 0.0;
  double theta_odd = 0.0;
  double sigma_shift_1 = 0.0;
  double sigma_shift_tau = 0.0;
  double sigma_symmetry = 0.0; // sigma_w(-z) + sigma_{-w}(z)
  double rho_shift_1 = 0.0;
  double rho_shift_tau = 0.0;
  double rho_odd = 0.0;
  double sigma_residue_err = 0.0; // |residue_0 sigma_w - 1|
  double rho_residue_err = 0.0;

  double max_periodicity() const;
  bool pass(double tol_periodicity = 1e-10, double tol_residue = 1e-8) const;
};

EllfunReport run_ellfun_checks(cplx tau, int points, std::uint64_t seed);

// CDYBE suite for sl_n: antisymmetry, residue-at-0 vs the Casimir, both
// dynamical sign conventions, and the finite-difference cross-validation.
struct CdybeReport {
  double antisymmetry_max = 0.0;
  double casimir_residue_err = 0.0;
  double convention_a_max = 0.0;
  double convention_b_max = 0.0;
  double fd_deviation_max = 0.0; // |analytic - finite-difference| residual gap
  char selected_convention = 'a';

  bool pass(double tol = 1e-6, double fd_tol = 1e-4) const;
};

CdybeReport run_cdybe_checks(int n, cplx tau, int samples, std::uint64_t seed,
                             int antisymmetry_samples = 50);

// Projection suite: the three kernel examples, P_+ idempotence on random
// Laurent loops, and skew-adjointness of R under the contour pairing.
struct ProjectionReport {
  double reproduce_holomorphic = 0.0; // P_+ f = f for f in O(U_+)
  double annihilate_rho = 0.0;        // P_+ (rho h) = 0
  double annihilate_sigma = 0.0;      // P_+ (sigma_{-w} e_{-alpha}) = 0
  double idempotence = 0.0;
  double skew_adjoint = 0.0;

  bool pass(double tol_kernel = 1e-8, double tol_idem = 1e-7, double tol_skew = 1e-8) const;
};

ProjectionReport run_projection_checks(int n, cplx tau, std::uint64_t seed);

} // namespace skl::checks
