#pragma once

#include <array>
#include <complex>
#include <functional>
#include <vector>

namespace skl::ellfun {

using cplx = std::complex<double>;

// Evaluation context for the Jacobi theta function theta_1 and its relatives
// on C / (Z + tau Z). The series is the sine expansion
//   theta_1(z) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi z),
// with nome q = exp(i pi tau); truncation stops once the bound on the next
// term drops below truncation_tol times the running maximum. Immutable after
// construction; all evaluators are pure.
struct EllipticContext {
  cplx tau;
  double truncation_tol;
  int max_terms;

  explicit EllipticContext(cplx tau_, double tol = 1e-14, int max_terms_ = 64);

  cplx nome; // exp(i pi tau)
};

// Distance from z to the period lattice Z + tau Z.
double lattice_distance(const EllipticContext& ctx, cplx z);
// Representative of z in {a + b tau : 0 <= a, b < 1}.
cplx reduce_to_fundamental(const EllipticContext& ctx, cplx z);
// (a, b) with z = a + b tau.
std::array<double, 2> lattice_coords(const EllipticContext& ctx, cplx z);
cplx from_lattice_coords(const EllipticContext& ctx, double a, double b);

cplx theta1(const EllipticContext& ctx, cplx z);
// Termwise series derivative, order 1 or 2.
cplx theta1_derivative(const EllipticContext& ctx, cplx z, int order);

// sigma_w(z) = theta_1(w - z) theta_1'(0) / (theta_1(z) theta_1(w));
// 1-periodic in z, sigma_w(z + tau) = sigma_w(z) exp(2 pi i w), simple pole
// of residue 1 at z = 0, simple zero at z = w. Throws std::domain_error when
// z or w is within 1e-6 of the zero lattice.
cplx sigma(const EllipticContext& ctx, cplx w, cplx z);
// d sigma_w(z) / dw = sigma_w(z) (rho(w - z) - rho(w)).
cplx sigma_dw(const EllipticContext& ctx, cplx w, cplx z);

// rho(z) = theta_1'(z) / theta_1(z); odd, 1-periodic, rho(z + tau) =
// rho(z) - 2 pi i, residue 1 at the lattice.
cplx rho(const EllipticContext& ctx, cplx z);

// (1 / 2 pi i) times the circle integral of f, by the trapezoidal rule on
// `nodes` points. Throws std::runtime_error on non-finite samples.
cplx contour_residue(const EllipticContext& ctx, const std::function<cplx(cplx)>& f, cplx center,
                     double radius, int nodes);

struct EllipticDivisor {
  // Points are stored reduced to the fundamental domain.
  std::vector<std::pair<cplx, long long>> entries;

  long long degree() const;
};

EllipticDivisor make_divisor(const EllipticContext& ctx,
                             const std::vector<std::pair<cplx, long long>>& raw);
EllipticDivisor divisor_sum(const EllipticContext& ctx, const EllipticDivisor& a,
                            const EllipticDivisor& b);

// Sum of multiplicity * point in the curve group, reduced.
cplx abel_sum(const EllipticContext& ctx, const EllipticDivisor& d);

// Equal degrees and Abel sums congruent mod the lattice within tol.
bool linearly_equivalent(const EllipticContext& ctx, const EllipticDivisor& d1,
                         const EllipticDivisor& d2, double tol);

// The four solutions of 2x = s in the curve group.
std::array<cplx, 4> halve_point(const EllipticContext& ctx, cplx s);

} // namespace skl::ellfun
