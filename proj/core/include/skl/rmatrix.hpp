#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <random>
#include <vector>

#include "skl/ellfun.hpp"

namespace skl::rmatrix {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;

// Matrix realization of a simple Lie algebra with an orthonormal Cartan
// basis under the trace form of the defining representation and dual root
// vector pairs <e_alpha, e_{-alpha}> = 1.
struct RMatrixRep {
  std::string algebra; // "sl2", "sl3", ...
  int dim_v = 0;
  int rank = 0;

  std::vector<Mat> cartan; // x_i, orthonormal, commuting

  struct Root {
    Eigen::VectorXd alpha; // alpha(x_i), i = 1..rank
    Mat e;                 // root vector
  };
  std::vector<Root> roots; // all of Phi
  std::vector<int> opposite; // index of -alpha for each root

  cplx form(const Mat& a, const Mat& b) const { return (a * b).trace(); }
  Mat casimir2() const; // sum x_i (x) x_i + sum e_alpha (x) e_{-alpha}
};

// sl_n in the defining representation; verifies the bracket and pairing
// invariants to machine precision.
RMatrixRep build_sl_rep(int n);

struct DynamicalPoint {
  CVec lambda; // coordinates against the orthonormal Cartan basis
};

// <alpha, lambda> for the given root.
cplx root_pairing(const RMatrixRep& rep, int root_idx, const DynamicalPoint& lam);
// Throws std::domain_error when some <alpha, lambda> is within min_dist of
// the period lattice (a wall).
void require_off_walls(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                       const DynamicalPoint& lam, double min_dist = 1e-6);
// lambda with |Im<alpha,lambda>/Im tau| folded into [0.1, 0.4] for all roots.
DynamicalPoint sample_dynamical_point(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                                      std::mt19937_64& rng);

struct TensorOperator {
  int n_factors = 2;
  int dim_v = 0;
  Mat m;
};

Mat kron(const Mat& a, const Mat& b);

// Felder's dynamical r-matrix
//   r(lambda, z) = rho(z) sum_i x_i (x) x_i
//                + sum_{alpha in Phi} sigma_{-<alpha,lambda>}(z) e_alpha (x) e_{-alpha}.
TensorOperator felder_r(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                        const DynamicalPoint& lam, cplx z);

// Embeds a 2-leg operator into legs (i, j) of an n_factors-fold product
// (order matters; legs are 1-based).
TensorOperator leg_embed(const TensorOperator& op, int leg_i, int leg_j, int n_factors);
TensorOperator one_leg_embed(const Mat& x, int dim_v, int leg, int n_factors);

// Analytic d r / d lambda_i (only the sigma terms depend on lambda).
TensorOperator dyn_derivative(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                              const DynamicalPoint& lam, cplx z, int i);

// Residuals of the classical dynamical Yang-Baxter equation on V (x) V (x) V
// under both sign conventions for the dynamical terms:
//   a: +sum_i x_i^(1) dr^{23}/dl_i + cyclic + CYBE,
//   b: the same with the dynamical block negated.
struct CdybeResidual {
  double convention_a = 0.0;
  double convention_b = 0.0;
};

CdybeResidual cdybe_residual(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, cplx z1, cplx z2, cplx z3);
// Same residuals with the dynamical derivatives replaced by central finite
// differences of step h (the cross-validation oracle).
CdybeResidual cdybe_residual_fd(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                                const DynamicalPoint& lam, cplx z1, cplx z2, cplx z3,
                                double h = 1e-5);

// || r^{12}(lambda, z) + P r(lambda, -z) P || with P the factor swap.
double antisymmetry_residual(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, cplx z);

// Lie-algebra-valued loop element given by a finite Laurent expansion.
struct LaurentLoop {
  int min_deg = 0;
  std::vector<Mat> coeffs; // coefficient of z^{min_deg + k}

  Mat eval(cplx z) const;
};

using LoopFn = std::function<Mat(cplx)>;

// The three projections attached to the splitting of loop-algebra sections:
// plus is the contour projection with kernel r(lambda, z - z'), zero the
// rho-line component, minus the remainder.
struct LoopSplit {
  LoopFn plus;
  LoopFn zero;
  LoopFn minus;
  Mat cartan_residue; // sum_i x_i (1/2 pi i) contour <x_i, f>
};

LoopSplit split_loop_element(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, const LoopFn& f, double radius = 0.25,
                             int nodes = 256);

// R = P_+ - I/2 evaluated at z'.
Mat r_operator(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
               const DynamicalPoint& lam, const LoopFn& f, cplx z_prime, double radius = 0.25,
               int nodes = 256);

// (1 / 2 pi i) contour of <f(z), g(z)> around the origin.
cplx loop_pairing(const RMatrixRep& rep, const ellfun::EllipticContext& ctx, const LoopFn& f,
                  const LoopFn& g, double radius = 0.25, int nodes = 256);

} // namespace skl::rmatrix
