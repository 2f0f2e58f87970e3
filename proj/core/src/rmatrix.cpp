#include "skl/rmatrix.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace skl::rmatrix {

namespace {

const double kPi = std::acos(-1.0);

Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

} // namespace

Mat RMatrixRep::casimir2() const {
  Mat c = Mat::Zero(dim_v * dim_v, dim_v * dim_v);
  for (const auto& x : cartan) c += kron(x, x);
  for (std::size_t k = 0; k < roots.size(); ++k) c += kron(roots[k].e, roots[opposite[k]].e);
  return c;
}

RMatrixRep build_sl_rep(int n) {
  if (n < 2) throw std::invalid_argument("build_sl_rep: n >= 2");
  RMatrixRep rep;
  rep.algebra = "sl" + std::to_string(n);
  rep.dim_v = n;
  rep.rank = n - 1;

  // x_k = diag(1,...,1,-k,0,...,0) / sqrt(k(k+1)), orthonormal under tr(ab).
  for (int k = 1; k <= n - 1; ++k) {
    Mat x = Mat::Zero(n, n);
    const double s = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) x(i, i) = s;
    x(k, k) = -k * s;
    rep.cartan.push_back(x);
  }

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      RMatrixRep::Root r;
      r.e = Mat::Zero(n, n);
      r.e(i, j) = 1.0; // e_{eps_i - eps_j} = E_ij, dual to E_ji
      r.alpha = Eigen::VectorXd(rep.rank);
      for (int k = 0; k < rep.rank; ++k)
        r.alpha(k) = rep.cartan[k](i, i).real() - rep.cartan[k](j, j).real();
      rep.roots.push_back(std::move(r));
    }
  rep.opposite.resize(rep.roots.size());
  for (std::size_t a = 0; a < rep.roots.size(); ++a) {
    int opp = -1;
    for (std::size_t b = 0; b < rep.roots.size(); ++b)
      if ((rep.roots[a].alpha + rep.roots[b].alpha).norm() < 1e-12) opp = static_cast<int>(b);
    if (opp < 0) throw std::logic_error("root without opposite");
    rep.opposite[a] = opp;
  }

  // Invariants: commuting orthonormal Cartan, weight brackets, dual pairings.
  for (int a = 0; a < rep.rank; ++a)
    for (int b = 0; b < rep.rank; ++b) {
      if (commutator(rep.cartan[a], rep.cartan[b]).norm() > 1e-12)
        throw std::logic_error("Cartan generators do not commute");
      cplx p = rep.form(rep.cartan[a], rep.cartan[b]);
      if (std::abs(p - (a == b ? 1.0 : 0.0)) > 1e-12)
        throw std::logic_error("Cartan basis not orthonormal");
    }
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    for (int a = 0; a < rep.rank; ++a) {
      Mat lhs = commutator(rep.cartan[a], rep.roots[k].e);
      if ((lhs - rep.roots[k].alpha(a) * rep.roots[k].e).norm() > 1e-12)
        throw std::logic_error("[h, e_alpha] != alpha(h) e_alpha");
    }
    if (std::abs(rep.form(rep.roots[k].e, rep.roots[rep.opposite[k]].e) - 1.0) > 1e-12)
      throw std::logic_error("<e_alpha, e_{-alpha}> != 1");
  }
  return rep;
}

cplx root_pairing(const RMatrixRep& rep, int root_idx, const DynamicalPoint& lam) {
  cplx s = 0.0;
  for (int k = 0; k < rep.rank; ++k) s += rep.roots[root_idx].alpha(k) * lam.lambda(k);
  return s;
}

void require_off_walls(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                       const DynamicalPoint& lam, double min_dist) {
  if (lam.lambda.size() != rep.rank)
    throw std::invalid_argument("DynamicalPoint: wrong number of coordinates");
  for (std::size_t k = 0; k < rep.roots.size(); ++k)
    if (ellfun::lattice_distance(ctx, root_pairing(rep, static_cast<int>(k), lam)) < min_dist)
      throw std::domain_error("dynamical point on a wall: <alpha, lambda> near the lattice");
}

DynamicalPoint sample_dynamical_point(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                                      std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int attempt = 0; attempt < 20000; ++attempt) {
    DynamicalPoint lam;
    lam.lambda = CVec(rep.rank);
    for (int k = 0; k < rep.rank; ++k) {
      double a = unif(rng), b = unif(rng);
      lam.lambda(k) = cplx(a, 0.0) + b * ctx.tau;
    }
    bool ok = true;
    for (std::size_t k = 0; k < rep.roots.size() && ok; ++k) {
      double frac = root_pairing(rep, static_cast<int>(k), lam).imag() / ctx.tau.imag();
      frac -= std::round(frac);
      ok = std::abs(frac) >= 0.1 && std::abs(frac) <= 0.4;
    }
    if (ok) return lam;
  }
  throw std::runtime_error("sample_dynamical_point: rejection sampling failed");
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

TensorOperator felder_r(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                        const DynamicalPoint& lam, cplx z) {
  require_off_walls(rep, ctx, lam);
  if (ellfun::lattice_distance(ctx, z) < 1e-6)
    throw std::domain_error("felder_r: spectral parameter on the pole lattice");
  const int d = rep.dim_v;
  Mat m = Mat::Zero(d * d, d * d);
  const cplx rho_z = ellfun::rho(ctx, z);
  for (const auto& x : rep.cartan) m += rho_z * kron(x, x);
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    const cplx w = -root_pairing(rep, static_cast<int>(k), lam);
    m += ellfun::sigma(ctx, w, z) * kron(rep.roots[k].e, rep.roots[rep.opposite[k]].e);
  }
  return {2, d, std::move(m)};
}

TensorOperator leg_embed(const TensorOperator& op, int leg_i, int leg_j, int n_factors) {
  if (op.n_factors != 2) throw std::invalid_argument("leg_embed: expected a 2-leg operator");
  if (leg_i == leg_j || leg_i < 1 || leg_j < 1 || leg_i > n_factors || leg_j > n_factors)
    throw std::invalid_argument("leg_embed: bad leg indices");
  const int d = op.dim_v;
  const long dim = static_cast<long>(std::pow(d, n_factors));
  Mat out = Mat::Zero(dim, dim);
  std::vector<int> ra(n_factors), ca(n_factors);
  for (long r = 0; r < dim; ++r) {
    long rr = r;
    for (int f = n_factors - 1; f >= 0; --f) {
      ra[f] = rr % d;
      rr /= d;
    }
    for (long c = 0; c < dim; ++c) {
      long cc = c;
      bool diag = true;
      for (int f = n_factors - 1; f >= 0; --f) {
        ca[f] = cc % d;
        cc /= d;
      }
      for (int f = 0; f < n_factors && diag; ++f)
        if (f != leg_i - 1 && f != leg_j - 1) diag = ca[f] == ra[f];
      if (!diag) continue;
      out(r, c) = op.m(ra[leg_i - 1] * d + ra[leg_j - 1], ca[leg_i - 1] * d + ca[leg_j - 1]);
    }
  }
  return {n_factors, d, std::move(out)};
}

TensorOperator one_leg_embed(const Mat& x, int dim_v, int leg, int n_factors) {
  if (leg < 1 || leg > n_factors) throw std::invalid_argument("one_leg_embed: bad leg index");
  Mat out = Mat::Identity(1, 1);
  for (int f = 1; f <= n_factors; ++f)
    out = kron(out, f == leg ? x : Mat::Identity(dim_v, dim_v));
  return {n_factors, dim_v, std::move(out)};
}

TensorOperator dyn_derivative(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                              const DynamicalPoint& lam, cplx z, int i) {
  require_off_walls(rep, ctx, lam);
  if (i < 0 || i >= rep.rank) throw std::invalid_argument("dyn_derivative: bad direction");
  const int d = rep.dim_v;
  Mat m = Mat::Zero(d * d, d * d);
  for (std::size_t k = 0; k < rep.roots.size(); ++k) {
    const cplx w = -root_pairing(rep, static_cast<int>(k), lam);
    // d/d lambda_i sigma_w(z) with w = -<alpha, lambda>.
    const cplx dw = -rep.roots[k].alpha(i);
    m += ellfun::sigma_dw(ctx, w, z) * dw * kron(rep.roots[k].e, rep.roots[rep.opposite[k]].e);
  }
  return {2, d, std::move(m)};
}

namespace {

// The CYBE commutator block and the dynamical block, separately.
struct CdybeParts {
  Mat cybe;
  Mat dynamical;
};

CdybeParts cdybe_parts(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                       const DynamicalPoint& lam, cplx z1, cplx z2, cplx z3,
                       const std::function<Mat(cplx, int)>& deriv) {
  const auto r12 = leg_embed(felder_r(rep, ctx, lam, z1 - z2), 1, 2, 3).m;
  const auto r13 = leg_embed(felder_r(rep, ctx, lam, z1 - z3), 1, 3, 3).m;
  const auto r23 = leg_embed(felder_r(rep, ctx, lam, z2 - z3), 2, 3, 3).m;
  CdybeParts parts;
  parts.cybe = commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
  const int d = rep.dim_v;
  Mat dyn = Mat::Zero(d * d * d, d * d * d);
  for (int i = 0; i < rep.rank; ++i) {
    const Mat x1 = one_leg_embed(rep.cartan[i], d, 1, 3).m;
    const Mat x2 = one_leg_embed(rep.cartan[i], d, 2, 3).m;
    const Mat x3 = one_leg_embed(rep.cartan[i], d, 3, 3).m;
    dyn += x1 * leg_embed({2, d, deriv(z2 - z3, i)}, 2, 3, 3).m;
    dyn += x2 * leg_embed({2, d, deriv(z3 - z1, i)}, 3, 1, 3).m;
    dyn += x3 * leg_embed({2, d, deriv(z1 - z2, i)}, 1, 2, 3).m;
  }
  parts.dynamical = std::move(dyn);
  return parts;
}

CdybeResidual residual_from_parts(const CdybeParts& p) {
  return {(p.dynamical + p.cybe).norm(), (-p.dynamical + p.cybe).norm()};
}

} // namespace

CdybeResidual cdybe_residual(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, cplx z1, cplx z2, cplx z3) {
  auto deriv = [&](cplx z, int i) { return dyn_derivative(rep, ctx, lam, z, i).m; };
  return residual_from_parts(cdybe_parts(rep, ctx, lam, z1, z2, z3, deriv));
}

CdybeResidual cdybe_residual_fd(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                                const DynamicalPoint& lam, cplx z1, cplx z2, cplx z3, double h) {
  auto deriv = [&](cplx z, int i) {
    DynamicalPoint lp = lam, lm = lam;
    lp.lambda(i) += h;
    lm.lambda(i) -= h;
    return ((felder_r(rep, ctx, lp, z).m - felder_r(rep, ctx, lm, z).m) / (2.0 * h)).eval();
  };
  return residual_from_parts(cdybe_parts(rep, ctx, lam, z1, z2, z3, deriv));
}

double antisymmetry_residual(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, cplx z) {
  const int d = rep.dim_v;
  Mat swap = Mat::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) swap(a * d + b, b * d + a) = 1.0;
  const Mat r = felder_r(rep, ctx, lam, z).m;
  const Mat r_neg = felder_r(rep, ctx, lam, -z).m;
  return (r + swap * r_neg * swap).norm();
}

Mat LaurentLoop::eval(cplx z) const {
  if (coeffs.empty()) throw std::invalid_argument("LaurentLoop: empty");
  Mat out = Mat::Zero(coeffs[0].rows(), coeffs[0].cols());
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    out += coeffs[k] * std::pow(z, min_deg + static_cast<int>(k));
  return out;
}

LoopSplit split_loop_element(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
                             const DynamicalPoint& lam, const LoopFn& f, double radius,
                             int nodes) {
  require_off_walls(rep, ctx, lam);
  const int d = rep.dim_v;

  // Samples of f on the contour are shared by every later evaluation.
  auto samples = std::make_shared<std::vector<std::pair<cplx, Mat>>>();
  samples->reserve(nodes);
  for (int k = 0; k < nodes; ++k) {
    const cplx zk = radius * std::exp(cplx(0.0, 2.0 * kPi * k / nodes));
    samples->emplace_back(zk, f(zk));
  }

  Mat cartan_res = Mat::Zero(d, d);
  for (const auto& x : rep.cartan) {
    cplx c = 0.0;
    for (const auto& [zk, fk] : *samples) c += (x * fk).trace() * zk;
    cartan_res += (c / static_cast<double>(nodes)) * x;
  }

  LoopSplit split;
  split.cartan_residue = cartan_res;
  split.plus = [rep, ctx, lam, samples, nodes, radius, d](cplx zp) {
    if (std::abs(zp) >= radius)
      throw std::domain_error("P_+ evaluation point outside the contour");
    Mat acc = Mat::Zero(d, d);
    for (const auto& [zk, fk] : *samples) {
      Mat kernel_applied = Mat::Zero(d, d);
      const cplx rho_k = ellfun::rho(ctx, zk - zp);
      for (const auto& x : rep.cartan) kernel_applied += rho_k * (x * fk).trace() * x;
      for (std::size_t a = 0; a < rep.roots.size(); ++a) {
        const cplx w = -root_pairing(rep, static_cast<int>(a), lam);
        const cplx coeff = (rep.roots[rep.opposite[a]].e * fk).trace();
        if (std::abs(coeff) > 0.0)
          kernel_applied += ellfun::sigma(ctx, w, zk - zp) * coeff * rep.roots[a].e;
      }
      acc += kernel_applied * zk;
    }
    return (acc / static_cast<double>(nodes)).eval();
  };
  split.zero = [ctx, cartan_res](cplx zp) { return (ellfun::rho(ctx, zp) * cartan_res).eval(); };
  auto plus = split.plus;
  auto zero = split.zero;
  split.minus = [f, plus, zero](cplx zp) { return (f(zp) - plus(zp) - zero(zp)).eval(); };
  return split;
}

Mat r_operator(const RMatrixRep& rep, const ellfun::EllipticContext& ctx,
               const DynamicalPoint& lam, const LoopFn& f, cplx z_prime, double radius,
               int nodes) {
  auto split = split_loop_element(rep, ctx, lam, f, radius, nodes);
  return split.plus(z_prime) - 0.5 * f(z_prime);
}

cplx loop_pairing(const RMatrixRep& rep, const ellfun::EllipticContext& ctx, const LoopFn& f,
                  const LoopFn& g, double radius, int nodes) {
  (void)ctx;
  cplx acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const cplx zk = radius * std::exp(cplx(0.0, 2.0 * kPi * k / nodes));
    acc += rep.form(f(zk), g(zk)) * zk;
  }
  return acc / static_cast<double>(nodes);
}

} // namespace skl::rmatrix
