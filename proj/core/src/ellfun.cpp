#include "skl/ellfun.hpp"

#include <cmath>
#include <stdexcept>

namespace skl::ellfun {

namespace {

constexpr double kPoleGuard = 1e-6;
const double kPi = std::acos(-1.0);

void require_off_lattice(const EllipticContext& ctx, cplx z, const char* what) {
  if (lattice_distance(ctx, z) < kPoleGuard)
    throw std::domain_error(std::string(what) + ": point within 1e-6 of the zero lattice");
}

// theta_1 and derivatives share one truncation loop; `order` 0, 1 or 2.
cplx theta_series(const EllipticContext& ctx, cplx z, int order) {
  const cplx q = ctx.nome;
  const double lq = std::abs(q);
  const double y = std::abs(z.imag());
  cplx sum = 0.0;
  double running_max = 0.0;
  for (int n = 0;; ++n) {
    if (n >= ctx.max_terms)
      throw std::runtime_error("theta1: series cap exceeded (Im tau too small for tolerance)");
    const double m = 2.0 * n + 1.0;
    const cplx qpow = std::pow(q, (n + 0.5) * (n + 0.5));
    const cplx arg = m * kPi * z;
    cplx term;
    switch (order) {
      case 0: term = qpow * std::sin(arg); break;
      case 1: term = qpow * m * kPi * std::cos(arg); break;
      case 2: term = -qpow * m * kPi * m * kPi * std::sin(arg); break;
      default: throw std::invalid_argument("theta1_derivative: order must be 1 or 2");
    }
    if (n % 2 == 1) term = -term;
    sum += term;
    running_max = std::max(running_max, std::abs(term));
    // |sin|, |cos| <= e^{m' pi |Im z|} bounds the next term.
    const double mn = 2.0 * n + 3.0;
    const double next_bound =
        std::pow(lq, (n + 1.5) * (n + 1.5)) * std::exp(mn * kPi * y) * (order == 0 ? 1.0 : mn * kPi * mn * kPi);
    if (next_bound < ctx.truncation_tol * std::max(running_max, 1e-300)) break;
  }
  return 2.0 * sum;
}

} // namespace

EllipticContext::EllipticContext(cplx tau_, double tol, int max_terms_)
    : tau(tau_), truncation_tol(tol), max_terms(max_terms_) {
  if (!(tau.imag() > 0.0)) throw std::invalid_argument("EllipticContext: Im(tau) must be positive");
  if (!(truncation_tol > 0.0)) throw std::invalid_argument("EllipticContext: tolerance must be positive");
  nome = std::exp(cplx(0.0, kPi) * tau);
}

std::array<double, 2> lattice_coords(const EllipticContext& ctx, cplx z) {
  double b = z.imag() / ctx.tau.imag();
  double a = z.real() - b * ctx.tau.real();
  return {a, b};
}

cplx from_lattice_coords(const EllipticContext& ctx, double a, double b) {
  return cplx(a, 0.0) + b * ctx.tau;
}

double lattice_distance(const EllipticContext& ctx, cplx z) {
  auto [a, b] = lattice_coords(ctx, z);
  double best = std::abs(z);
  for (int da = -1; da <= 1; ++da)
    for (int db = -1; db <= 1; ++db) {
      cplx p = cplx(std::floor(a) + da, 0.0) + (std::floor(b) + db) * ctx.tau;
      best = std::min(best, std::abs(z - p));
    }
  return best;
}

cplx reduce_to_fundamental(const EllipticContext& ctx, cplx z) {
  auto [a, b] = lattice_coords(ctx, z);
  a -= std::floor(a);
  b -= std::floor(b);
  if (a > 1.0 - 1e-12) a = 0.0;
  if (b > 1.0 - 1e-12) b = 0.0;
  return from_lattice_coords(ctx, a, b);
}

cplx theta1(const EllipticContext& ctx, cplx z) { return theta_series(ctx, z, 0); }

cplx theta1_derivative(const EllipticContext& ctx, cplx z, int order) {
  if (order != 1 && order != 2)
    throw std::invalid_argument("theta1_derivative: order must be 1 or 2");
  return theta_series(ctx, z, order);
}

cplx sigma(const EllipticContext& ctx, cplx w, cplx z) {
  require_off_lattice(ctx, z, "sigma");
  require_off_lattice(ctx, w, "sigma");
  return theta1(ctx, w - z) * theta1_derivative(ctx, 0.0, 1) / (theta1(ctx, z) * theta1(ctx, w));
}

cplx sigma_dw(const EllipticContext& ctx, cplx w, cplx z) {
  require_off_lattice(ctx, w - z, "sigma_dw");
  return sigma(ctx, w, z) * (rho(ctx, w - z) - rho(ctx, w));
}

cplx rho(const EllipticContext& ctx, cplx z) {
  require_off_lattice(ctx, z, "rho");
  return theta1_derivative(ctx, z, 1) / theta1(ctx, z);
}

cplx contour_residue(const EllipticContext&, const std::function<cplx(cplx)>& f, cplx center,
                     double radius, int nodes) {
  if (nodes < 4) throw std::invalid_argument("contour_residue: too few nodes");
  cplx acc = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const double th = 2.0 * kPi * k / nodes;
    const cplx offset = radius * std::exp(cplx(0.0, th));
    const cplx val = f(center + offset);
    if (!std::isfinite(val.real()) || !std::isfinite(val.imag()))
      throw std::runtime_error("contour_residue: non-finite sample on the contour");
    acc += val * offset;
  }
  return acc / static_cast<double>(nodes);
}

long long EllipticDivisor::degree() const {
  long long d = 0;
  for (const auto& [p, m] : entries) d += m;
  return d;
}

EllipticDivisor make_divisor(const EllipticContext& ctx,
                             const std::vector<std::pair<cplx, long long>>& raw) {
  EllipticDivisor d;
  for (const auto& [p, m] : raw)
    if (m != 0) d.entries.emplace_back(reduce_to_fundamental(ctx, p), m);
  return d;
}

EllipticDivisor divisor_sum(const EllipticContext& ctx, const EllipticDivisor& a,
                            const EllipticDivisor& b) {
  std::vector<std::pair<cplx, long long>> raw = a.entries;
  raw.insert(raw.end(), b.entries.begin(), b.entries.end());
  return make_divisor(ctx, raw);
}

cplx abel_sum(const EllipticContext& ctx, const EllipticDivisor& d) {
  cplx s = 0.0;
  for (const auto& [p, m] : d.entries) s += static_cast<double>(m) * p;
  return reduce_to_fundamental(ctx, s);
}

bool linearly_equivalent(const EllipticContext& ctx, const EllipticDivisor& d1,
                         const EllipticDivisor& d2, double tol) {
  if (d1.degree() != d2.degree()) return false;
  return lattice_distance(ctx, abel_sum(ctx, d1) - abel_sum(ctx, d2)) <= tol;
}

std::array<cplx, 4> halve_point(const EllipticContext& ctx, cplx s) {
  std::array<cplx, 4> out;
  int k = 0;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= 1; ++j)
      out[k++] = reduce_to_fundamental(ctx, 0.5 * s + 0.5 * (cplx(i, 0.0) + cplx(j, 0.0) * ctx.tau));
  return out;
}

} // namespace skl::ellfun
