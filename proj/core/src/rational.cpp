#include "skl/rational.hpp"

#include <stdexcept>

#include "skl/ratlin.hpp"

namespace skl {

Rat rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rat_parse: empty string");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(std::stoll(s), 1);
    }
    long long p = std::stoll(s.substr(0, slash));
    long long q = std::stoll(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    return Rat(p, q);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("rat_parse: malformed rational '" + s + "'");
  }
}

std::string rat_str(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

bool is_integer(const Rat& r) { return r.denominator() == 1; }

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec vadd(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vadd: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

RatVec vsub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vsub: size mismatch");
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

RatVec vneg(const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

RatVec vscale(const Rat& c, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

RatMat mat_inverse(const RatMat& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("mat_inverse: not square");
  // Gauss-Jordan on [m | I].
  RatMat a = m;
  RatMat inv(n, RatVec(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    if (piv == n) throw std::invalid_argument("mat_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& rhs) {
  const std::size_t n = cols.size();
  if (n == 0) throw std::invalid_argument("solve_columns: no columns");
  const std::size_t m = cols[0].size();
  if (rhs.size() != m) throw std::invalid_argument("solve_columns: rhs size mismatch");
  // Augmented [cols | rhs], row-reduced.
  RatMat a(m, RatVec(n + 1, Rat(0)));
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j].size() != m) throw std::invalid_argument("solve_columns: ragged columns");
    for (std::size_t i = 0; i < m; ++i) a[i][j] = cols[j][i];
  }
  for (std::size_t i = 0; i < m; ++i) a[i][n] = rhs[i];

  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == Rat(0)) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    Rat d = a[row][col];
    for (std::size_t j = col; j <= n; ++j) a[row][j] /= d;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() < n) throw std::invalid_argument("solve_columns: dependent columns");
  // Inconsistent rows mean rhs is outside the span.
  for (std::size_t i = row; i < m; ++i)
    if (a[i][n] != Rat(0)) return std::nullopt;
  RatVec x(n, Rat(0));
  for (std::size_t k = 0; k < pivot_col.size(); ++k) x[pivot_col[k]] = a[k][n];
  return x;
}

} // namespace skl
