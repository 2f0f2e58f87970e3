#pragma once

#include <optional>
#include <vector>

#include "skl/rational.hpp"

namespace skl {

using RatMat = std::vector<RatVec>; // row-major

Rat dot(const RatVec& a, const RatVec& b);
RatVec vadd(const RatVec& a, const RatVec& b);
RatVec vsub(const RatVec& a, const RatVec& b);
RatVec vneg(const RatVec& a);
RatVec vscale(const Rat& c, const RatVec& a);
bool is_integral(const RatVec& v);

// Exact inverse of a square matrix; throws std::invalid_argument if singular.
RatMat mat_inverse(const RatMat& m);

// Solves sum_j x_j * cols[j] = rhs exactly. The columns must be linearly
// independent; returns nullopt when rhs is outside their span.
std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& rhs);

} // namespace skl
