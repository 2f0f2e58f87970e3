#include "skl/parabolics.hpp"

#include <stdexcept>

namespace skl::parabolics {

using rootsys::CartanType;
using rootsys::Family;
using rootsys::RootSystem;

std::vector<int> compact_orbit_roots(const RootSystem& rs) {
  std::vector<int> out;
  for (int i = 0; i < rs.rank(); ++i) {
    bool ok = true;
    for (const auto& coords : rs.root_simple_coords) {
      const Rat& c = coords[i]; // alpha_i^*(beta) = coefficient of alpha_i in beta
      if (c != Rat(0) && c != Rat(1) && c != Rat(-1)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(i + 1);
  }
  return out;
}

long long flag_dimension(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank()) throw std::invalid_argument("flag_dimension: root index out of range");
  Rat total(0);
  for (const auto& coords : rs.root_simple_coords)
    if (coords[i - 1] < Rat(0)) total -= coords[i - 1];
  if (!is_integer(total)) throw std::logic_error("flag_dimension: non-integral sum");
  return total.numerator();
}

std::vector<TableRow> classification_table(int max_rank) {
  std::vector<CartanType> types;
  for (int n = 1; n <= max_rank; ++n) types.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) types.push_back({Family::C, n});
  for (int n = 3; n <= max_rank; ++n) types.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) types.push_back({Family::E, n});
  if (max_rank >= 4) types.push_back({Family::F, 4});
  if (max_rank >= 2) types.push_back({Family::G, 2});

  std::vector<TableRow> table;
  for (const auto& t : types) {
    RootSystem rs = rootsys::build_root_system(t);
    TableRow row;
    row.type = t;
    row.compact_roots = compact_orbit_roots(rs);
    for (int i : row.compact_roots) row.flag_dims.push_back(flag_dimension(rs, i));
    table.push_back(std::move(row));
  }
  return table;
}

} // namespace skl::parabolics
