#pragma once

#include <string>

#include "skl/leafdim.hpp"

namespace skl::sing_io {

// JSON singularity-data format (schema 1):
// {
//   "schema": 1,
//   "group": {"family": "D", "rank": 4, "lattice": "adjoint", "center_dim": 0},
//   "tau": [re, im],
//   "points": [
//     {"z": [re, im] | "lattice": [a, b],          // a + b tau
//      "coweight": {"basis": "fundamental_coweight" | "ambient" | "fundamental_weight",
//                   "coords": ["1/2", "1/2", ...]}} // rationals as strings
//   ]
// }
// Throws std::invalid_argument on malformed input.
leafdim::SingularityData parse_singularity_data(const std::string& json_text);

// Normalized re-serialization (ambient rational coweights, lattice point
// coordinates); parsing the output reproduces identical results.
std::string write_singularity_data(const leafdim::SingularityData& sd, bool pretty = false);

} // namespace skl::sing_io
