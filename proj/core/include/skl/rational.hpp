#pragma once

#include <boost/rational.hpp>
#include <string>
#include <vector>

namespace skl {

// Exact rational scalar used by all lattice-level modules. No floating
// point enters root-system or cone arithmetic.
using Rat = boost::rational<long long>;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
// or zero denominator.
Rat rat_parse(const std::string& s);

// Renders "p/q", or "p" when q == 1.
std::string rat_str(const Rat& r);

bool is_integer(const Rat& r);

} // namespace skl
