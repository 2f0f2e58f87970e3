#pragma once

#include <string>
#include <vector>

namespace skl::geom {

// Labeled integer lattice with intersection form and canonical class, for
// surface intersection arithmetic.
struct DivisorClassLattice {
  std::vector<std::string> labels;
  std::vector<std::vector<long long>> gram; // symmetric
  std::vector<long long> canonical;
};

using DivisorClass = std::vector<long long>;

long long intersect(const DivisorClassLattice& l, const DivisorClass& c1, const DivisorClass& c2);

// Adjunction: g = 1 + (C.C + K.C) / 2; throws std::invalid_argument when
// C.C + K.C is odd.
long long arithmetic_genus(const DivisorClassLattice& l, const DivisorClass& c);

// Blow-up of (double cover) x P^1 at four points: classes
// {phi, z, E10, E1inf, E20, E2inf}, phi.z = 1, E_ij^2 = -1, K = 2phi - 2z + E.
// Returns the lattice and the spectral-curve class 2n phi + 2n z - n E.
std::pair<DivisorClassLattice, DivisorClass> isotropic_example_model(long long n);

// Minimal rank-2 model of the quotient surface in the quadric example:
// {s, f} with s^2 = f^2 = 0, s.f = 1, K = -2s; curve class n s + 2 f.
std::pair<DivisorClassLattice, DivisorClass> quadric_example_model(long long n);

long long geometric_genus_after_nodes(long long p_a, long long node_count);

// 2 g_cover - 2 = degree (2 g_quotient - 2) + ramification; throws when the
// quotient genus is not a nonnegative integer.
long long riemann_hurwitz_quotient(long long g_cover, long long degree, long long ramification);
long long riemann_hurwitz_cover(long long g_base, long long degree, long long ramification);

long long prym_dimension(long long g_cover, long long g_quotient);

enum class ExampleTag { Quadric, Isotropic, Calogero, Grassmann };

ExampleTag example_tag_from_string(const std::string& s);
std::string example_tag_name(ExampleTag t);

// One step of the derivation chain emitted by the genus CLI subcommand.
struct ChainStep {
  std::string label;
  long long value;
};

// The full genus/Prym bookkeeping for each worked example at parameter n,
// ending with the fiber dimension that must be half the leaf dimension.
std::vector<ChainStep> genus_chain(ExampleTag tag, long long n);

// Fiber/Prym dimension equals half the symplectic-leaf dimension computed by
// the leafdim module; Grassmann checks every 0 < k < n.
bool halfdim_consistency(ExampleTag tag, long long n);

} // namespace skl::geom
