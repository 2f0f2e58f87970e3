#include <benchmark/benchmark.h>

#include <random>

#include "skl/ellfun.hpp"
#include "skl/leafdim.hpp"
#include "skl/rmatrix.hpp"
#include "skl/rootsys.hpp"
#include "skl/toric.hpp"

using namespace skl;

static void BM_BuildRootSystem_E8(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(rootsys::build_root_system({rootsys::Family::E, 8}));
}
BENCHMARK(BM_BuildRootSystem_E8);

static void BM_WeylOrbit_D6_spinor(benchmark::State& state) {
  auto rs = rootsys::build_root_system({rootsys::Family::D, 6});
  for (auto _ : state)
    benchmark::DoNotOptimize(rootsys::weyl_orbit(rs, rs.fundamental_coweights[5]));
}
BENCHMARK(BM_WeylOrbit_D6_spinor);

static void BM_Gamma_D6(benchmark::State& state) {
  auto rs = rootsys::build_root_system({rootsys::Family::D, 6});
  RatVec v = vadd(rs.fundamental_coweights[0], rs.fundamental_coweights[5]);
  for (auto _ : state) benchmark::DoNotOptimize(leafdim::gamma_orbit(rs, v));
}
BENCHMARK(BM_Gamma_D6);

static void BM_Theta1(benchmark::State& state) {
  ellfun::EllipticContext ctx(std::complex<double>(0.3, 0.8));
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unif(0.05, 0.95);
  for (auto _ : state) {
    auto z = ellfun::from_lattice_coords(ctx, unif(rng), unif(rng));
    benchmark::DoNotOptimize(ellfun::theta1(ctx, z));
  }
}
BENCHMARK(BM_Theta1);

static void BM_FelderR_sl3(benchmark::State& state) {
  ellfun::EllipticContext ctx(std::complex<double>(0.0, 1.0));
  auto rep = rmatrix::build_sl_rep(3);
  std::mt19937_64 rng(2);
  auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(rmatrix::felder_r(rep, ctx, lam, {0.31, 0.27}));
}
BENCHMARK(BM_FelderR_sl3);

static void BM_CdybeResidual_sl2(benchmark::State& state) {
  ellfun::EllipticContext ctx(std::complex<double>(0.0, 1.0));
  auto rep = rmatrix::build_sl_rep(2);
  std::mt19937_64 rng(3);
  auto lam = rmatrix::sample_dynamical_point(rep, ctx, rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        rmatrix::cdybe_residual(rep, ctx, lam, {0.11, 0.21}, {0.42, 0.13}, {0.73, 0.56}));
}
BENCHMARK(BM_CdybeResidual_sl2);

static void BM_HilbertBasis_k5(benchmark::State& state) {
  toric::Cone2D dual = toric::dual_cone(toric::Cone2D({1, 5}, {1, -5}));
  for (auto _ : state) benchmark::DoNotOptimize(toric::hilbert_basis(dual));
}
BENCHMARK(BM_HilbertBasis_k5);

BENCHMARK_MAIN();
