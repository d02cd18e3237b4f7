#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "clutchlab/catalog.hpp"
#include "clutchlab/kernels.hpp"

using namespace clutchlab;

namespace {

// Pull-back over the 12 face corners, and a dihedral group of order 2m on m
// points with a random rank-4 representation as the rotation fiber.
struct Fixture {
  BundlePtr bundle;
  std::vector<CMatrix> psi;
};

Fixture make_fixture(int which) {
  std::mt19937_64 rng(1);
  BundlePtr bundle;
  if (which == 0) {
    const auto tetra = tetra_group();
    const auto w = conjugate_rep(tetra_standard_rep(tetra.group), random_matrix(3, 3, rng));
    bundle = std::make_shared<const EquivariantBundle>(pullback_bundle(w, tetra.action));
  } else {
    const auto d = dihedral_group(which);
    const auto reg = regular_rep(d.group);
    bundle = std::make_shared<const EquivariantBundle>(pullback_bundle(reg, d.action));
  }
  const int n = bundle->base_size();
  const int r = bundle->rank(0);
  std::vector<CMatrix> psi;
  for (int i = 0; i < n * n; ++i) psi.push_back(random_matrix(r, r, rng));
  return {bundle, std::move(psi)};
}

const Fixture& fixture(int which) {
  static std::map<int, Fixture> cache;
  auto it = cache.find(which);
  if (it == cache.end()) it = cache.emplace(which, make_fixture(which)).first;
  return it->second;
}

template <auto Kernel>
void cocycle(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(*f.bundle));
}

template <auto Kernel>
void transitivity(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(f.psi, f.bundle->base_size()));
}

template <auto Kernel>
void equivariance(benchmark::State& state) {
  const auto& f = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(*f.bundle, f.psi));
}

}  // namespace

// Argument 0 is the tetrahedral corner bundle; m > 0 is the dihedral group
// of order 2m with its regular representation as fiber.
BENCHMARK(cocycle<kernels::serial::cocycle_residuals>)->Name("cocycle/serial")->Arg(0)->Arg(4)->Arg(6);
BENCHMARK(cocycle<kernels::omp::cocycle_residuals>)->Name("cocycle/omp")->Arg(0)->Arg(4)->Arg(6);
BENCHMARK(transitivity<kernels::serial::transitivity_residuals>)->Name("transitivity/serial")->Arg(0)->Arg(6);
BENCHMARK(transitivity<kernels::omp::transitivity_residuals>)->Name("transitivity/omp")->Arg(0)->Arg(6);
BENCHMARK(equivariance<kernels::serial::equivariance_residuals>)->Name("equivariance/serial")->Arg(0)->Arg(4)->Arg(6);
BENCHMARK(equivariance<kernels::omp::equivariance_residuals>)->Name("equivariance/omp")->Arg(0)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
