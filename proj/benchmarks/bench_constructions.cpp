#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "jdlat/coord.hpp"
#include "jdlat/ej.hpp"
#include "jdlat/enumeration.hpp"
#include "jdlat/lattice.hpp"
#include "jdlat/perm.hpp"

namespace {

jdlat::PermTuple random_tuple(int n, int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<jdlat::Permutation> members;
  for (int i = 1; i < k; ++i) {
    std::vector<int> image(static_cast<std::size_t>(n));
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    members.emplace_back(image);
  }
  return jdlat::PermTuple(n, std::move(members));
}

void bench_build_ej(benchmark::State& state) {
  const jdlat::PermTuple tuple =
      random_tuple(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jdlat::build_ej_lattice(tuple));
  }
}
BENCHMARK(bench_build_ej)->Args({4, 3})->Args({6, 3})->Args({6, 4})->Args({8, 4});

void bench_build_coord(benchmark::State& state) {
  const jdlat::PermTuple tuple =
      random_tuple(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(jdlat::build_coord_lattice(tuple));
  }
}
BENCHMARK(bench_build_coord)->Args({4, 3})->Args({6, 3})->Args({6, 4});

void bench_union_closure(benchmark::State& state) {
  const jdlat::PermTuple tuple = random_tuple(static_cast<int>(state.range(0)), 4, 11);
  std::vector<jdlat::SubsetMask> generators;
  for (const jdlat::GeneratingChain& chain : jdlat::generating_chains(tuple)) {
    generators.insert(generators.end(), chain.prefixes.begin(), chain.prefixes.end());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(jdlat::union_closure(generators));
  }
}
BENCHMARK(bench_union_closure)->Arg(6)->Arg(8)->Arg(10);

void bench_isomorphism(benchmark::State& state) {
  // A positive instance: the two constructions of one tuple always match.
  const jdlat::PermTuple tuple = random_tuple(static_cast<int>(state.range(0)), 3, 3);
  const jdlat::SubsetLattice a = jdlat::build_ej_lattice(tuple);
  const jdlat::TupleLattice b = jdlat::build_coord_lattice(tuple.inversed());
  for (auto _ : state) {
    benchmark::DoNotOptimize(jdlat::find_isomorphism(a.lattice, b.lattice));
  }
}
BENCHMARK(bench_isomorphism)->Arg(5)->Arg(6)->Arg(8);

void bench_census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(jdlat::census_jd_lattices(n));
  }
}
BENCHMARK(bench_census)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
