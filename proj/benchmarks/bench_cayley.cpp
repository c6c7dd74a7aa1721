#include <benchmark/benchmark.h>

#include "cayley/aut.hpp"
#include "cayley/construct.hpp"
#include "cayley/iso.hpp"

namespace {

using namespace cayley;

void BM_AutZnZ2(benchmark::State& state) {
  auto const g = direct_product(cyclic(static_cast<std::uint64_t>(state.range(0))), cyclic(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphisms(g));
  }
}
BENCHMARK(BM_AutZnZ2)->Arg(8)->Arg(16)->Arg(20)->Arg(64);

void BM_AutDihedral(benchmark::State& state) {
  auto const g = dihedral(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(aut_group(g));
  }
}
BENCHMARK(BM_AutDihedral)->Arg(8)->Arg(12)->Arg(30);

void BM_AutElementary(benchmark::State& state) {
  GroupTable g = cyclic(1);
  for (int i = 0; i < state.range(0); ++i) {
    g = direct_product(g, cyclic(2));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(automorphisms(g));
  }
}
BENCHMARK(BM_AutElementary)->Arg(2)->Arg(3);

void BM_IsoHolomorph(benchmark::State& state) {
  auto const n = static_cast<std::uint64_t>(state.range(0));
  auto const aut = aut_group(dihedral(n)).table;
  auto const hol = holomorph(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(aut, hol));
  }
}
BENCHMARK(BM_IsoHolomorph)->Arg(8)->Arg(12)->Arg(16);

void BM_IsoNegative(benchmark::State& state) {
  auto const k = cyclic(8);
  auto const h = cyclic(2, "s");
  auto const acts = actions(h, k);
  auto const sigma = semidirect(k, h, acts[1]);
  auto const tau = semidirect(k, h, acts[2]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(are_isomorphic(sigma, tau));
  }
}
BENCHMARK(BM_IsoNegative);

void BM_Identify(benchmark::State& state) {
  auto const g = aut_group(direct_product(cyclic(8), cyclic(2))).table;
  for (auto _ : state) {
    benchmark::DoNotOptimize(identify(g));
  }
}
BENCHMARK(BM_Identify);

void BM_ActionClasses(benchmark::State& state) {
  auto const k = cyclic(static_cast<std::uint64_t>(state.range(0)));
  auto const h = cyclic(6, "s");
  for (auto _ : state) {
    benchmark::DoNotOptimize(action_class_indices(h, k));
  }
}
BENCHMARK(BM_ActionClasses)->Arg(7)->Arg(12)->Arg(63);

}  // namespace

BENCHMARK_MAIN();
