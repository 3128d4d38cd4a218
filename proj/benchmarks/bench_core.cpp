#include <benchmark/benchmark.h>

#include "autorb/catalog.hpp"
#include "autorb/exhaustive.hpp"
#include "autorb/orbits.hpp"
#include "autorb/structure.hpp"

using namespace autorb;

static void BM_StabilizerChain(benchmark::State& state) {
  for (auto _ : state) {
    PermutationGroup g = psl2(static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(g.order());
  }
}
BENCHMARK(BM_StabilizerChain)->Arg(7)->Arg(9)->Arg(11);

static void BM_ElementTable(benchmark::State& state) {
  PermutationGroup g = psl2(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    ElementTable t = ElementTable::enumerate(g, 5000);
    benchmark::DoNotOptimize(t.size());
  }
}
BENCHMARK(BM_ElementTable)->Arg(7)->Arg(9);

static void BM_ConjugacyClasses(benchmark::State& state) {
  ElementTable t = ElementTable::enumerate(psl2(8), 5000);
  for (auto _ : state) {
    ConjugacyPartition classes = conjugacy_classes(t);
    benchmark::DoNotOptimize(classes.class_count());
  }
}
BENCHMARK(BM_ConjugacyClasses);

static void BM_Omega(benchmark::State& state, const char* spec) {
  ElementTable t = ElementTable::enumerate(realize(parse_spec(spec)), 5000);
  for (auto _ : state) {
    OrbitPartition p = automorphism_orbits(t);
    benchmark::DoNotOptimize(p.class_count);
  }
}
BENCHMARK_CAPTURE(BM_Omega, q8, "Q8");
BENCHMARK_CAPTURE(BM_Omega, heis31, "Heis(3,1)");
BENCHMARK_CAPTURE(BM_Omega, psl27, "PSL(2,7)");
BENCHMARK_CAPTURE(BM_Omega, sl25_c2, "SL(2,5) x EA(2,1)");

static void BM_ExhaustiveAutomorphisms(benchmark::State& state) {
  ElementTable t = ElementTable::enumerate(heisenberg(2, 2), 5000);
  for (auto _ : state) {
    auto autos = exhaustive_automorphisms(t);
    benchmark::DoNotOptimize(autos.size());
  }
}
BENCHMARK(BM_ExhaustiveAutomorphisms);

BENCHMARK_MAIN();
