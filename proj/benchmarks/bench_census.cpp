#include <benchmark/benchmark.h>

#include "qhb/borel.hpp"
#include "qhb/census.hpp"
#include "qhb/homalg.hpp"
#include "qhb/spec_io.hpp"

namespace {

using namespace qhb;

MonomialAlgebra bound_fixture() {
  ProblemSpec spec = parse_spec(R"(
    quiver fixB {
      vertices: 1 2 3 4 5 ;
      arrows:
        alpha  : 2 -> 1 ;
        alphap : 2 -> 4 ;
        beta   : 1 -> 3 ;
        betap  : 4 -> 3 ;
        gamma  : 3 -> 5 ;
      relations: alpha.beta.gamma ;
      order: 1 < 2 < 3 < 4 < 5 ;
    })");
  return MonomialAlgebra::enumerate(spec.quiver);
}

void BM_EnumerateBasis(benchmark::State& state) {
  ProblemSpec spec = parse_spec(R"(
    quiver fixB {
      vertices: 1 2 3 4 5 ;
      arrows:
        alpha  : 2 -> 1 ;
        alphap : 2 -> 4 ;
        beta   : 1 -> 3 ;
        betap  : 4 -> 3 ;
        gamma  : 3 -> 5 ;
      relations: alpha.beta.gamma ;
      order: 1 < 2 < 3 < 4 < 5 ;
    })");
  for (auto _ : state) {
    MonomialAlgebra alg = MonomialAlgebra::enumerate(spec.quiver);
    benchmark::DoNotOptimize(alg.dimension());
  }
}
BENCHMARK(BM_EnumerateBasis);

void BM_ReedyFactorize(benchmark::State& state) {
  MonomialAlgebra alg = bound_fixture();
  VertexOrder ord = VertexOrder::total_from_ranks({1, 2, 3, 4, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(reedy_factorize(alg, ord).ok());
  }
}
BENCHMARK(BM_ReedyFactorize);

void BM_Ext1(benchmark::State& state) {
  MonomialAlgebra alg = bound_fixture();
  VertexOrder ord = VertexOrder::total_from_ranks({1, 2, 3, 4, 5});
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext1_dim(alg, ord, 1, ExtTarget::Delta, 2));
  }
}
BENCHMARK(BM_Ext1);

// census cost per total order scanned, for family quivers of growing size
void BM_FamilyCensus(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  FamilySpec spec{n, 1, 1, false};
  MonomialAlgebra alg = MonomialAlgebra::enumerate(family_quiver(spec));
  long long orders = 1;
  for (int k = 2; k <= spec.vertex_count(); ++k) orders *= k;
  for (auto _ : state) {
    StructureCensus census = enumerate_structures(alg, 10, 1);
    benchmark::DoNotOptimize(census.num_classes);
  }
  state.SetItemsProcessed(state.iterations() * orders);
}
BENCHMARK(BM_FamilyCensus)->Arg(1)->Arg(2)->Arg(3)->Arg(4);

void BM_FamilyCensusThreaded(benchmark::State& state) {
  FamilySpec spec{4, 2, 1, false};  // an 8-vertex row
  MonomialAlgebra alg = MonomialAlgebra::enumerate(family_quiver(spec));
  for (auto _ : state) {
    StructureCensus census = enumerate_structures(alg, 10, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(census.num_regular);
  }
  state.SetItemsProcessed(state.iterations() * 40320);
}
BENCHMARK(BM_FamilyCensusThreaded)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
