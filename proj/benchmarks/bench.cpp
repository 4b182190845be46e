#include <benchmark/benchmark.h>

#include "tausilt/explorer.hpp"
#include "tausilt/representation.hpp"
#include "tausilt/spec_io.hpp"

using namespace tausilt;

static void BM_build_algebra(benchmark::State& state) {
  AlgebraSpec spec = bundled_example("jacobian-b");
  for (auto _ : state) {
    BoundQuiverAlgebra A = algebra_from_spec(spec);
    benchmark::DoNotOptimize(A.dim());
  }
}
BENCHMARK(BM_build_algebra);

static void BM_explore_pentagon(benchmark::State& state) {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a2-path"));
  for (auto _ : state) {
    MutationGraph g = explore(A, StartObject::Algebra, 100);
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_explore_pentagon);

static void BM_explore_a3(benchmark::State& state) {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  for (auto _ : state) {
    MutationGraph g = explore(A, StartObject::Algebra, 100);
    benchmark::DoNotOptimize(g.nodes.size());
  }
}
BENCHMARK(BM_explore_a3);

static void BM_hom_space(benchmark::State& state) {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("sym-local"));
  SiltingObject top = stalk_silting(A);
  TwoTermComplex total = top.total(A);
  for (auto _ : state) {
    HomSpace h(A, total, total);
    benchmark::DoNotOptimize(h.dim());
  }
}
BENCHMARK(BM_hom_space);

static void BM_tau(benchmark::State& state) {
  BoundQuiverAlgebra A = algebra_from_spec(bundled_example("a3-rel"));
  Representation s = simple_rep(A, 0);
  for (auto _ : state) {
    Representation t = tau(A, s);
    benchmark::DoNotOptimize(t.total_dim());
  }
}
BENCHMARK(BM_tau);

BENCHMARK_MAIN();
