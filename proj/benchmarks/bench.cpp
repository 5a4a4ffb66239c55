#include <benchmark/benchmark.h>

#include "foldcat/certify.hpp"
#include "foldcat/freecat.hpp"
#include "foldcat/operads.hpp"
#include "foldcat/structure.hpp"

using namespace foldcat;

static void BM_MinimalNatTerms(benchmark::State& state) {
  const std::vector<std::uint64_t> starts = {0, 1, 2, 4, 8};
  for (auto _ : state) {
    MinimalNatOperad gen(starts);
    benchmark::DoNotOptimize(gen.term(static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_MinimalNatTerms)->Arg(200)->Arg(2000);

static void BM_GenerateSingleBox(benchmark::State& state) {
  const Diagram seed = parse_diagram("[1]", 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_minimal_diagram(seed, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_GenerateSingleBox)->Arg(20)->Arg(40);

static void BM_VerifySquareOperad(benchmark::State& state) {
  auto s = make_structure("yd1");
  std::vector<BottomObj> objs;
  objs.push_back(BottomObj::empty());
  for (int j = 1; j <= 10; ++j) {
    const std::uint64_t side = static_cast<std::uint64_t>(j - 1);
    objs.push_back(BottomObj(
        Obj(Diagram::partition(std::vector<std::uint64_t>(static_cast<std::size_t>(side), side)))));
  }
  const Collection squares(s, std::move(objs));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_operad(squares, 2, 3, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_VerifySquareOperad)->Arg(8)->Arg(10);

static void BM_MergeAxis(benchmark::State& state) {
  auto s = make_structure("yd2");
  SplitMix64 rng(1);
  SampleBounds bounds;
  bounds.max_extent = static_cast<int>(state.range(0));
  const Obj a = s->sample(rng, bounds);
  const Obj b = s->sample(rng, bounds);
  for (auto _ : state) {
    benchmark::DoNotOptimize(s->product(1, a, b));
    benchmark::DoNotOptimize(s->product(2, a, b));
  }
}
BENCHMARK(BM_MergeAxis)->Arg(4)->Arg(8);

static void BM_CertifyYd1(benchmark::State& state) {
  auto s = make_structure("yd1");
  CertOptions options;
  options.trials = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_structure(*s, options));
  }
}
BENCHMARK(BM_CertifyYd1)->Arg(100);

static void BM_MorphismExists(benchmark::State& state) {
  const Expr a = parse_expr("((a *2 b) *1 ((c *2 d) *3 e))");
  const Expr b = parse_expr("((a *1 c) *2 ((b *1 d) *3 e))");
  for (auto _ : state) {
    benchmark::DoNotOptimize(morphism_exists(a, b));
  }
}
BENCHMARK(BM_MorphismExists);

BENCHMARK_MAIN();
