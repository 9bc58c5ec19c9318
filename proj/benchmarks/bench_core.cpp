#include <benchmark/benchmark.h>

#include "ctv/chessboard.hpp"
#include "ctv/cocycle.hpp"
#include "ctv/homology.hpp"
#include "ctv/tverberg.hpp"

using namespace ctv;

static void BM_ChessboardFacets(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chessboard_complex({r, r - 1}));
  }
}
BENCHMARK(BM_ChessboardFacets)->Arg(4)->Arg(5)->Arg(6);

static void BM_Homology(benchmark::State& state) {
  int r = static_cast<int>(state.range(0));
  Complex board = chessboard_complex({r, r - 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(homology(board, r - 2));
  }
}
BENCHMARK(BM_Homology)->Arg(3)->Arg(4)->Arg(5);

static void BM_CocycleFacet(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  int r = static_cast<int>(state.range(1));
  ConfigSpace cs(d, r);
  CocycleEvaluator eval(cs);
  FacetCode fc;
  fc.rows.assign(cs.columns(), 0);
  for (int col = 1; col <= cs.n(); ++col) {
    fc.rows[col - 1] = (col - 1) % (r - 1) + 1;
  }
  fc.rows[cs.n()] = r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval.evaluate(fc));
  }
}
BENCHMARK(BM_CocycleFacet)->Args({1, 3})->Args({2, 3})->Args({1, 5})->Args({3, 4});

static void BM_HullsIntersect(benchmark::State& state) {
  auto ref = reference_configuration(2, 3);
  std::vector<std::vector<RationalPoint>> parts;
  for (int i = 0; i < 2; ++i) {
    parts.push_back({ref.classes[0][i], ref.classes[1][i], ref.classes[2][i]});
  }
  parts.push_back({ref.classes[3][0]});
  for (auto _ : state) {
    benchmark::DoNotOptimize(hulls_intersect(parts));
  }
}
BENCHMARK(BM_HullsIntersect);

static void BM_SpecialChains(benchmark::State& state) {
  int d = static_cast<int>(state.range(0));
  int r = static_cast<int>(state.range(1));
  ConfigSpace cs(d, r);
  for (auto _ : state) {
    benchmark::DoNotOptimize(special_chains(cs));
  }
}
BENCHMARK(BM_SpecialChains)->Args({2, 3})->Args({1, 5})->Args({2, 4});

BENCHMARK_MAIN();
