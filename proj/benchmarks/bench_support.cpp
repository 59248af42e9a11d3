#include <benchmark/benchmark.h>

#include "cisupport/analyzer.hpp"

using namespace cisupport;

namespace {

CIPtr quadric_ring(int c) {
  std::vector<std::string> vars = {"x", "y", "z"};
  vars.resize(size_t(c));
  RingPtr q = make_ring(32003, vars);
  std::vector<Polynomial> u;
  for (int i = 0; i < c; ++i) {
    Polynomial v = Polynomial::variable(q, i);
    u.push_back(v * v);
  }
  return make_ci(q, u);
}

}  // namespace

static void BM_support_pipeline(benchmark::State& state) {
  CIPtr A = quadric_ring(int(state.range(0)));
  for (auto _ : state) {
    // full pipeline, cold caches each iteration
    Analyzer an(A, {});
    const SupportIdealResult& s = an.support(residue_field(A));
    benchmark::DoNotOptimize(s.stabilized);
  }
}
BENCHMARK(BM_support_pipeline)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_indicator(benchmark::State& state) {
  CIPtr A = quadric_ring(2);
  for (auto _ : state) {
    Analyzer an(A, {});
    ModulePresentation ind = an.indicator_module(RationalPoint{{1, 1}});
    benchmark::DoNotOptimize(ind.gen_rank());
  }
}
BENCHMARK(BM_indicator)->Unit(benchmark::kMillisecond);
