#include <benchmark/benchmark.h>

#include "cisupport/resolution.hpp"

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

static void BM_resolve_k(benchmark::State& state) {
  CIPtr A = quadric_ring(int(state.range(0)));
  ModulePresentation k = residue_field(A);
  int steps = 2 * A->codim() + 10;
  for (auto _ : state) {
    Resolution res = resolve(k, steps);
    benchmark::DoNotOptimize(res.betti().back());
  }
}
BENCHMARK(BM_resolve_k)->Arg(1)->Arg(2)->Arg(3);

static void BM_cosyzygy(benchmark::State& state) {
  CIPtr A = quadric_ring(2);
  RingPtr q = A->q();
  GradedFreeModule tgt{A, {0}};
  ModulePresentation Ax = present(GradedMatrix::from_columns(
      tgt, {FreeVector::from_component(0, Polynomial::variable(q, 0))}));
  for (auto _ : state) {
    ModulePresentation co = cosyzygy_module(Ax, 2);
    benchmark::DoNotOptimize(co.gen_rank());
  }
}
BENCHMARK(BM_cosyzygy);
