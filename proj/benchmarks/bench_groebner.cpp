#include <benchmark/benchmark.h>

#include "cisupport/ideal.hpp"

using namespace cisupport;

namespace {

std::vector<Polynomial> katsura3(const RingPtr& r) {
  // small dense basis workload: generic quadrics in three variables
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial z = Polynomial::variable(r, 2);
  return {x * x + (y * y).scaled(2) - x, x * y + y * z - y.scaled(2),
          x * x + y * y + z * z - Polynomial::constant(r, 1)};
}

}  // namespace

static void BM_groebner_quadrics(benchmark::State& state) {
  RingPtr r = make_ring(32003, {"x", "y", "z"});
  std::vector<Polynomial> gens = katsura3(r);
  for (auto _ : state) {
    GroebnerBasis G = groebner(gens);
    benchmark::DoNotOptimize(G.gens.size());
  }
}
BENCHMARK(BM_groebner_quadrics);

static void BM_normal_form(benchmark::State& state) {
  RingPtr r = make_ring(32003, {"x", "y", "z"});
  GroebnerBasis G = groebner(katsura3(r));
  Polynomial x = Polynomial::variable(r, 0);
  Polynomial y = Polynomial::variable(r, 1);
  Polynomial f = (x + y) * (x + y) * (x + y) * (x - y);
  for (auto _ : state) {
    Polynomial nf = normal_form(f, G);
    benchmark::DoNotOptimize(nf.is_zero());
  }
}
BENCHMARK(BM_normal_form);

static void BM_radical_membership(benchmark::State& state) {
  RingPtr r = make_ring(32003, {"t1", "t2"});
  Polynomial t1 = Polynomial::variable(r, 0);
  Polynomial t2 = Polynomial::variable(r, 1);
  Polynomial s = t1 + t2;
  GroebnerBasis I = groebner({s * s * s, t1 * t2});
  for (auto _ : state) benchmark::DoNotOptimize(radical_membership(s, I));
}
BENCHMARK(BM_radical_membership);

BENCHMARK_MAIN();
