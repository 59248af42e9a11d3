#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cisupport/ext.hpp"
#include "oracle.hpp"

using namespace cisupport;

namespace {

CIPtr F1() {
  RingPtr q = make_ring(32003, {"x"});
  Polynomial x = Polynomial::variable(q, 0);
  return make_ci(q, {x * x});
}

CIPtr F2() {
  RingPtr q = make_ring(32003, {"x", "y"});
  Polynomial x = Polynomial::variable(q, 0);
  Polynomial y = Polynomial::variable(q, 1);
  return make_ci(q, {x * x, y * y});
}

ModulePresentation cyclic(const CIPtr& A, const std::vector<Polynomial>& gens) {
  GradedFreeModule tgt{A, {0}};
  std::vector<int> ct;
  std::vector<std::vector<Polynomial>> e(1);
  for (const Polynomial& g : gens) {
    ct.push_back(g.total_degree());
    e[0].push_back(g);
  }
  GradedFreeModule src{A, ct};
  return present(GradedMatrix(std::move(src), std::move(tgt), std::move(e)));
}

}  // namespace

TEST_CASE("resolve k over k[x]/(x^2): periodic with d = [x]") {
  CIPtr A = F1();
  Resolution res = resolve(residue_field(A), 6);
  std::vector<int> b = res.betti();
  REQUIRE(b.size() == 7);
  for (int v : b) CHECK(v == 1);
  Polynomial x = Polynomial::variable(A->q(), 0);
  for (const GradedMatrix& d : res.diff) CHECK(d.entry(0, 0) == x);
}

TEST_CASE("resolve a free module") {
  CIPtr A = F2();
  Resolution res = resolve(free_module(A, {0}), 3);
  std::vector<int> b = res.betti();
  CHECK(b == std::vector<int>{1, 0, 0, 0});
}

TEST_CASE("resolve k over k[x,y]/(x^2,y^2): beta_i = i + 1") {
  CIPtr A = F2();
  Resolution res = resolve(residue_field(A), 6);
  std::vector<int> b = res.betti();
  REQUIRE(b.size() == 7);
  for (size_t i = 0; i < b.size(); ++i) CHECK(b[i] == int(i) + 1);
  // d o d = 0 is asserted inside resolve; double-check here anyway
  for (size_t i = 0; i + 1 < res.diff.size(); ++i)
    CHECK(res.diff[i].compose(res.diff[i + 1]).is_zero());
}

TEST_CASE("resolve A/(x) over F2: constant betti, 2-periodic-with-twist") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Resolution res = resolve(cyclic(A, {x}), 6);
  std::vector<int> b = res.betti();
  for (int v : b) CHECK(v == 1);
}

TEST_CASE("extend_resolution continues seamlessly") {
  CIPtr A = F2();
  Resolution res = resolve(residue_field(A), 3);
  Resolution more = extend_resolution(res, 3);
  CHECK(more.length() == 6);
  CHECK(more.betti() == resolve(residue_field(A), 6).betti());
}

TEST_CASE("syzygy module: beta_i(Omega M) = beta_{i+1}(M)") {
  CIPtr A = F2();
  ModulePresentation k = residue_field(A);
  Resolution res = resolve(k, 6);
  ModulePresentation omega1 = syzygy_module(res, 1);
  Resolution res1 = resolve(omega1, 4);
  std::vector<int> b = res.betti();
  std::vector<int> b1 = res1.betti();
  for (size_t i = 0; i < b1.size(); ++i) CHECK(b1[i] == b[i + 1]);
  // Omega^1(k) is the maximal ideal: 2 generators over F2
  CHECK(omega1.gen_rank() == 2);
}

TEST_CASE("syzygy of a free module is zero") {
  CIPtr A = F2();
  Resolution res = resolve(free_module(A, {0, 1}), 3);
  CHECK(is_zero_module(syzygy_module(res, 1)));
  CHECK(is_zero_module(syzygy_module(res, 2)));
}

TEST_CASE("cosyzygy fixtures over F2") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  ModulePresentation Ax = cyclic(A, {x});

  // cosyzygy of A/(x) is A/(x) up to twist (periodicity)
  ModulePresentation co = cosyzygy_module(Ax, 1);
  CHECK(co.gen_rank() == 1);
  CHECK(resolve(co, 4).betti() == std::vector<int>{1, 1, 1, 1, 1});

  // cosyzygy(syzygy(M,1),1) = M stably: betti equality
  ModulePresentation k = residue_field(A);
  Resolution rk = resolve(k, 4);
  ModulePresentation o1 = syzygy_module(rk, 1);
  ModulePresentation back = cosyzygy_module(o1, 1);
  CHECK(resolve(back, 4).betti() == resolve(k, 4).betti());

  // cosyzygy of a free module is stably zero
  ModulePresentation cofree = cosyzygy_module(free_module(A, {0}), 1);
  CHECK(is_free(cofree));
}

TEST_CASE("cosyzygy requires the MCM flag") {
  CIPtr A = F2();
  ModulePresentation k = residue_field(A);
  k.is_mcm = false;
  CHECK_THROWS_AS(cosyzygy_module(k, 1), Error);
}

TEST_CASE("cone of the zero map is N + cosyzygy(M)") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Polynomial y = Polynomial::variable(A->q(), 1);
  ModulePresentation Ax = cyclic(A, {x});
  ModulePresentation Ay = cyclic(A, {y});
  ModulePresentation cone = cone_of_map(zero_hom(Ax, Ay));
  ModulePresentation expected = direct_sum(Ay, cosyzygy_module(Ax, 1));
  CHECK(resolve(cone, 4).betti() == resolve(expected, 4).betti());
}

TEST_CASE("cone of the identity is stably zero") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  ModulePresentation Ax = cyclic(A, {x});
  ModulePresentation cone = cone_of_map(identity_hom(Ax));
  CHECK(is_free(cone));
}

TEST_CASE("cone triangle rank constraint") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Polynomial y = Polynomial::variable(A->q(), 1);
  ModulePresentation Ax = cyclic(A, {x});
  ModulePresentation Ay = cyclic(A, {y});
  // any hom in degree 0; possibly zero, the constraint must hold regardless
  HomSpaceResult hs = hom_space(Ax, Ay, 0);
  HomElement f = hs.dim > 0 ? hs.basis[0] : zero_hom(Ax, Ay);
  ModulePresentation C = cone_of_map(f);
  ModulePresentation coz = cosyzygy_module(Ax, 1);
  CHECK(C.gen_rank() <= Ay.gen_rank() + coz.gen_rank());
}

TEST_CASE("growth_complexity fits fixture tails") {
  // constant -> 1, linear -> 2, zero tail -> 0
  CHECK(growth_complexity({1, 1, 1, 1, 1, 1, 1, 1}, 2, 7, 3) == 1);
  CHECK(growth_complexity({1, 2, 3, 4, 5, 6, 7, 8}, 2, 7, 3) == 2);
  CHECK(growth_complexity({1, 0, 0, 0, 0, 0, 0, 0}, 2, 7, 3) == 0);
  // quadratic-ish: binom(i+2,2) has cx 3
  std::vector<int> q;
  for (int i = 0; i <= 13; ++i) q.push_back((i + 2) * (i + 1) / 2);
  CHECK(growth_complexity(q, 3, 13, 4) == 3);
}

TEST_CASE("ext_pair(M, k) dimensions equal the betti numbers") {
  CIPtr A = F2();
  ModulePresentation k = residue_field(A);
  Polynomial x = Polynomial::variable(A->q(), 0);
  for (const ModulePresentation& M : {residue_field(A), cyclic(A, {x})}) {
    Resolution res = resolve(M, 6);
    OperatorDecomposition dec = square_decompose(lift(res), res);
    ExtWindow w = ext_pair(res, dec, k);
    std::vector<int> b = res.betti();
    REQUIRE(w.dims.size() >= 5);
    for (size_t i = 0; i + 1 < w.dims.size(); ++i) CHECK(w.dims[i] == b[i]);
  }
}

TEST_CASE("ext_pair of disjoint supports vanishes in positive degrees") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Polynomial y = Polynomial::variable(A->q(), 1);
  Resolution res = resolve(cyclic(A, {x}), 6);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  ExtWindow w = ext_pair(res, dec, cyclic(A, {y}));
  // brute-force Hom-complex cohomology on small degrees: identically zero
  // for i >= 1 (multiplication by x on A/(y) has matching kernel and image)
  for (size_t i = 1; i < w.dims.size(); ++i) CHECK(w.dims[i] == 0);
  CHECK(w.dims[0] == 1);  // Hom(A/(x), A/(y)) tensor k: the socle map
}

TEST_CASE("ext_pair(A, N) vanishes in positive degrees") {
  CIPtr A = F2();
  Resolution res = resolve(free_module(A, {0}), 5);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  ExtWindow w = ext_pair(res, dec, residue_field(A));
  for (size_t i = 1; i < w.dims.size(); ++i) CHECK(w.dims[i] == 0);
}

TEST_CASE("direct sum betti additivity and truncated series") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  ModulePresentation k = residue_field(A);
  ModulePresentation Ax = cyclic(A, {x});
  Resolution rs = resolve(direct_sum(k, Ax), 5);
  std::vector<int> bk = resolve(k, 5).betti();
  std::vector<int> bx = resolve(Ax, 5).betti();
  std::vector<int> bs = rs.betti();
  for (size_t i = 0; i < bs.size(); ++i) CHECK(bs[i] == bk[i] + bx[i]);
  // truncated Poincare coefficients are the betti numbers, truncated
  std::vector<int> p3 = poincare_truncated(rs, 3);
  REQUIRE(p3.size() == 4);
  for (size_t i = 0; i < p3.size(); ++i) CHECK(p3[i] == bs[i]);
}
