#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cisupport/ext.hpp"
#include "cisupport/support.hpp"

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

bool grids_equal(const DenseMat& a, const DenseMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t r = 0; r < a.rows(); ++r)
    for (size_t c = 0; c < a.cols(); ++c)
      if (a.at(r, c) != b.at(r, c)) return false;
  return true;
}

void check_decomposition_identity(const CIRing& A, const Resolution& res,
                                  const LiftedResolution& lifted,
                                  const OperatorDecomposition& dec) {
  RingPtr q = A.q();
  for (size_t i = 0; i + 1 < lifted.dtilde.size(); ++i) {
    const PolyGrid& da = lifted.dtilde[i];
    const PolyGrid& db = lifted.dtilde[i + 1];
    size_t rows = da.size();
    size_t cols = db.empty() ? 0 : db[0].size();
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        Polynomial prod = Polynomial::zero(q);
        for (size_t k = 0; k < db.size(); ++k)
          prod = prod + da[r][k] * db[k][c];
        Polynomial rhs = Polynomial::zero(q);
        for (size_t j = 0; j < A.u().size(); ++j)
          rhs = rhs + A.u()[j] * dec.t[j][i][r][c];
        CHECK(prod == rhs);
      }
  }
  (void)res;
}

}  // namespace

TEST_CASE("lift round trip: reducing the lift mod u gives the resolution") {
  CIPtr A = F2();
  Resolution res = resolve(residue_field(A), 5);
  LiftedResolution lifted = lift(res);
  for (size_t i = 0; i < lifted.dtilde.size(); ++i)
    for (int r = 0; r < res.diff[i].rows(); ++r)
      for (int c = 0; c < res.diff[i].cols(); ++c)
        CHECK(A->nf(lifted.dtilde[i][size_t(r)][size_t(c)]) ==
              res.diff[i].entry(r, c));
}

TEST_CASE("square decomposition over k[x]/(x^2): t~ = [1]") {
  CIPtr A = F1();
  Resolution res = resolve(residue_field(A), 5);
  LiftedResolution lifted = lift(res);
  OperatorDecomposition dec = square_decompose(lifted, res);
  check_decomposition_identity(*A, res, lifted, dec);
  // d~^2 = [x^2] = u_1 * [1]
  for (const PolyGrid& g : dec.t[0]) {
    REQUIRE(g.size() == 1);
    CHECK(g[0][0] == Polynomial::constant(A->q(), 1));
  }
}

TEST_CASE("square decomposition for A/(x) over F2: t1 = [1], t2 = [0]") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Resolution res = resolve(cyclic(A, {x}), 5);
  LiftedResolution lifted = lift(res);
  OperatorDecomposition dec = square_decompose(lifted, res);
  check_decomposition_identity(*A, res, lifted, dec);
  for (const PolyGrid& g : dec.t[0]) CHECK(g[0][0] == Polynomial::constant(A->q(), 1));
  for (const PolyGrid& g : dec.t[1]) CHECK(g[0][0].is_zero());
  EisenbudAction act = action_on_ext(dec, res);
  for (const DenseMat& chi : act.chi[0]) CHECK(chi.at(0, 0) == 1);
  for (const DenseMat& chi : act.chi[1]) CHECK(chi.at(0, 0) == 0);
}

TEST_CASE("free module has the empty decomposition") {
  CIPtr A = F2();
  Resolution res = resolve(free_module(A, {0}), 4);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  for (size_t j = 0; j < dec.t.size(); ++j)
    for (const PolyGrid& g : dec.t[j])
      for (const auto& row : g)
        for (const Polynomial& f : row) CHECK(f.is_zero());
}

TEST_CASE("chi commutativity on Ext(k,k) over F2") {
  CIPtr A = F2();
  Resolution res = resolve(residue_field(A), 8);
  EisenbudAction act = action_on_ext(square_decompose(lift(res), res), res);
  // chi_j^{(i+2)} chi_l^{(i)} = chi_l^{(i+2)} chi_j^{(i)} exactly
  for (size_t i = 0; i + 4 < act.betti.size(); ++i) {
    DenseMat a = act.chi[0][i + 2].mul(act.chi[1][i]);
    DenseMat b = act.chi[1][i + 2].mul(act.chi[0][i]);
    CHECK(grids_equal(a, b));
  }
}

TEST_CASE("perturbed lift yields identical chi (lift independence)") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Polynomial y = Polynomial::variable(A->q(), 1);
  Resolution res = resolve(residue_field(A), 6);
  LiftedResolution base = lift(res);
  // Perturb every entry by a u-multiple of matching degree. u_j has degree
  // 2, entries have degree 1, so add u_j * (linear form) to degree-3 lifts:
  // entries of our differentials are linear; a valid perturbation must keep
  // A tensor lift = d, so add u_1 * 0 + ... only where degrees allow. Use
  // entry + (x^2) * c when the entry degree is >= 2; here instead perturb by
  // u-multiples on the lift of degree-1 entries is impossible homogeneously,
  // so perturb inhomogeneously: correctness of the action only needs
  // A tensor lift = d, which inhomogeneous u-multiples preserve.
  LiftedResolution pert = base;
  int salt = 1;
  for (PolyGrid& g : pert.dtilde)
    for (auto& row : g)
      for (Polynomial& f : row) {
        if (f.is_zero()) continue;
        f = f + (x * x).scaled(uint32_t(salt)) + (y * y).scaled(uint32_t(salt % 3));
        ++salt;
      }
  OperatorDecomposition d0 = square_decompose(base, res);
  OperatorDecomposition d1 = square_decompose(pert, res);
  EisenbudAction a0 = action_on_ext(d0, res);
  EisenbudAction a1 = action_on_ext(d1, res);
  REQUIRE(a0.chi.size() == a1.chi.size());
  for (size_t j = 0; j < a0.chi.size(); ++j) {
    REQUIRE(a0.chi[j].size() == a1.chi[j].size());
    for (size_t i = 0; i < a0.chi[j].size(); ++i)
      CHECK(grids_equal(a0.chi[j][i], a1.chi[j][i]));
  }
}

TEST_CASE("chain map of eta = 1 is the identity") {
  CIPtr A = F2();
  ModulePresentation k = residue_field(A);
  Resolution res = resolve(k, 5);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  HomElement h = chain_map_of(OperatorPolynomial{Polynomial::constant(A->t_ring(), 1)}, res, dec);
  CHECK(h.degree == 0);
  CHECK(h.grid[0][0] == Polynomial::constant(A->q(), 1));
  CHECK(is_valid_hom(h));
}

TEST_CASE("chain map of t1 on k over k[x]/(x^2) is a stable isomorphism") {
  CIPtr A = F1();
  ModulePresentation k = residue_field(A);
  Resolution res = resolve(k, 5);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  HomElement h = chain_map_of(
      OperatorPolynomial{Polynomial::variable(A->t_ring(), 0)}, res, dec);
  CHECK(is_valid_hom(h));
  // Omega^2 k = k here; the map is multiplication by chi_1 = 1, not stably zero
  CHECK(!is_stably_zero(h));
}

TEST_CASE("chain map of t2 on A/(x) over F2 is stably zero") {
  CIPtr A = F2();
  Polynomial x = Polynomial::variable(A->q(), 0);
  Resolution res = resolve(cyclic(A, {x}), 5);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  HomElement h = chain_map_of(
      OperatorPolynomial{Polynomial::variable(A->t_ring(), 1)}, res, dec);
  CHECK(is_valid_hom(h));
  CHECK(is_stably_zero(h));
}

TEST_CASE("chain map composition law up to stable equality") {
  CIPtr A = F2();
  ModulePresentation k = residue_field(A);
  Resolution res = resolve(k, 9);
  OperatorDecomposition dec = square_decompose(lift(res), res);
  RingPtr t = A->t_ring();
  Polynomial t1 = Polynomial::variable(t, 0);
  Polynomial t2 = Polynomial::variable(t, 1);
  // chain_map(t1*t2) vs composition chain_map(t1) o (chain_map(t2) shifted).
  HomElement prod = chain_map_of(OperatorPolynomial{t1 * t2}, res, dec);
  HomElement h1 = chain_map_of(OperatorPolynomial{t1}, res, dec);
  // t2 acting on Omega^2 k: build from the resolution of Omega^2 k.
  ModulePresentation o2 = syzygy_module(res, 2);
  Resolution res2 = resolve(o2, 5);
  OperatorDecomposition dec2 = square_decompose(lift(res2), res2);
  HomElement h2 = chain_map_of(OperatorPolynomial{t2}, res2, dec2);
  HomElement comp = hom_compose(h1, h2);
  CHECK(comp.degree == prod.degree);
  CHECK(is_valid_hom(prod));
  CHECK(is_valid_hom(comp));
  CHECK(stably_equal(comp, prod) == is_stably_zero(hom_sub(comp, prod)));
  CHECK(stably_equal(comp, prod));
}
