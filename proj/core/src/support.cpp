#include "cisupport/support.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {

// All monomials of the given total degree in `nv` variables.
std::vector<Monomial> monomials_of_degree(int nv, int deg) {
  std::vector<Monomial> out;
  std::vector<int> e(size_t(nv), 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == nv - 1) {
      e[size_t(var)] = rem;
      Monomial m;
      for (int i = 0; i < nv; ++i) m.e[size_t(i)] = uint8_t(e[size_t(i)]);
      m.deg = uint16_t(deg);
      out.push_back(m);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[size_t(var)] = k;
      self(self, var + 1, rem - k);
    }
  };
  if (nv > 0 && deg >= 0) rec(rec, 0, deg);
  return out;
}

// Composite of chi maps along a monomial path starting at slice i.
DenseMat composite(const PrimeField& F, const std::vector<std::vector<DenseMat>>& maps,
                   const std::vector<int>& dims, const Monomial& mono, int i) {
  DenseMat acc = DenseMat::identity(F, size_t(dims[size_t(i)]));
  int level = i;
  for (int j = 0; j < kMaxVars; ++j) {
    for (int rep = 0; rep < mono.e[size_t(j)]; ++rep) {
      acc = maps[size_t(j)][size_t(level)].mul(acc);
      level += 2;
    }
  }
  return acc;
}

// Windowed annihilator of the slices with parity `par` in [lo, w], for
// t-degrees up to dmax. The degree cap is supplied by the caller and is the
// same for both parities, so the even/odd intersection never drops a freshly
// discovered generator because one parity lagged a window behind.
GroebnerBasis parity_ann(const RingPtr& t_ring, const std::vector<int>& dims,
                         const std::vector<std::vector<DenseMat>>& maps, int w,
                         int par, int lo, int dmax) {
  const PrimeField& F = t_ring->field();
  int nv = t_ring->nvars();
  int start = lo + ((par - lo) % 2 + 2) % 2;  // first index >= lo with parity
  bool all_zero = true;
  for (int i = start; i <= w; i += 2)
    if (dims[size_t(i)] != 0) all_zero = false;
  if (all_zero)
    return groebner({Polynomial::constant(t_ring, 1)});  // zero module

  std::vector<Polynomial> gens;
  for (int D = 1; D <= dmax && 2 * D + start <= w; ++D) {
    std::vector<Monomial> monos = monomials_of_degree(nv, D);
    // Conditions: for every nonzero slice i of this parity with i + 2D <= w,
    // the composite action must vanish. Slices with zero target contribute
    // vacuous conditions; degrees with no nonzero source carry no evidence
    // and are skipped outright.
    int rows = 0;
    bool have_source = false;
    std::vector<std::pair<int, int>> blocks;  // (slice, row offset)
    for (int i = start; i + 2 * D <= w; i += 2) {
      if (dims[size_t(i)] == 0) continue;
      have_source = true;
      blocks.push_back({i, rows});
      rows += dims[size_t(i + 2 * D)] * dims[size_t(i)];
    }
    if (!have_source) continue;
    if (rows == 0) {
      // Every composite lands in a zero slice: the whole degree annihilates.
      for (const Monomial& m : monos)
        gens.push_back(Polynomial::monomial(t_ring, m, 1));
      continue;
    }
    DenseMat sys(F, size_t(rows), monos.size());
    for (size_t m = 0; m < monos.size(); ++m) {
      for (auto [i, off] : blocks) {
        DenseMat comp = composite(F, maps, dims, monos[m], i);
        int idx = 0;
        for (size_t r = 0; r < comp.rows(); ++r)
          for (size_t cc = 0; cc < comp.cols(); ++cc, ++idx)
            sys.set(size_t(off + idx), m, comp.at(r, cc));
      }
    }
    for (const std::vector<uint32_t>& x : sys.kernel_basis()) {
      std::vector<Term> ts;
      for (size_t m = 0; m < monos.size(); ++m)
        if (x[m]) ts.push_back({monos[m], x[m]});
      gens.push_back(Polynomial::from_terms(t_ring, ts));
    }
  }
  if (gens.empty()) return GroebnerBasis{t_ring, {}, true};
  return groebner(gens);
}

}  // namespace

SupportIdealResult ann_of_window(const RingPtr& t_ring,
                                 const std::vector<int>& dims,
                                 const std::vector<std::vector<DenseMat>>& maps,
                                 int codim) {
  int top = int(dims.size()) - 1;
  SupportIdealResult out;
  // Margin: every admitted t-degree must be constrained by a stretch of
  // slices, or window-edge degrees flood the ideal with junk generators.
  int margin = 2 * (codim - 1);
  GroebnerBasis prev{t_ring, {}, true};
  bool have_prev = false;
  int stable_run = 0;
  int last_dmax = 0;
  for (int w = std::min(2, top); w <= top; ++w) {
    int dmax = (w - margin - 1) / 2;
    if (dmax < 1) continue;
    GroebnerBasis even = parity_ann(t_ring, dims, maps, w, 0, 0, dmax);
    GroebnerBasis odd = parity_ann(t_ring, dims, maps, w, 1, 0, dmax);
    GroebnerBasis ann = ideal_intersection(even, odd);
    // The run advances only when the window admitted a new degree and the
    // ideal still did not move; equal ideals across windows that could not
    // have revealed anything new are not evidence.
    if (have_prev && dmax > last_dmax) {
      if (ideal_equal(ann, prev))
        ++stable_run;
      else
        stable_run = 0;
      last_dmax = dmax;
    } else if (!have_prev) {
      last_dmax = dmax;
      have_prev = true;
    }
    prev = ann;
    out.ideal.gb = ann;
    out.window_used = w;
    if (stable_run >= codim && w >= 2 * codim) {
      out.stabilized = true;
      return out;
    }
  }
  out.stabilized = false;
  return out;
}

SupportIdealResult support_ideal(const EisenbudAction& act, const CIRing& A) {
  return ann_of_window(A.t_ring(), act.betti, act.chi, A.codim());
}

SupportIdealResult pair_support_ideal(const ExtWindow& ext, const CIRing& A) {
  return ann_of_window(A.t_ring(), ext.dims, ext.maps, A.codim());
}

GroebnerBasis tail_ann(const RingPtr& t_ring, const std::vector<int>& dims,
                       const std::vector<std::vector<DenseMat>>& maps,
                       int tail_lo) {
  int top = int(dims.size()) - 1;
  int margin = 2 * (t_ring->nvars() - 1);
  int dmax = (top - tail_lo - margin - 1) / 2;
  if (dmax < 1) dmax = 1;
  GroebnerBasis even = parity_ann(t_ring, dims, maps, top, 0, tail_lo, dmax);
  GroebnerBasis odd = parity_ann(t_ring, dims, maps, top, 1, tail_lo, dmax);
  return ideal_intersection(even, odd);
}

GroebnerBasis slice_ann(const RingPtr& t_ring, const std::vector<int>& dims,
                        const std::vector<std::vector<DenseMat>>& maps, int n) {
  const PrimeField& F = t_ring->field();
  int nv = t_ring->nvars();
  int w = int(dims.size()) - 1;
  if (n > w || dims[size_t(n)] == 0)
    return groebner({Polynomial::constant(t_ring, 1)});
  std::vector<Polynomial> gens;
  int margin = 2 * (nv - 1);
  for (int D = 1; n + 2 * D <= w - margin; ++D) {
    std::vector<Monomial> monos = monomials_of_degree(nv, D);
    // eta kills the submodule generated by slice n iff eta * mu kills the
    // slice itself, for every extension monomial mu reachable in the window.
    int rows = 0;
    std::vector<std::pair<Monomial, int>> blocks;
    for (int kk = 0; n + 2 * (D + kk) <= w; ++kk) {
      for (const Monomial& mu : monomials_of_degree(nv, kk)) {
        blocks.push_back({mu, rows});
        rows += dims[size_t(n + 2 * (D + kk))] * dims[size_t(n)];
      }
    }
    if (rows == 0) {
      for (const Monomial& m : monos)
        gens.push_back(Polynomial::monomial(t_ring, m, 1));
      continue;
    }
    DenseMat sys(F, size_t(rows), monos.size());
    for (size_t m = 0; m < monos.size(); ++m) {
      for (auto& [mu, off] : blocks) {
        DenseMat comp = composite(F, maps, dims, monos[m] * mu, n);
        int idx = 0;
        for (size_t r = 0; r < comp.rows(); ++r)
          for (size_t cc = 0; cc < comp.cols(); ++cc, ++idx)
            sys.set(size_t(off + idx), m, comp.at(r, cc));
      }
    }
    for (const std::vector<uint32_t>& x : sys.kernel_basis()) {
      std::vector<Term> ts;
      for (size_t m = 0; m < monos.size(); ++m)
        if (x[m]) ts.push_back({monos[m], x[m]});
      gens.push_back(Polynomial::from_terms(t_ring, ts));
    }
  }
  if (gens.empty()) return GroebnerBasis{t_ring, {}, true};
  return groebner(gens);
}


bool contains(const AlgebraicSet& X, const TIdeal& J) {
  // Projectively empty V(J) sits inside every X, including the empty set;
  // only past that point does the Nullstellensatz containment test apply.
  if (variety_empty_projective(J)) return true;
  for (const Polynomial& g : X.ideal.gb.gens)
    if (!radical_membership(g, J.gb)) return false;
  return true;
}

bool variety_empty_projective(const TIdeal& J) {
  RingPtr t = J.gb.ring;
  for (int v = 0; v < t->nvars(); ++v)
    if (!radical_membership(Polynomial::variable(t, v), J.gb)) return false;
  return true;
}

TIdeal variety_union(const TIdeal& a, const TIdeal& b) {
  return TIdeal{ideal_intersection(a.gb, b.gb)};
}

TIdeal variety_intersection(const TIdeal& a, const TIdeal& b) {
  return TIdeal{ideal_sum(a.gb, b.gb)};
}

namespace {
// Recursively split J along factorizations of its generators.
void split_components(const TIdeal& J, std::vector<TIdeal>& out, bool& exact,
                      int depth) {
  if (depth > 16) {
    out.push_back(J);
    exact = false;
    return;
  }
  if (J.gb.contains_one()) return;  // empty variety contributes nothing
  for (const Polynomial& g : J.gb.gens) {
    FactorResult fr = factor_split(g);
    if (!fr.exact) exact = false;
    if (fr.factors.size() > 1 ||
        (fr.factors.size() == 1 && fr.factors[0].second > 1) ||
        (fr.factors.size() == 1 && fr.factors[0].first != g.monic())) {
      for (const auto& [f, mult] : fr.factors) {
        TIdeal sub{ideal_sum(J.gb, {f})};
        split_components(sub, out, exact, depth + 1);
      }
      return;
    }
  }
  // No generator factors: candidate component.
  out.push_back(J);
  // Certified irreducible when all generators are linear, or T is binary
  // (complete factorization theory), or the ideal is principal with one
  // certified-irreducible generator.
  bool certified = J.gb.ring->nvars() <= 2;
  if (!certified) {
    certified = true;
    for (const Polynomial& g : J.gb.gens)
      if (g.total_degree() > 1) certified = false;
  }
  if (!certified && J.gb.gens.size() == 1) {
    FactorResult fr = factor_split(J.gb.gens[0]);
    certified = fr.exact && fr.factors.size() == 1 && fr.factors[0].second == 1;
  }
  if (!certified) exact = false;
}
}  // namespace

TopvResult topv(const TIdeal& J) {
  TopvResult out;
  if (variety_empty_projective(J)) {
    out.ideal = J;
    return out;
  }
  std::vector<TIdeal> comps;
  out.exact = true;
  split_components(J, comps, out.exact, 0);
  // Deduplicate by mutual radical containment, keeping the first.
  std::vector<TIdeal> uniq;
  for (const TIdeal& c : comps) {
    bool dup = false;
    for (const TIdeal& u : uniq)
      if (radical_equal(c.gb, u.gb)) dup = true;
    if (!dup) uniq.push_back(c);
  }
  // Drop components contained in another component (not maximal).
  std::vector<TIdeal> maximal;
  for (size_t i = 0; i < uniq.size(); ++i) {
    bool inside_other = false;
    for (size_t j = 0; j < uniq.size(); ++j) {
      if (i == j) continue;
      // V(uniq[i]) subseteq V(uniq[j]) iff gens of uniq[j] lie in rad(uniq[i]).
      bool contained = true;
      for (const Polynomial& g : uniq[j].gb.gens)
        if (!radical_membership(g, uniq[i].gb)) contained = false;
      bool equal = radical_equal(uniq[i].gb, uniq[j].gb);
      if (contained && !equal) inside_other = true;
    }
    if (!inside_other) maximal.push_back(uniq[i]);
  }
  int dim = -1;
  for (const TIdeal& c : maximal) dim = std::max(dim, c.dim());
  bool first = true;
  TIdeal acc;
  for (const TIdeal& c : maximal) {
    if (c.dim() != dim) continue;
    if (first) {
      acc = c;
      first = false;
    } else {
      acc = variety_union(acc, c);
    }
  }
  if (first) {
    out.ideal = J;  // nothing survived; degenerate, return input
    out.exact = false;
  } else {
    out.ideal = acc;
  }
  return out;
}

ComplexityReport complexity(const std::vector<int>& betti,
                            const SupportIdealResult& support, int codim,
                            int tail_lo, int tail_hi) {
  int via_fit = growth_complexity(betti, tail_lo, tail_hi, codim);
  ComplexityReport rep;
  rep.window = tail_hi;
  if (!support.stabilized) {
    // The primary route is provisional; fall back to the growth fit alone.
    if (via_fit < 0)
      throw Error(ErrorCode::MethodMismatch,
                  "support not stabilized and no polynomial growth fits the "
                  "betti tail; extend the window");
    rep.cx = via_fit;
    rep.method = ComplexityReport::Method::ViaGrowthFit;
    return rep;
  }
  int via_dim = std::max(0, support.ideal.dim());
  if (via_fit < 0 || via_fit != via_dim)
    throw Error(ErrorCode::MethodMismatch,
                "complexity estimates disagree (support dim " +
                    std::to_string(via_dim) + ", growth fit " +
                    std::to_string(via_fit) + "); extend the window");
  rep.cx = via_dim;
  rep.method = ComplexityReport::Method::ViaSupportDimension;
  return rep;
}

bool QuotientSupport::empty() const {
  AlgebraicSet X{set_ideal, ""};
  return contains(X, module_ideal);
}

QuotientSupport quotient_support_X(const SupportIdealResult& J,
                                   const AlgebraicSet& X) {
  if (!J.stabilized)
    throw Error(ErrorCode::NotStabilized, "support ideal not stabilized");
  return QuotientSupport{J.ideal, X.ideal};
}

TopvResult quotient_support_i(const SupportIdealResult& J, int cx, int i) {
  if (!J.stabilized)
    throw Error(ErrorCode::NotStabilized, "support ideal not stabilized");
  if (cx > i) return topv(J.ideal);
  TopvResult out;
  out.ideal = TIdeal{groebner({Polynomial::constant(J.ideal.gb.ring, 1)})};
  return out;
}

bool empty_intersection_mod_X(const TIdeal& JM, const TIdeal& JN,
                              const AlgebraicSet& X) {
  TIdeal sum = variety_intersection(JM, JN);
  // V(sum) subseteq X, including the empty case.
  if (variety_empty_projective(sum)) return true;
  return contains(X, sum);
}

TIdeal point_ideal(const RingPtr& t_ring, const RationalPoint& a) {
  int c = t_ring->nvars();
  if (int(a.coords.size()) != c)
    throw Error(ErrorCode::Internal, "point arity mismatch");
  const PrimeField& F = t_ring->field();
  int pivot = -1;
  for (int i = 0; i < c; ++i)
    if (a.coords[size_t(i)] % F.p() != 0) {
      pivot = i;
      break;
    }
  if (pivot < 0) throw Error(ErrorCode::Internal, "point must be nonzero");
  // Forms a_pivot * t_i - a_i * t_pivot for i != pivot.
  std::vector<Polynomial> gens;
  for (int i = 0; i < c; ++i) {
    if (i == pivot) continue;
    Polynomial f =
        Polynomial::variable(t_ring, i).scaled(a.coords[size_t(pivot)]) -
        Polynomial::variable(t_ring, pivot).scaled(a.coords[size_t(i)]);
    gens.push_back(f);
  }
  if (gens.empty())  // c == 1: the unique point of P^0 has empty ideal
    return TIdeal{GroebnerBasis{t_ring, {}, true}};
  return TIdeal{groebner(gens)};
}

}  // namespace cisupport
