#include "cisupport/ideal.hpp"

#include <algorithm>
#include <map>

#include "cisupport/errors.hpp"
#include "cisupport/rng.hpp"

namespace cisupport {

int krull_dimension(const GroebnerBasis& I) {
  if (I.contains_one()) return -1;
  int n = I.ring->nvars();
  if (I.gens.empty()) return n;
  std::vector<Monomial> leads;
  for (const Polynomial& g : I.gens) leads.push_back(g.lead().mono);
  int best = 0;
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : leads) {
      bool inside = true;
      for (int v = 0; v < n; ++v)
        if (m.e[v] && !(mask >> v & 1)) {
          inside = false;
          break;
        }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool radical_membership(const Polynomial& g, const GroebnerBasis& I) {
  if (g.is_zero()) return true;
  if (g.is_constant()) return I.contains_one();
  if (I.contains_one()) return true;
  RingPtr ring = g.ring();
  std::vector<std::string> vars = ring->var_names();
  vars.push_back("_w");
  RingPtr ext = make_ring(ring->field().p(), vars);
  std::vector<int> idmap(ring->nvars());
  for (int i = 0; i < ring->nvars(); ++i) idmap[i] = i;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : I.gens) gens.push_back(f.map_vars(ext, idmap));
  Polynomial w = Polynomial::variable(ext, ring->nvars());
  gens.push_back(Polynomial::constant(ext, 1) - w * g.map_vars(ext, idmap));
  return groebner(gens).contains_one();
}

GroebnerBasis ideal_sum(const GroebnerBasis& I, const GroebnerBasis& J) {
  return ideal_sum(I, J.gens);
}

GroebnerBasis ideal_sum(const GroebnerBasis& I,
                        const std::vector<Polynomial>& more) {
  std::vector<Polynomial> gens = I.gens;
  for (const Polynomial& f : more) gens.push_back(f);
  if (gens.empty()) return I;
  return groebner(gens);
}

GroebnerBasis ideal_intersection(const GroebnerBasis& I,
                                 const GroebnerBasis& J) {
  if (I.gens.empty()) return I;
  if (J.gens.empty()) return J;
  if (I.contains_one()) return J;
  if (J.contains_one()) return I;
  RingPtr ring = I.ring;
  std::vector<FreeVector> gens;
  FreeVector diag(ring);
  diag.set_component(0, Polynomial::constant(ring, 1));
  diag.set_component(1, Polynomial::constant(ring, 1));
  gens.push_back(diag);
  for (const Polynomial& f : I.gens)
    gens.push_back(FreeVector::from_component(0, f));
  for (const Polynomial& g : J.gens)
    gens.push_back(FreeVector::from_component(1, g));
  std::vector<FreeVector> syz = module_syzygies(ring, 2, gens);
  std::vector<Polynomial> result;
  for (const FreeVector& s : syz) {
    Polynomial c0 = s.component(0);
    if (!c0.is_zero()) result.push_back(std::move(c0));
  }
  if (result.empty()) return GroebnerBasis{ring, {}, true};
  return groebner(result);
}

bool ideal_equal(const GroebnerBasis& I, const GroebnerBasis& J) {
  if (I.gens.size() != J.gens.size()) return false;
  for (size_t i = 0; i < I.gens.size(); ++i)
    if (I.gens[i] != J.gens[i]) return false;
  return true;
}

bool radical_equal(const GroebnerBasis& I, const GroebnerBasis& J) {
  for (const Polynomial& f : I.gens)
    if (!radical_membership(f, J)) return false;
  for (const Polynomial& g : J.gens)
    if (!radical_membership(g, I)) return false;
  return true;
}

Polynomial divide_exact(const Polynomial& h, const Polynomial& d) {
  if (d.is_zero()) throw Error(ErrorCode::Internal, "division by zero polynomial");
  const PrimeField& F = h.ring()->field();
  Polynomial rem = h;
  Polynomial quot = Polynomial::zero(h.ring());
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    const Term& ld = d.lead();
    if (!ld.mono.divides(lt.mono))
      throw Error(ErrorCode::Internal, "divide_exact: not divisible");
    Monomial q = lt.mono / ld.mono;
    uint32_t c = F.div(lt.coeff, ld.coeff);
    quot = quot + Polynomial::monomial(h.ring(), q, c);
    rem.sub_mul(d, q, c);
  }
  return quot;
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  GroebnerBasis If = groebner({f});
  GroebnerBasis Ig = groebner({g});
  GroebnerBasis inter = ideal_intersection(If, Ig);
  if (inter.gens.size() != 1)
    throw Error(ErrorCode::Internal, "intersection of principal ideals not principal");
  Polynomial lcm = inter.gens[0];
  return divide_exact(f * g, lcm).monic();
}

// ---------- univariate factorization over F_p ----------

namespace {

struct UniPoly {
  PrimeField F;
  std::vector<uint32_t> c;  // ascending, no trailing zeros

  explicit UniPoly(PrimeField f) : F(f) {}
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int deg() const { return int(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  uint32_t lead() const { return c.back(); }

  static UniPoly xpow(PrimeField F, int k, uint32_t a = 1) {
    UniPoly p(F);
    p.c.assign(size_t(k) + 1, 0);
    p.c[size_t(k)] = a % F.p();
    p.trim();
    return p;
  }

  UniPoly monic() const {
    UniPoly r = *this;
    if (r.is_zero()) return r;
    uint32_t inv = F.inv(r.lead());
    for (uint32_t& x : r.c) x = F.mul(x, inv);
    return r;
  }

  UniPoly mul(const UniPoly& b) const {
    if (is_zero() || b.is_zero()) return UniPoly(F);
    UniPoly r(F);
    r.c.assign(c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (!c[i]) continue;
      for (size_t j = 0; j < b.c.size(); ++j)
        if (b.c[j]) r.c[i + j] = F.add(r.c[i + j], F.mul(c[i], b.c[j]));
    }
    r.trim();
    return r;
  }

  UniPoly mod(const UniPoly& m) const {
    UniPoly r = *this;
    r.trim();
    while (!r.is_zero() && r.deg() >= m.deg()) {
      uint32_t q = F.div(r.lead(), m.lead());
      int shift = r.deg() - m.deg();
      for (size_t i = 0; i < m.c.size(); ++i)
        r.c[size_t(shift) + i] = F.sub(r.c[size_t(shift) + i], F.mul(q, m.c[i]));
      r.trim();
    }
    return r;
  }

  UniPoly divexact(const UniPoly& d) const {
    UniPoly r = *this, q(F);
    q.c.assign(size_t(std::max(0, deg() - d.deg())) + 1, 0);
    while (!r.is_zero() && r.deg() >= d.deg()) {
      uint32_t cc = F.div(r.lead(), d.lead());
      int shift = r.deg() - d.deg();
      q.c[size_t(shift)] = cc;
      for (size_t i = 0; i < d.c.size(); ++i)
        r.c[size_t(shift) + i] = F.sub(r.c[size_t(shift) + i], F.mul(cc, d.c[i]));
      r.trim();
    }
    q.trim();
    return q;
  }

  UniPoly derivative() const {
    UniPoly r(F);
    for (size_t i = 1; i < c.size(); ++i)
      r.c.push_back(F.mul(c[i], F.from_int(int64_t(i))));
    r.trim();
    return r;
  }
};

UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

UniPoly powmod(UniPoly base, uint64_t e, const UniPoly& m) {
  UniPoly r = UniPoly::xpow(base.F, 0);
  base = base.mod(m);
  while (e) {
    if (e & 1) r = r.mul(base).mod(m);
    base = base.mul(base).mod(m);
    e >>= 1;
  }
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus) for odd p; exhaustive trial
// division for p = 2 (degrees here are tiny).
void equal_degree_factor(const UniPoly& f, int d, Rng& rng,
                         std::vector<UniPoly>& out) {
  if (f.deg() == d) {
    out.push_back(f.monic());
    return;
  }
  const PrimeField& F = f.F;
  if (F.p() == 2) {
    // enumerate monic candidates of degree d
    for (uint64_t bits = 0; bits < (1ull << d); ++bits) {
      UniPoly cand(F);
      cand.c.assign(size_t(d) + 1, 0);
      cand.c[size_t(d)] = 1;
      for (int i = 0; i < d; ++i) cand.c[size_t(i)] = (bits >> i) & 1;
      if (f.mod(cand).is_zero()) {
        out.push_back(cand);
        equal_degree_factor(f.divexact(cand), d, rng, out);
        return;
      }
    }
    throw Error(ErrorCode::Internal, "equal-degree split failed (p=2)");
  }
  uint64_t q = F.p();
  uint64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  while (true) {
    UniPoly a(F);
    a.c.assign(size_t(f.deg()), 0);
    for (size_t i = 0; i < a.c.size(); ++i)
      a.c[i] = uint32_t(rng.below(F.p()));
    a.trim();
    if (a.is_zero() || a.deg() == 0) continue;
    UniPoly g = uni_gcd(a, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_factor(g, d, rng, out);
      equal_degree_factor(f.divexact(g), d, rng, out);
      return;
    }
    UniPoly b = powmod(a, (qd - 1) / 2, f);
    b.c.resize(std::max<size_t>(b.c.size(), 1), 0);
    if (b.c.empty()) b.c.push_back(0);
    b.c[0] = F.sub(b.c[0], 1);
    b.trim();
    g = uni_gcd(b, f);
    if (g.deg() > 0 && g.deg() < f.deg()) {
      equal_degree_factor(g, d, rng, out);
      equal_degree_factor(f.divexact(g), d, rng, out);
      return;
    }
  }
}

// Full factorization of a squarefree monic univariate polynomial.
std::vector<UniPoly> factor_squarefree(UniPoly f, Rng& rng) {
  std::vector<UniPoly> out;
  const PrimeField& F = f.F;
  UniPoly x = UniPoly::xpow(F, 1);
  UniPoly h = x;
  int d = 0;
  while (f.deg() > 0 && 2 * (d + 1) <= f.deg() + 1) {
    ++d;
    h = powmod(h, F.p(), f);
    UniPoly hx = h;
    // h - x
    hx.c.resize(std::max<size_t>(hx.c.size(), 2), 0);
    hx.c[1] = F.sub(hx.c[1], 1);
    hx.trim();
    UniPoly g = uni_gcd(hx, f);
    if (g.deg() > 0) {
      equal_degree_factor(g, d, rng, out);
      f = f.divexact(g);
      h = h.mod(f);
    }
    if (2 * (d + 1) > f.deg()) break;
  }
  if (f.deg() > 0) out.push_back(f.monic());
  return out;
}

// Factor any monic univariate polynomial (multiplicities tracked).
void factor_univariate(UniPoly f, Rng& rng,
                       std::vector<std::pair<UniPoly, int>>& out, int mult) {
  if (f.deg() <= 0) return;
  UniPoly fp = f.derivative();
  if (fp.is_zero()) {
    // f = g(x^p); over F_p this is g1(x)^p with the same coefficients.
    UniPoly g(f.F);
    for (size_t i = 0; i < f.c.size(); i += f.F.p()) g.c.push_back(f.c[i]);
    g.trim();
    factor_univariate(g, rng, out, mult * int(f.F.p()));
    return;
  }
  UniPoly rep = uni_gcd(f, fp);       // carries the repeated part
  UniPoly sqfree = f.divexact(rep);   // squarefree part
  for (UniPoly& irr : factor_squarefree(sqfree.monic(), rng)) {
    // multiplicity: divide f by irr as often as possible
    int m = 0;
    UniPoly g = f;
    while (g.deg() >= irr.deg() && g.mod(irr).is_zero()) {
      g = g.divexact(irr);
      ++m;
    }
    out.push_back({irr, m * mult});
  }
  // Factors entirely inside the repeated part with derivative issues are
  // handled by the mult computation above (we divide the original f).
}

}  // namespace

FactorResult factor_split(const Polynomial& input) {
  if (input.is_zero() || !input.is_homogeneous())
    throw Error(ErrorCode::Internal, "factor_split expects homogeneous nonzero input");
  RingPtr ring = input.ring();
  const PrimeField& F = ring->field();
  FactorResult res;
  res.unit = input.lead().coeff;
  Polynomial f = input.monic();

  // Monomial content.
  for (int v = 0; v < ring->nvars(); ++v) {
    int m = kMaxExponent + 1;
    for (const Term& t : f.terms()) m = std::min(m, int(t.mono.e[v]));
    if (m > 0 && m <= kMaxExponent) {
      res.factors.push_back({Polynomial::variable(ring, v), m});
      Monomial div;
      div.e[size_t(v)] = uint8_t(m);
      div.deg = uint16_t(m);
      f = divide_exact(f, Polynomial::monomial(ring, div, 1));
    }
  }
  if (f.is_constant()) return res;

  std::vector<int> support;
  for (int v = 0; v < ring->nvars(); ++v) {
    for (const Term& t : f.terms())
      if (t.mono.e[v]) {
        support.push_back(v);
        break;
      }
  }

  if (support.size() == 1) {
    // Homogeneous in one variable with zero content: impossible unless constant.
    res.factors.push_back({f, 1});
    res.exact = false;
    return res;
  }

  if (support.size() == 2) {
    int a = support[0], b = support[1];
    int d = f.total_degree();
    // Dehomogenize: g(s) = f(s, 1); content extraction guarantees deg g = d.
    UniPoly g(F);
    g.c.assign(size_t(d) + 1, 0);
    for (const Term& t : f.terms()) g.c[t.mono.e[a]] = t.coeff;
    g.trim();
    Rng rng(0x5eedf00dULL);
    std::vector<std::pair<UniPoly, int>> uf;
    factor_univariate(g.monic(), rng, uf, 1);
    for (auto& [h, m] : uf) {
      // Rehomogenize h to a form of degree deg(h) in (a, b).
      std::vector<Term> ts;
      for (int i = 0; i <= h.deg(); ++i) {
        if (!h.c[size_t(i)]) continue;
        Monomial mono;
        mono.e[size_t(a)] = uint8_t(i);
        mono.e[size_t(b)] = uint8_t(h.deg() - i);
        mono.deg = uint16_t(h.deg());
        ts.push_back({mono, h.c[size_t(i)]});
      }
      res.factors.push_back({Polynomial::from_terms(ring, ts).monic(), m});
    }
    return res;
  }

  // Three or more variables: best effort.
  // p-th power?
  bool all_div_p = true;
  for (const Term& t : f.terms())
    for (int v : support)
      if (t.mono.e[v] % F.p() != 0) all_div_p = false;
  if (all_div_p) {
    std::vector<Term> ts;
    for (const Term& t : f.terms()) {
      Monomial m;
      int deg = 0;
      for (int v = 0; v < ring->nvars(); ++v) {
        m.e[v] = uint8_t(t.mono.e[v] / F.p());
        deg += m.e[v];
      }
      m.deg = uint16_t(deg);
      ts.push_back({m, t.coeff});  // c^(1/p) = c in F_p
    }
    FactorResult inner = factor_split(Polynomial::from_terms(ring, ts));
    for (auto& [h, m] : inner.factors) res.factors.push_back({h, m * int(F.p())});
    res.exact = inner.exact;
    return res;
  }
  // Squarefree split via gcd with a partial derivative.
  for (int v : support) {
    Polynomial fp = f.derivative(v);
    if (fp.is_zero()) continue;
    Polynomial g = poly_gcd(f, fp);
    if (!g.is_constant()) {
      FactorResult left = factor_split(g);
      FactorResult right = factor_split(divide_exact(f, g));
      for (auto& pr : left.factors) {
        bool merged = false;
        for (auto& qr : right.factors)
          if (qr.first == pr.first) {
            qr.second += pr.second;
            merged = true;
            break;
          }
        if (!merged) right.factors.push_back(pr);
      }
      for (auto& pr : right.factors) res.factors.push_back(pr);
      res.exact = left.exact && right.exact;
      return res;
    }
  }
  // Squarefree, >= 3 variables: certify only linear forms.
  res.factors.push_back({f, 1});
  if (f.total_degree() > 1) res.exact = false;
  return res;
}

}  // namespace cisupport
