#include "cisupport/groebner.hpp"

#include <algorithm>
#include <atomic>

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {
std::atomic<size_t> g_term_budget{0};
}

void set_term_budget(size_t terms) { g_term_budget.store(terms); }
size_t term_budget() { return g_term_budget.load(); }

GroebnerEngine::GroebnerEngine(RingPtr ring, int rank, bool track)
    : ring_(std::move(ring)), rank_(rank), track_(track),
      by_pos_(size_t(rank)) {}

void GroebnerEngine::add_generator(FreeVector v) {
  size_t idx = n_gens_++;
  if (v.is_zero()) {
    // A zero generator contributes the unit syzygy on its own slot.
    if (track_) syz_.push_back(FreeVector::unit(ring_, int(idx)));
    return;
  }
  FreeVector rep(ring_);
  if (track_) rep = FreeVector::unit(ring_, int(idx));
  push_basis(std::move(v), std::move(rep));
}

void GroebnerEngine::push_basis(FreeVector v, FreeVector rep) {
  int idx = int(basis_.size());
  leads_.push_back(v.lead());
  basis_.push_back(std::move(v));
  reps_.push_back(std::move(rep));
  by_pos_[size_t(leads_[size_t(idx)].pos)].push_back(idx);
  make_pairs(idx);
}

void GroebnerEngine::make_pairs(int idx) {
  const FreeVector::Lead& ln = leads_[size_t(idx)];
  for (int i : by_pos_[size_t(ln.pos)]) {
    if (i == idx) continue;
    queue_.push_back({i, idx, Monomial::lcm(leads_[size_t(i)].mono, ln.mono)});
  }
  // Lowest lcm degree first; ties broken by indices for determinism.
  std::sort(queue_.begin(), queue_.end(), [](const Pair& a, const Pair& b) {
    if (a.lcm.deg != b.lcm.deg) return a.lcm.deg > b.lcm.deg;
    if (a.j != b.j) return a.j > b.j;
    return a.i > b.i;
  });  // descending: we pop from the back
}

bool GroebnerEngine::chain_skip(const Pair& p) const {
  // Buchberger's chain criterion (safe variant: both subsumed pairs already
  // processed). Only applied when tracking is off; Schreyer extraction wants
  // every pair's standard representation.
  for (int k : by_pos_[size_t(leads_[size_t(p.i)].pos)]) {
    if (k == p.i || k == p.j) continue;
    if (!leads_[size_t(k)].mono.divides(p.lcm)) continue;
    auto did = [&](int a, int b) {
      if (a > b) std::swap(a, b);
      return done_.count({a, b}) > 0;
    };
    if (did(p.i, k) && did(p.j, k)) return true;
  }
  return false;
}

size_t GroebnerEngine::stored_terms() const {
  size_t n = 0;
  for (const FreeVector& v : basis_) n += v.term_count();
  return n;
}

FreeVector GroebnerEngine::reduce(FreeVector v, FreeVector* rep) const {
  const PrimeField& F = ring_->field();
  FreeVector remainder(ring_);
  while (!v.is_zero()) {
    FreeVector::Lead lt = v.lead();
    int reducer = -1;
    for (int i : by_pos_[size_t(lt.pos)]) {
      if (leads_[size_t(i)].mono.divides(lt.mono)) {
        reducer = i;
        break;
      }
    }
    if (reducer < 0) {
      // Lead survives; move it into the remainder and keep going.
      Polynomial comp = v.component(lt.pos);
      Polynomial head = Polynomial::monomial(ring_, lt.mono, lt.coeff);
      remainder = remainder + FreeVector::from_component(lt.pos, head);
      comp = comp - head;
      v.set_component(lt.pos, std::move(comp));
      continue;
    }
    const FreeVector::Lead& lg = leads_[size_t(reducer)];
    Monomial q = lt.mono / lg.mono;
    uint32_t c = F.div(lt.coeff, lg.coeff);
    v.sub_mul(basis_[size_t(reducer)], q, c);
    // Invariant: v_original + rep·gens = v_current (+ remainder so far).
    if (rep && track_) rep->sub_mul(reps_[size_t(reducer)], q, c);
  }
  return remainder;
}

void GroebnerEngine::saturate() {
  const PrimeField& F = ring_->field();
  while (!queue_.empty()) {
    Pair p = queue_.back();
    queue_.pop_back();
    if (!track_ && chain_skip(p)) continue;
    // Product criterion: valid for ideals (rank one, both leads in slot 0
    // with coprime monomials); the Koszul syzygy it encodes is not needed
    // when tracking is off.
    const FreeVector::Lead& li = leads_[size_t(p.i)];
    const FreeVector::Lead& lj = leads_[size_t(p.j)];
    if (!track_ && rank_ == 1 && basis_[size_t(p.i)].components().size() == 1 &&
        li.mono.coprime_with(lj.mono)) {
      done_.insert({std::min(p.i, p.j), std::max(p.i, p.j)});
      continue;
    }

    Monomial ui = p.lcm / li.mono;
    Monomial uj = p.lcm / lj.mono;
    uint32_t ci = F.inv(li.coeff);
    uint32_t cj = F.inv(lj.coeff);
    FreeVector s = basis_[size_t(p.i)].times_term(ui, ci);
    s.sub_mul(basis_[size_t(p.j)], uj, cj);

    FreeVector srep(ring_);
    if (track_) {
      srep = reps_[size_t(p.i)].times_term(ui, ci);
      srep.sub_mul(reps_[size_t(p.j)], uj, cj);
    }
    FreeVector r = reduce(std::move(s), track_ ? &srep : nullptr);
    done_.insert({std::min(p.i, p.j), std::max(p.i, p.j)});

    if (r.is_zero()) {
      if (track_) {
        // srep now expresses 0 in the original generators: a syzygy.
        if (!srep.is_zero()) syz_.push_back(std::move(srep));
      }
      continue;
    }
    uint32_t lc = r.lead().coeff;
    FreeVector monic = r.scaled(F.inv(lc));
    FreeVector mrep(ring_);
    if (track_) {
      mrep = srep.scaled(F.inv(lc));
      // The relation srep - lc*mrep = 0 is trivial; the new element carries
      // its own representation and future pairs record the real syzygies.
    }
    push_basis(std::move(monic), std::move(mrep));

    size_t budget = term_budget();
    if (budget && stored_terms() > budget)
      throw Error(ErrorCode::BudgetExceeded, "Groebner working set exceeded term budget");
  }
}

std::optional<std::vector<Polynomial>> GroebnerEngine::express(
    const FreeVector& v) const {
  if (!track_) throw Error(ErrorCode::Internal, "express requires tracking");
  FreeVector rep(ring_);
  FreeVector r = reduce(v, &rep);
  if (!r.is_zero()) return std::nullopt;
  // v - rep·gens = 0, with rep accumulated negatively during reduction.
  std::vector<Polynomial> out(n_gens_, Polynomial::zero(ring_));
  for (const auto& [pos, f] : rep.components()) out[size_t(pos)] = -f;
  return out;
}

std::vector<FreeVector> GroebnerEngine::syzygies() const {
  if (!track_) throw Error(ErrorCode::Internal, "syzygies require tracking");
  return syz_;
}

std::vector<FreeVector> GroebnerEngine::reduced_basis() const {
  // Minimalize: drop elements whose lead is divisible by another kept lead.
  std::vector<int> keep;
  for (int i = 0; i < int(basis_.size()); ++i) {
    bool redundant = false;
    for (int j = 0; j < int(basis_.size()); ++j) {
      if (i == j) continue;
      if (leads_[size_t(j)].pos != leads_[size_t(i)].pos) continue;
      if (!leads_[size_t(j)].mono.divides(leads_[size_t(i)].mono)) continue;
      if (leads_[size_t(j)].mono == leads_[size_t(i)].mono && j > i) continue;
      redundant = true;
      break;
    }
    if (!redundant) keep.push_back(i);
  }
  // Tail-reduce each kept element against the others.
  std::vector<FreeVector> out;
  for (size_t a = 0; a < keep.size(); ++a) {
    GroebnerEngine sub(ring_, rank_, false);
    for (size_t b = 0; b < keep.size(); ++b)
      if (b != a) sub.add_generator(basis_[size_t(keep[b])]);
    // Reduce only the tail: subtract the lead first, reduce, and add it back.
    FreeVector g = basis_[size_t(keep[a])].scaled(
        ring_->field().inv(basis_[size_t(keep[a])].lead().coeff));
    FreeVector::Lead lt = g.lead();
    FreeVector head = FreeVector::from_component(
        lt.pos, Polynomial::monomial(ring_, lt.mono, lt.coeff));
    FreeVector tail = g - head;
    tail = sub.reduce(std::move(tail));
    out.push_back(head + tail);
  }
  std::sort(out.begin(), out.end(), [&](const FreeVector& x, const FreeVector& y) {
    FreeVector::Lead lx = x.lead(), ly = y.lead();
    if (lx.pos != ly.pos) return lx.pos < ly.pos;
    return ring_->cmp(lx.mono, ly.mono) > 0;
  });
  return out;
}

// ---- ring-level wrappers ----

namespace {
FreeVector wrap(const Polynomial& f) { return FreeVector::from_component(0, f); }

Polynomial unwrap(const FreeVector& v) {
  if (v.is_zero()) return Polynomial::zero(v.ring());
  return v.component(0);
}
}  // namespace

GroebnerBasis groebner(const std::vector<Polynomial>& gens) {
  if (gens.empty()) throw Error(ErrorCode::Internal, "groebner: empty input");
  RingPtr ring = gens.front().ring();
  GroebnerEngine eng(ring, 1, false);
  for (const Polynomial& g : gens) {
    if (!g.ring()->same_ring(*ring))
      throw Error(ErrorCode::Internal, "groebner: mixed rings");
    eng.add_generator(wrap(g));
  }
  eng.saturate();
  GroebnerBasis out;
  out.ring = ring;
  for (const FreeVector& v : eng.reduced_basis()) out.gens.push_back(unwrap(v));
  std::reverse(out.gens.begin(), out.gens.end());  // ascending lead order
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  GroebnerEngine eng(f.ring(), 1, false);
  for (const Polynomial& g : G.gens) eng.add_generator(wrap(g));
  return unwrap(eng.reduce(wrap(f)));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const PrimeField& F = f.ring()->field();
  Monomial L = Monomial::lcm(f.lead().mono, g.lead().mono);
  Polynomial a = f.times_term(L / f.lead().mono, F.inv(f.lead().coeff));
  Polynomial b = g.times_term(L / g.lead().mono, F.inv(g.lead().coeff));
  return a - b;
}

std::optional<std::vector<Polynomial>> membership_with_coefficients(
    const Polynomial& f, const std::vector<Polynomial>& gens) {
  RingPtr ring = f.ring();
  GroebnerEngine eng(ring, 1, true);
  for (const Polynomial& g : gens) eng.add_generator(wrap(g));
  eng.saturate();
  auto coeffs = eng.express(wrap(f));
  if (!coeffs) return std::nullopt;
  return coeffs;
}

std::vector<std::vector<Polynomial>> syzygies(
    const std::vector<Polynomial>& gens) {
  if (gens.empty()) return {};
  RingPtr ring = gens.front().ring();
  std::vector<FreeVector> wrapped;
  for (const Polynomial& g : gens) wrapped.push_back(wrap(g));
  std::vector<FreeVector> syz = module_syzygies(ring, 1, wrapped);
  std::vector<std::vector<Polynomial>> out;
  for (const FreeVector& s : syz) {
    std::vector<Polynomial> row(gens.size(), Polynomial::zero(ring));
    for (const auto& [pos, c] : s.components()) row[size_t(pos)] = c;
    out.push_back(std::move(row));
  }
  return out;
}

ModuleGB module_groebner(RingPtr ring, int rank,
                         const std::vector<FreeVector>& gens) {
  GroebnerEngine eng(ring, rank, false);
  for (const FreeVector& g : gens) eng.add_generator(g);
  eng.saturate();
  return ModuleGB{ring, rank, eng.reduced_basis()};
}

FreeVector module_normal_form(FreeVector v, const ModuleGB& G) {
  GroebnerEngine eng(G.ring, G.rank, false);
  for (const FreeVector& g : G.gens) eng.add_generator(g);
  return eng.reduce(std::move(v));
}

std::vector<FreeVector> module_syzygies(RingPtr ring, int rank,
                                        const std::vector<FreeVector>& gens) {
  GroebnerEngine eng(ring, rank, true);
  for (const FreeVector& g : gens) eng.add_generator(g);
  eng.saturate();
  return eng.syzygies();
}

}  // namespace cisupport
