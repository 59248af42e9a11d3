#include "cisupport/polynomial.hpp"

#include <algorithm>

namespace cisupport {

Polynomial Polynomial::constant(RingPtr ring, int64_t c) {
  Polynomial f(ring);
  uint32_t v = ring->field().from_int(c);
  if (v != 0) f.terms_.push_back({Monomial{}, v});
  return f;
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Polynomial f(ring);
  f.terms_.push_back({Monomial::variable(i), 1});
  return f;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, uint32_t c) {
  Polynomial f(ring);
  c %= ring->field().p();
  if (c != 0) f.terms_.push_back({m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return R.cmp(a.mono, b.mono) > 0;
  });
  Polynomial f(ring);
  for (const Term& t : terms) {
    uint32_t c = t.coeff % R.field().p();
    if (c == 0) continue;
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      uint32_t s = R.field().add(f.terms_.back().coeff, c);
      if (s == 0)
        f.terms_.pop_back();
      else
        f.terms_.back().coeff = s;
    } else {
      f.terms_.push_back({t.mono, c});
    }
  }
  return f;
}

namespace {
// Merge two descending term lists with coefficient combiner cb(x) = sign*x.
std::vector<Term> merge(const PolyRing& R, const std::vector<Term>& a,
                        const std::vector<Term>& b, bool negate_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const PrimeField& F = R.field();
  while (i < a.size() && j < b.size()) {
    int c = R.cmp(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      uint32_t v = negate_b ? F.neg(b[j].coeff) : b[j].coeff;
      out.push_back({b[j].mono, v});
      ++j;
    } else {
      uint32_t v = negate_b ? F.sub(a[i].coeff, b[j].coeff)
                            : F.add(a[i].coeff, b[j].coeff);
      if (v != 0) out.push_back({a[i].mono, v});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    uint32_t v = negate_b ? F.neg(b[j].coeff) : b[j].coeff;
    out.push_back({b[j].mono, v});
  }
  return out;
}
}  // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, false);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  Polynomial r(ring_);
  r.terms_ = merge(*ring_, terms_, g.terms_, true);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::scaled(uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.p();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (Term& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, uint32_t c) const {
  const PrimeField& F = ring_->field();
  c %= F.p();
  Polynomial r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_)
    r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;  // multiplying by a fixed monomial preserves the order
}

void Polynomial::sub_mul(const Polynomial& g, const Monomial& m, uint32_t c) {
  Polynomial prod = g.times_term(m, c);
  terms_ = merge(*ring_, terms_, prod.terms_, true);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  Polynomial acc(ring_);
  for (const Term& t : g.terms_) {
    Polynomial part = times_term(t.mono, t.coeff);
    acc.terms_ = merge(*ring_, acc.terms_, part.terms_, false);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead().coeff));
}

Polynomial Polynomial::derivative(int var) const {
  Polynomial r(ring_);
  const PrimeField& F = ring_->field();
  std::vector<Term> ts;
  for (const Term& t : terms_) {
    if (t.mono.e[var] == 0) continue;
    uint32_t c = F.mul(t.coeff, F.from_int(t.mono.e[var]));
    if (c == 0) continue;  // characteristic divides the exponent
    Monomial m = t.mono;
    m.e[var] -= 1;
    m.deg -= 1;
    ts.push_back({m, c});
  }
  return from_terms(ring_, std::move(ts));
}

uint32_t Polynomial::evaluate(const std::vector<uint32_t>& point) const {
  const PrimeField& F = ring_->field();
  uint32_t acc = 0;
  for (const Term& t : terms_) {
    uint32_t v = t.coeff;
    for (int i = 0; i < ring_->nvars(); ++i)
      if (t.mono.e[i]) v = F.mul(v, F.pow(point[i], t.mono.e[i]));
    acc = F.add(acc, v);
  }
  return acc;
}

uint32_t Polynomial::coefficient_of(const Monomial& m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Polynomial Polynomial::map_vars(const RingPtr& target,
                                const std::vector<int>& map) const {
  std::vector<Term> ts;
  ts.reserve(terms_.size());
  for (const Term& t : terms_) {
    Monomial m;
    int deg = 0;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono.e[i]) continue;
      m.e[map[i]] = uint8_t(m.e[map[i]] + t.mono.e[i]);
      deg += t.mono.e[i];
    }
    m.deg = uint16_t(deg);
    ts.push_back({m, t.coeff});
  }
  return from_terms(target, std::move(ts));
}

bool Polynomial::operator==(const Polynomial& g) const {
  if (terms_.size() != g.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].coeff != g.terms_[i].coeff ||
        terms_[i].mono != g.terms_[i].mono)
      return false;
  return true;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out += " + ";
    first = false;
    bool has_mono = !t.mono.is_one();
    if (t.coeff != 1 || !has_mono) out += std::to_string(t.coeff);
    bool need_star = t.coeff != 1 || !has_mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.mono.e[i]) continue;
      if (need_star) out += "*";
      need_star = true;
      out += ring_->var_name(i);
      if (t.mono.e[i] > 1) out += "^" + std::to_string(int(t.mono.e[i]));
    }
  }
  return out;
}

}  // namespace cisupport
