#include "cisupport/freemod.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

const Polynomial& FreeVector::component(int pos) const {
  static const Polynomial kZero;
  for (const auto& [p, f] : comps_)
    if (p == pos) return f;
  return kZero;
}

void FreeVector::set_component(int pos, Polynomial f) {
  auto it = std::lower_bound(
      comps_.begin(), comps_.end(), pos,
      [](const auto& a, int p) { return a.first < p; });
  if (it != comps_.end() && it->first == pos) {
    if (f.is_zero())
      comps_.erase(it);
    else
      it->second = std::move(f);
  } else if (!f.is_zero()) {
    comps_.insert(it, {pos, std::move(f)});
  }
}

size_t FreeVector::term_count() const {
  size_t n = 0;
  for (const auto& [p, f] : comps_) n += f.term_count();
  return n;
}

FreeVector::Lead FreeVector::lead() const {
  Lead best;
  const PolyRing& R = *ring_;
  for (const auto& [p, f] : comps_) {
    const Term& t = f.lead();
    if (best.pos < 0 || R.cmp(t.mono, best.mono) > 0) {
      best = {t.mono, p, t.coeff};
    }
    // ties go to the lower position, which we meet first
  }
  return best;
}

namespace {
FreeVector combine(const FreeVector& a, const FreeVector& b, bool neg_b) {
  FreeVector out(a.ring());
  size_t i = 0, j = 0;
  const auto& ac = a.components();
  const auto& bc = b.components();
  while (i < ac.size() && j < bc.size()) {
    if (ac[i].first < bc[j].first) {
      out.set_component(ac[i].first, ac[i].second);
      ++i;
    } else if (ac[i].first > bc[j].first) {
      out.set_component(bc[j].first,
                        neg_b ? -bc[j].second : bc[j].second);
      ++j;
    } else {
      Polynomial s = neg_b ? ac[i].second - bc[j].second
                           : ac[i].second + bc[j].second;
      if (!s.is_zero()) out.set_component(ac[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  for (; i < ac.size(); ++i) out.set_component(ac[i].first, ac[i].second);
  for (; j < bc.size(); ++j)
    out.set_component(bc[j].first, neg_b ? -bc[j].second : bc[j].second);
  return out;
}
}  // namespace

FreeVector FreeVector::operator+(const FreeVector& w) const {
  return combine(*this, w, false);
}
FreeVector FreeVector::operator-(const FreeVector& w) const {
  return combine(*this, w, true);
}
FreeVector FreeVector::operator-() const {
  FreeVector r(ring_);
  for (const auto& [p, f] : comps_) r.comps_.emplace_back(p, -f);
  return r;
}
FreeVector FreeVector::scaled(uint32_t c) const {
  FreeVector r(ring_);
  if (c % ring_->field().p() == 0) return r;
  for (const auto& [p, f] : comps_) r.comps_.emplace_back(p, f.scaled(c));
  return r;
}
FreeVector FreeVector::times_term(const Monomial& m, uint32_t c) const {
  FreeVector r(ring_);
  if (c % ring_->field().p() == 0) return r;
  for (const auto& [p, f] : comps_) r.comps_.emplace_back(p, f.times_term(m, c));
  return r;
}

void FreeVector::sub_mul(const FreeVector& w, const Monomial& m, uint32_t c) {
  *this = combine(*this, w.times_term(m, c), true);
}

void FreeVector::add_mul(const FreeVector& w, const Polynomial& q) {
  for (const Term& t : q.terms())
    *this = combine(*this, w.times_term(t.mono, t.coeff), false);
}

bool FreeVector::operator==(const FreeVector& w) const {
  if (comps_.size() != w.comps_.size()) return false;
  for (size_t i = 0; i < comps_.size(); ++i)
    if (comps_[i].first != w.comps_[i].first ||
        comps_[i].second != w.comps_[i].second)
      return false;
  return true;
}

int FreeVector::homogeneous_degree(const std::vector<int>& twists) const {
  int deg = kNoDegree;
  for (const auto& [p, f] : comps_) {
    if (!f.is_homogeneous())
      throw Error(ErrorCode::InhomogeneousEntry, "vector component not homogeneous");
    int d = f.total_degree() + twists[p];
    if (deg == kNoDegree)
      deg = d;
    else if (deg != d)
      throw Error(ErrorCode::InhomogeneousEntry, "vector components of mixed degree");
  }
  return deg;
}

bool FreeVector::is_homogeneous(const std::vector<int>& twists) const {
  try {
    homogeneous_degree(twists);
    return true;
  } catch (const Error&) {
    return false;
  }
}

}  // namespace cisupport
