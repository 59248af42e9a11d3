#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "cisupport/polynomial.hpp"

namespace cisupport {

// Element of a free module R^rank, sparse by position (components sorted by
// position index, zero components absent). Module monomials are ordered
// term-over-position: ring order on the monomial first, lower position wins
// ties. That order is what Buchberger and the division loops use.
class FreeVector {
 public:
  FreeVector() = default;
  explicit FreeVector(RingPtr ring) : ring_(std::move(ring)) {}

  static FreeVector unit(RingPtr ring, int pos) {
    FreeVector v(ring);
    v.comps_.emplace_back(pos, Polynomial::constant(v.ring_, 1));
    return v;
  }
  static FreeVector from_component(int pos, Polynomial f) {
    FreeVector v(f.ring());
    if (!f.is_zero()) v.comps_.emplace_back(pos, std::move(f));
    return v;
  }

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return comps_.empty(); }
  const std::vector<std::pair<int, Polynomial>>& components() const {
    return comps_;
  }
  const Polynomial& component(int pos) const;
  void set_component(int pos, Polynomial f);

  size_t term_count() const;

  struct Lead {
    Monomial mono;
    int pos = -1;
    uint32_t coeff = 0;
  };
  // Largest module monomial; vector must be nonzero.
  Lead lead() const;

  FreeVector operator+(const FreeVector& w) const;
  FreeVector operator-(const FreeVector& w) const;
  FreeVector operator-() const;
  FreeVector scaled(uint32_t c) const;
  FreeVector times_term(const Monomial& m, uint32_t c) const;
  void sub_mul(const FreeVector& w, const Monomial& m, uint32_t c);
  void add_mul(const FreeVector& w, const Polynomial& q);

  bool operator==(const FreeVector& w) const;

  // Homogeneity with respect to ambient twists: component at pos must be
  // homogeneous of degree deg - twists[pos] for a single deg. Returns that
  // degree, or kNoDegree for the zero vector; throws if not homogeneous.
  // (Degrees can legitimately be negative, so the sentinel must not be -1.)
  static constexpr int kNoDegree = INT_MIN;
  int homogeneous_degree(const std::vector<int>& twists) const;
  bool is_homogeneous(const std::vector<int>& twists) const;

 private:
  RingPtr ring_;
  std::vector<std::pair<int, Polynomial>> comps_;
};

}  // namespace cisupport
