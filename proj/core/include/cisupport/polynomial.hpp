#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cisupport/ring.hpp"

namespace cisupport {

struct Term {
  Monomial mono;
  uint32_t coeff;  // nonzero, in [1, p)
};

// Exact multivariate polynomial. Terms are strictly descending in the ring's
// monomial order and never carry zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, int64_t c);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, uint32_t c);
  // Normalizes arbitrary (monomial, coeff) data: sorts, merges, drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  const Term& lead() const { return terms_.front(); }
  int total_degree() const {  // -1 for the zero polynomial
    int d = -1;
    for (const Term& t : terms_)
      if (int(t.mono.deg) > d) d = t.mono.deg;
    return d;
  }
  bool is_homogeneous() const {
    for (const Term& t : terms_)
      if (t.mono.deg != terms_.front().mono.deg) return false;
    return true;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial scaled(uint32_t c) const;
  // this * (c * mono); the workhorse of reduction loops.
  Polynomial times_term(const Monomial& m, uint32_t c) const;
  void sub_mul(const Polynomial& g, const Monomial& m, uint32_t c);  // *this -= g*(c*m)

  Polynomial monic() const;  // lead coefficient normalized to 1
  Polynomial derivative(int var) const;
  uint32_t evaluate(const std::vector<uint32_t>& point) const;
  uint32_t coefficient_of(const Monomial& m) const;

  // Image under a variable renaming into `target`: variable i of this ring
  // maps to variable map[i] of target. Coefficients carried over unchanged.
  Polynomial map_vars(const RingPtr& target, const std::vector<int>& map) const;

  bool operator==(const Polynomial& g) const;
  bool operator!=(const Polynomial& g) const { return !(*this == g); }

  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

}  // namespace cisupport
