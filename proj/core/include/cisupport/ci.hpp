#pragma once

#include <memory>

#include "cisupport/groebner.hpp"
#include "cisupport/ideal.hpp"

namespace cisupport {

// The ambient data: Q = F_p[x_1..x_n] standard graded, u = u_1..u_c a
// homogeneous regular sequence in m^2, A = Q/(u). Elements of A are stored
// as normal forms modulo the reduced basis of (u).
class CIRing {
 public:
  // Validates: each u_j homogeneous of degree >= 2, and dim Q/(u) = n - c.
  CIRing(RingPtr q, std::vector<Polynomial> u);

  const RingPtr& q() const { return q_; }
  const std::vector<Polynomial>& u() const { return u_; }
  int nvars() const { return q_->nvars(); }
  int codim() const { return int(u_.size()); }
  int dim() const { return nvars() - codim(); }
  bool artinian() const { return dim() == 0; }
  const GroebnerBasis& defining_gb() const { return gb_; }
  const PrimeField& field() const { return q_->field(); }

  Polynomial nf(const Polynomial& f) const { return normal_form(f, gb_); }
  FreeVector nf(FreeVector v) const;

  // k-basis of A in one degree: monomials outside the lead-term ideal of (u).
  std::vector<Monomial> std_monomials(int deg) const;
  // Largest degree with A_deg != 0; only meaningful for artinian A.
  int top_socle_degree() const;
  int max_u_degree() const;

  // T = k[t_1..t_c], the operator ring with the degree-one regrading.
  const RingPtr& t_ring() const { return t_ring_; }

 private:
  RingPtr q_;
  std::vector<Polynomial> u_;
  GroebnerBasis gb_;
  RingPtr t_ring_;
};

using CIPtr = std::shared_ptr<const CIRing>;

struct CICertificate {
  int codim;
  int dim;
};

// Construction already validates; this re-exposes the certificate.
// Bad input throws NotRegularSequence / NotInSquareOfMaxIdeal.
CICertificate validate_ci(const CIRing& ring);

CIPtr make_ci(RingPtr q, std::vector<Polynomial> u);

}  // namespace cisupport
