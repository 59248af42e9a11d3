#pragma once

#include <vector>

#include "cisupport/groebner.hpp"

namespace cisupport {

// Krull dimension of R/I from the lead-term ideal of a reduced basis:
// the size of a largest variable subset S with no lead monomial supported
// inside S. Zero ideal gives n, unit ideal gives -1.
int krull_dimension(const GroebnerBasis& I);

// Rabinowitsch: g in rad(I) iff 1 in I + (1 - w*g) in one extra variable.
bool radical_membership(const Polynomial& g, const GroebnerBasis& I);

GroebnerBasis ideal_sum(const GroebnerBasis& I, const GroebnerBasis& J);
GroebnerBasis ideal_sum(const GroebnerBasis& I,
                        const std::vector<Polynomial>& more);

// Exact ideal intersection via syzygies of {(1,1)} u {(f,0)} u {(0,g)}.
GroebnerBasis ideal_intersection(const GroebnerBasis& I,
                                 const GroebnerBasis& J);

// Reduced bases are canonical, so ideal equality is list equality.
bool ideal_equal(const GroebnerBasis& I, const GroebnerBasis& J);

// rad(I) == rad(J), via two-sided radical membership of generators.
bool radical_equal(const GroebnerBasis& I, const GroebnerBasis& J);

// Exact quotient h/d; throws if d does not divide h.
Polynomial divide_exact(const Polynomial& h, const Polynomial& d);

// gcd via (f) n (g) = (lcm) in the polynomial ring; both nonzero.
Polynomial poly_gcd(const Polynomial& f, const Polynomial& g);

struct FactorResult {
  std::vector<std::pair<Polynomial, int>> factors;  // monic, with multiplicity
  uint32_t unit = 1;  // f = unit * prod factors^mult when exact
  bool exact = true;  // false when irreducibility could not be certified
};

// Factorization of a homogeneous polynomial over F_p. Complete for monomial
// content, for binary forms (univariate factorization after dehomogenizing),
// and for p-th powers; otherwise squarefree splitting with a best-effort flag.
FactorResult factor_split(const Polynomial& f);

}  // namespace cisupport
