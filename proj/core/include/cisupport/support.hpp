#pragma once

#include "cisupport/ext.hpp"

namespace cisupport {

// Homogeneous ideal in T = k[t_1..t_c] (t-degree one), as a reduced basis.
struct TIdeal {
  GroebnerBasis gb;
  // Affine-cone Krull dimension of T/gb; the projective variety has
  // dimension one less. -1 for the unit ideal (empty cone).
  int dim() const { return krull_dimension(gb); }
};

struct AlgebraicSet {
  TIdeal ideal;
  std::string label;
};

// Windowed annihilator of a graded module over T given by slice dimensions
// and degree +2 operator maps. Even and odd slices are treated separately
// and the two annihilators intersected. Stabilization: the reduced basis
// unchanged for `codim` consecutive one-step window extensions, starting no
// earlier than slice 2*codim.
struct SupportIdealResult {
  TIdeal ideal;
  bool stabilized = false;
  int window_used = 0;
};

SupportIdealResult ann_of_window(const RingPtr& t_ring,
                                 const std::vector<int>& dims,
                                 const std::vector<std::vector<DenseMat>>& maps,
                                 int codim);

// V*(M) data from the action on Ext(M,k).
SupportIdealResult support_ideal(const EisenbudAction& act, const CIRing& A);
// V*(M,N) data from a windowed Ext pair.
SupportIdealResult pair_support_ideal(const ExtWindow& ext, const CIRing& A);

// Annihilator of the tail truncation (slices tail_lo..top), no stabilization
// loop; audit surrogate for "eventually supported inside X".
GroebnerBasis tail_ann(const RingPtr& t_ring, const std::vector<int>& dims,
                       const std::vector<std::vector<DenseMat>>& maps,
                       int tail_lo);

// Annihilator of the T-submodule generated by slice n of the windowed
// module; audit surrogate for discounting a single cohomological degree.
GroebnerBasis slice_ann(const RingPtr& t_ring, const std::vector<int>& dims,
                        const std::vector<std::vector<DenseMat>>& maps, int n);

// V(J) subseteq X, decided by radical membership of X's generators in J.
bool contains(const AlgebraicSet& X, const TIdeal& J);
// V(J) is empty in projective space: rad(J) contains the irrelevant ideal.
bool variety_empty_projective(const TIdeal& J);

TIdeal variety_union(const TIdeal& a, const TIdeal& b);        // ideal intersection
TIdeal variety_intersection(const TIdeal& a, const TIdeal& b); // ideal sum

struct TopvResult {
  TIdeal ideal;
  bool exact = true;
};
// Union of the top-dimensional irreducible components, by recursive
// generator factorization. Exact for c <= 2 and whenever every split is
// certified; best-effort flagged otherwise.
TopvResult topv(const TIdeal& J);

struct ComplexityReport {
  int cx = 0;
  enum class Method { ViaSupportDimension, ViaGrowthFit } method;
  int window = 0;
};
// Primary: affine dimension of the support ideal; secondary: betti growth
// fit on the tail. Disagreement raises MethodMismatch.
ComplexityReport complexity(const std::vector<int>& betti,
                            const SupportIdealResult& support, int codim,
                            int tail_lo, int tail_hi);

// The pair representing the locally closed set V*(M) \ X.
struct QuotientSupport {
  TIdeal module_ideal;
  TIdeal set_ideal;
  bool empty() const;  // V(module_ideal) subseteq V(set_ideal)
};
QuotientSupport quotient_support_X(const SupportIdealResult& J,
                                   const AlgebraicSet& X);
// topv(V*(M)) when cx > i, else the unit ideal (empty set).
TopvResult quotient_support_i(const SupportIdealResult& J, int cx, int i);

// V_X(M) and V_X(N) meet nowhere: every generator of I_X lies in
// rad(J_M + J_N) -- i.e. V(J_M) n V(J_N) subseteq X.
bool empty_intersection_mod_X(const TIdeal& JM, const TIdeal& JN,
                              const AlgebraicSet& X);

// A rational point of P^{c-1} with coordinates in F_p.
struct RationalPoint {
  std::vector<uint32_t> coords;  // length c, not all zero
};
// The homogeneous vanishing ideal of the point (c-1 independent linear forms).
TIdeal point_ideal(const RingPtr& t_ring, const RationalPoint& a);

}  // namespace cisupport
