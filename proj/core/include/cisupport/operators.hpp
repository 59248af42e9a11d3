#pragma once

#include "cisupport/resolution.hpp"

namespace cisupport {

using PolyGrid = std::vector<std::vector<Polynomial>>;

// The resolution lifted entry-wise to Q. Differentials are stored as raw
// grids; reducing them mod (u) must reproduce the resolution exactly.
struct LiftedResolution {
  std::vector<PolyGrid> dtilde;  // dtilde[i] lifts diff[i] = d_{i+1}
};

// The decomposition of the squared lifted differential along u:
// dtilde_i o dtilde_{i+1} = sum_j u_j * t[j][i], with t[j][i] a grid of
// shape rank F_i x rank F_{i+2}.
struct OperatorDecomposition {
  std::vector<std::vector<PolyGrid>> t;  // t[j][i]
};

// The action of t_1..t_c on Ext^*(M,k): chi[j][i] is the scalar matrix
// Ext^i -> Ext^{i+2}, of shape beta_{i+2} x beta_i. Shapes follow the betti
// table and the chi's commute exactly wherever composable.
struct EisenbudAction {
  std::vector<int> betti;
  std::vector<std::vector<DenseMat>> chi;  // chi[j][i], i = 0..top-2

  int top() const { return int(betti.size()) - 1; }
};

LiftedResolution lift(const Resolution& res);
OperatorDecomposition square_decompose(const LiftedResolution& lifted,
                                       const Resolution& res);
EisenbudAction action_on_ext(const OperatorDecomposition& dec,
                             const Resolution& res);

// Homogeneous polynomial in T = k[t_1..t_c] (t-degree one regrading of the
// degree-two cohomology operators).
struct OperatorPolynomial {
  Polynomial eta;  // over the T ring of the CIRing
  int t_degree() const { return eta.is_zero() ? -1 : eta.total_degree(); }
};

// The degree-zero-after-twist map Omega^{2e}M -> M induced by eta(t~),
// where e = t-degree of eta. Needs resolution length >= 2e + 1.
HomElement chain_map_of(const OperatorPolynomial& eta, const Resolution& res,
                        const OperatorDecomposition& dec);

}  // namespace cisupport
