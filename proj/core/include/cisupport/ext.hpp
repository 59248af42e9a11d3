#pragma once

#include "cisupport/operators.hpp"

namespace cisupport {

// Windowed Ext data for a pair: dims[i] = dim_k(Ext^i_A(M,N) tensor k) and
// the operator maps between consecutive slices. Same shape as the action on
// Ext(M,k), so the annihilator engine consumes both.
struct ExtWindow {
  std::vector<int> dims;
  std::vector<std::vector<DenseMat>> maps;  // maps[j][i]: slice i -> slice i+2

  int top() const { return int(dims.size()) - 1; }
};

// Cohomology of Hom(F_., N) computed degree-wise, reduced mod m, with the
// t_j-action transported through the decomposition of the lifted square.
// Valid slices are i = 0 .. length-1 and maps for i <= length-3.
ExtWindow ext_pair(const Resolution& resM, const OperatorDecomposition& dec,
                   const ModulePresentation& N);

}  // namespace cisupport
