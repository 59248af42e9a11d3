#pragma once

#include "cisupport/hom.hpp"

namespace cisupport {

// Minimal graded free resolution over A, built one syzygy step at a time.
// diff[i] is d_{i+1} : F_{i+1} -> F_i (so diff[0] presents the module).
// Invariants checked on construction: d o d = 0 exactly, and every entry of
// every differential lies in the maximal ideal.
struct Resolution {
  ModulePresentation module;  // Omega^0, minimal
  std::vector<GradedMatrix> diff;
  bool minimal = true;

  int length() const { return int(diff.size()); }
  const GradedFreeModule& F(int i) const {
    return i == 0 ? module.pres.target() : diff[size_t(i) - 1].source();
  }
  std::vector<int> betti() const {
    std::vector<int> b{module.gen_rank()};
    for (const GradedMatrix& d : diff) b.push_back(d.cols());
    return b;
  }
};

Resolution resolve(const ModulePresentation& M, int steps);
Resolution extend_resolution(Resolution res, int extra_steps);

// Truncated Poincare series coefficients: the betti numbers, read as a series.
std::vector<int> poincare_truncated(const Resolution& res, int upto);

// Omega^n(M) presented by d_{n+1}; Omega^0 is the minimalized module.
ModulePresentation syzygy_module(const Resolution& res, int n);

// Omega^{-n}(M) = dual(Omega^n(dual M)); requires the MCM flag.
ModulePresentation cosyzygy_module(const ModulePresentation& M, int n);

// Omega^{dim A}(M) with the MCM flag set.
ModulePresentation mcmify(const ModulePresentation& M);

// Pushout cone of a homogeneous map f : M -> N (any internal degree; the
// source is twisted so the triangle M -> N -> C(f) -> Omega^{-1}M is
// degree-zero). Requires M MCM.
ModulePresentation cone_of_map(const HomElement& f);

// Least r such that the r-th finite differences of the even and odd betti
// subsequences vanish on the tail [lo, hi]; 0 if the tail is identically
// zero; -1 if no r <= cap fits (window too small).
int growth_complexity(const std::vector<int>& betti, int lo, int hi, int cap);

}  // namespace cisupport
