#pragma once

#include "cisupport/ci.hpp"
#include "cisupport/linalg.hpp"

namespace cisupport {

struct GradedFreeModule {
  CIPtr ring;
  std::vector<int> twists;  // degree of each basis element

  int rank() const { return int(twists.size()); }
};

// Homogeneous matrix over A between graded free modules. Entry (r, s) is
// homogeneous of degree source.twists[s] - target.twists[r] (or zero) and is
// stored in normal form modulo (u). Construction validates both.
class GradedMatrix {
 public:
  GradedMatrix() = default;  // empty placeholder; not a valid matrix
  GradedMatrix(GradedFreeModule source, GradedFreeModule target,
               std::vector<std::vector<Polynomial>> entries);

  static GradedMatrix zero(GradedFreeModule source, GradedFreeModule target);
  // Builds the matrix whose columns are the given vectors in `target`;
  // column twists are their homogeneous degrees.
  static GradedMatrix from_columns(const GradedFreeModule& target,
                                   const std::vector<FreeVector>& cols);

  const GradedFreeModule& source() const { return source_; }
  const GradedFreeModule& target() const { return target_; }
  int rows() const { return target_.rank(); }
  int cols() const { return source_.rank(); }
  const Polynomial& entry(int r, int c) const { return entries_[size_t(r)][size_t(c)]; }
  bool is_zero() const;

  FreeVector column(int c) const;
  GradedMatrix compose(const GradedMatrix& inner) const;  // this o inner
  GradedMatrix operator-(const GradedMatrix& other) const;
  // Coefficient of the constant monomial in each entry (the mod-m shadow).
  DenseMat scalar_part() const;

 private:
  GradedFreeModule source_, target_;
  std::vector<std::vector<Polynomial>> entries_;
};

// Finitely generated graded A-module as the cokernel of a homogeneous matrix.
// Presentations are minimalized on construction (unit entries eliminated,
// zero relations dropped) so that freeness tests and betti counts are honest.
struct ModulePresentation {
  CIPtr ring;
  GradedMatrix pres;  // relations -> generators
  bool is_mcm = false;

  int gen_rank() const { return pres.target().rank(); }
  const std::vector<int>& gen_twists() const { return pres.target().twists; }
};

// Unit-entry Gaussian elimination with row/column removal, then zero-column
// pruning. Deterministic pivot order (first unit, column-major scan).
GradedMatrix minimalize(GradedMatrix m);

ModulePresentation present(GradedMatrix m);
ModulePresentation free_module(CIPtr ring, std::vector<int> twists);
ModulePresentation residue_field(CIPtr ring);  // k = A/m
ModulePresentation direct_sum(const ModulePresentation& a,
                              const ModulePresentation& b);
ModulePresentation twist(const ModulePresentation& m, int e);
bool is_free(const ModulePresentation& m);
bool is_zero_module(const ModulePresentation& m);

// ---- submodules of free A-modules, via the Q-engine on gens + u*e_i ----

// Normal forms and membership for the A-submodule spanned by `gens` inside
// the free module with the given twists. Saturated once, then reusable.
class SubmoduleOverA {
 public:
  SubmoduleOverA(CIPtr ring, int ambient_rank, const std::vector<FreeVector>& gens);
  FreeVector nf(FreeVector v) const;
  bool member(const FreeVector& v) const { return nf(v).is_zero(); }

 private:
  CIPtr ring_;
  GroebnerEngine eng_;
};

// Generators of { c : sum c_i gens_i = 0 over A }, entries in normal form.
std::vector<FreeVector> syzygies_over_A(const CIPtr& ring, int ambient_rank,
                                        const std::vector<FreeVector>& gens);

// Greedy minimal generating subset (ascending degree, Nakayama argument)
// of the A-span of homogeneous vectors. Returns indices into `gens`.
std::vector<int> minimal_generator_indices(const CIPtr& ring,
                                           const std::vector<int>& ambient_twists,
                                           const std::vector<FreeVector>& gens);

}  // namespace cisupport
