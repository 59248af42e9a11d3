#pragma once

#include <map>

#include "cisupport/module.hpp"

namespace cisupport {

// Degree-wise model of M = coker(P): for each internal degree d in a window,
// a k-basis of M_d presented as reduced coordinates over the ambient slots
// (generator index, standard monomial of A). Multiplication by ring elements
// is available as explicit matrices. Everything is exact linear algebra.
class ModulePieces {
 public:
  ModulePieces(ModulePresentation M, int lo, int hi);

  const ModulePresentation& module() const { return mod_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  int dim(int d) const;

  // Coordinates of v (an ambient vector over the generator slots, entries in
  // normal form mod u) in the chosen basis of M_d. v must be homogeneous of
  // degree d with respect to the generator twists.
  std::vector<uint32_t> coords(const FreeVector& v, int d) const;

  // A lift of basis vector i of M_d back to the ambient free module.
  FreeVector basis_vector(int d, int i) const;

  // Matrix of multiplication by a homogeneous f: M_d -> M_{d + deg f}.
  DenseMat mul_by(const Polynomial& f, int d) const;

 private:
  struct Layer {
    // ambient slots: (generator index, standard monomial)
    std::vector<std::pair<int, Monomial>> slots;
    std::map<std::pair<int, std::array<uint8_t, kMaxVars>>, int> slot_index;
    RowSpace relations;           // image of the presentation in this degree
    std::vector<int> basis_slots; // ambient slots representing the quotient basis
    std::vector<int> slot_to_basis;  // -1 if not a basis slot
    Layer(PrimeField f, size_t n) : relations(f, n) {}
  };

  const Layer& layer(int d) const;
  std::vector<uint32_t> ambient_coords(const FreeVector& v, int d) const;

  ModulePresentation mod_;
  int lo_, hi_;
  std::vector<Layer> layers_;
};

}  // namespace cisupport
