#pragma once

#include "cisupport/pieces.hpp"

namespace cisupport {

// A homogeneous A-linear map M -> N of internal degree `degree`, recorded by
// its values on the generators of M: grid[t][s] is the coefficient of N's
// generator t in the image of M's generator s (normal form mod u, homogeneous
// of degree src_twist(s) + degree - tgt_twist(t)).
struct HomElement {
  ModulePresentation source;
  ModulePresentation target;
  int degree = 0;
  std::vector<std::vector<Polynomial>> grid;  // rows: target gens, cols: source gens
};

HomElement identity_hom(const ModulePresentation& M);
HomElement zero_hom(const ModulePresentation& M, const ModulePresentation& N,
                    int degree = 0);
HomElement hom_compose(const HomElement& g, const HomElement& f);  // g after f
HomElement hom_sub(const HomElement& a, const HomElement& b);
// Does the grid really define a map out of the cokernel?
bool is_valid_hom(const HomElement& h);

struct HomSpaceResult {
  int dim = 0;
  std::vector<HomElement> basis;
};

// Basis of Hom_A(M, N)_degree as explicit maps.
HomSpaceResult hom_space(const ModulePresentation& M,
                         const ModulePresentation& N, int degree);

struct StableHomResult {
  int dim = 0;                   // dim of Hom/P in this degree
  int hom_dim = 0;               // dim of Hom before the quotient
  std::vector<HomElement> reps;  // representatives of a basis of the quotient
};

// sHom_A(M,N)_degree = Hom/P where P is the maps factoring through a free
// module (equivalently through the free cover of N).
StableHomResult stable_hom(const ModulePresentation& M,
                           const ModulePresentation& N, int degree);

// h lies in P(M,N), i.e. is zero in the stable category.
bool is_stably_zero(const HomElement& h);
bool stably_equal(const HomElement& a, const HomElement& b);

// Internal degrees where Hom(M,N) can be nonzero (exact for artinian A,
// a twist-window heuristic otherwise).
std::pair<int, int> hom_degree_range(const ModulePresentation& M,
                                     const ModulePresentation& N);

// Total stable Hom dimension over the whole degree range (artinian A).
int stable_hom_total(const ModulePresentation& M, const ModulePresentation& N);

// Hom_A(M, A) presented via kernel-of-transpose and its syzygies.
ModulePresentation dual(const ModulePresentation& M);

// The canonical embedding iota: M -> F with F free and coker(iota) = the
// cosyzygy of M; rows of the returned matrix are the minimal generators of
// Hom(M, A) evaluated on M's generators. Requires M MCM.
struct CosyzygyEmbedding {
  ModulePresentation cosyzygy;          // coker(iota), minimalized
  GradedFreeModule free_middle;         // F
  std::vector<std::vector<Polynomial>> iota;  // F-rows x M-gens grid
};
CosyzygyEmbedding cosyzygy_embedding(const ModulePresentation& M);

}  // namespace cisupport
