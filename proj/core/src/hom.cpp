#include "cisupport/hom.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

HomElement identity_hom(const ModulePresentation& M) {
  HomElement h{M, M, 0, {}};
  int n = M.gen_rank();
  RingPtr q = M.ring->q();
  h.grid.assign(size_t(n), std::vector<Polynomial>(size_t(n), Polynomial::zero(q)));
  for (int i = 0; i < n; ++i)
    h.grid[size_t(i)][size_t(i)] = Polynomial::constant(q, 1);
  return h;
}

HomElement zero_hom(const ModulePresentation& M, const ModulePresentation& N,
                    int degree) {
  HomElement h{M, N, degree, {}};
  h.grid.assign(size_t(N.gen_rank()),
                std::vector<Polynomial>(size_t(M.gen_rank()),
                                        Polynomial::zero(M.ring->q())));
  return h;
}

HomElement hom_compose(const HomElement& g, const HomElement& f) {
  const CIRing& A = *f.source.ring;
  RingPtr q = A.q();
  int rows = g.target.gen_rank();
  int mid = f.target.gen_rank();
  int cols = f.source.gen_rank();
  HomElement out{f.source, g.target, f.degree + g.degree, {}};
  out.grid.assign(size_t(rows), std::vector<Polynomial>(size_t(cols), Polynomial::zero(q)));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Polynomial acc = Polynomial::zero(q);
      for (int k = 0; k < mid; ++k) {
        if (g.grid[size_t(r)][size_t(k)].is_zero() ||
            f.grid[size_t(k)][size_t(c)].is_zero())
          continue;
        acc = acc + g.grid[size_t(r)][size_t(k)] * f.grid[size_t(k)][size_t(c)];
      }
      out.grid[size_t(r)][size_t(c)] = A.nf(acc);
    }
  return out;
}

HomElement hom_sub(const HomElement& a, const HomElement& b) {
  HomElement out = a;
  for (size_t r = 0; r < out.grid.size(); ++r)
    for (size_t c = 0; c < out.grid[r].size(); ++c)
      out.grid[r][c] = a.source.ring->nf(a.grid[r][c] - b.grid[r][c]);
  return out;
}

namespace {
// phi(col c of source presentation) as a vector over target generators.
FreeVector push_relation(const HomElement& h, int c) {
  const CIRing& A = *h.source.ring;
  RingPtr q = A.q();
  FreeVector out(q);
  const GradedMatrix& P = h.source.pres;
  for (int t = 0; t < h.target.gen_rank(); ++t) {
    Polynomial acc = Polynomial::zero(q);
    for (int s = 0; s < h.source.gen_rank(); ++s) {
      if (h.grid[size_t(t)][size_t(s)].is_zero() || P.entry(s, c).is_zero())
        continue;
      acc = acc + h.grid[size_t(t)][size_t(s)] * P.entry(s, c);
    }
    acc = A.nf(acc);
    if (!acc.is_zero()) out.set_component(t, std::move(acc));
  }
  return out;
}
}  // namespace

bool is_valid_hom(const HomElement& h) {
  std::vector<FreeVector> rel_cols;
  for (int c = 0; c < h.target.pres.cols(); ++c)
    rel_cols.push_back(h.target.pres.column(c));
  SubmoduleOverA image(h.target.ring, h.target.gen_rank(), rel_cols);
  for (int c = 0; c < h.source.pres.cols(); ++c)
    if (!image.member(push_relation(h, c))) return false;
  return true;
}

namespace {

struct HomSystem {
  // Unknowns: coordinates of phi(gen_s) in N-pieces at degree tw(s)+e,
  // concatenated over s. Offsets index the blocks.
  std::vector<int> offsets;
  int total = 0;
  std::vector<int> gen_degrees;
};

HomSystem layout(const ModulePresentation& M, const ModulePieces& NP, int e) {
  HomSystem sys;
  for (int s = 0; s < M.gen_rank(); ++s) {
    int d = M.gen_twists()[size_t(s)] + e;
    sys.offsets.push_back(sys.total);
    sys.gen_degrees.push_back(d);
    sys.total += NP.dim(d);
  }
  return sys;
}

// Rows of the constraint matrix: for each relation column of M, the image
// must vanish in N.
DenseMat constraints(const ModulePresentation& M, const ModulePieces& NP,
                     const HomSystem& sys, int e) {
  const PrimeField& F = M.ring->field();
  const GradedMatrix& P = M.pres;
  int nrows = 0;
  std::vector<int> row_offsets;
  for (int c = 0; c < P.cols(); ++c) {
    row_offsets.push_back(nrows);
    nrows += NP.dim(P.source().twists[size_t(c)] + e);
  }
  DenseMat mat(F, size_t(nrows), size_t(sys.total));
  for (int c = 0; c < P.cols(); ++c) {
    for (int s = 0; s < M.gen_rank(); ++s) {
      const Polynomial& entry = P.entry(s, c);
      if (entry.is_zero()) continue;
      DenseMat mult = NP.mul_by(entry, sys.gen_degrees[size_t(s)]);
      for (size_t r = 0; r < mult.rows(); ++r)
        for (size_t k = 0; k < mult.cols(); ++k)
          if (mult.at(r, k))
            mat.set(size_t(row_offsets[size_t(c)]) + r,
                    size_t(sys.offsets[size_t(s)]) + k,
                    F.add(mat.at(size_t(row_offsets[size_t(c)]) + r,
                                 size_t(sys.offsets[size_t(s)]) + k),
                          mult.at(r, k)));
    }
  }
  return mat;
}

HomElement element_from_coords(const ModulePresentation& M,
                               const ModulePresentation& N,
                               const ModulePieces& NP, const HomSystem& sys,
                               int e, const std::vector<uint32_t>& x) {
  const CIRing& A = *M.ring;
  RingPtr q = A.q();
  HomElement h = zero_hom(M, N, e);
  for (int s = 0; s < M.gen_rank(); ++s) {
    int d = sys.gen_degrees[size_t(s)];
    FreeVector val(q);
    for (int i = 0; i < NP.dim(d); ++i) {
      uint32_t c = x[size_t(sys.offsets[size_t(s)] + i)];
      if (!c) continue;
      FreeVector b = NP.basis_vector(d, i).scaled(c);
      val = val + b;
    }
    for (const auto& [pos, f] : val.components())
      h.grid[size_t(pos)][size_t(s)] = A.nf(f);
  }
  return h;
}

std::vector<uint32_t> coords_of_hom(const HomElement& h, const ModulePieces& NP,
                                    const HomSystem& sys) {
  std::vector<uint32_t> x(size_t(sys.total), 0);
  RingPtr q = h.source.ring->q();
  for (int s = 0; s < h.source.gen_rank(); ++s) {
    FreeVector val(q);
    for (int t = 0; t < h.target.gen_rank(); ++t)
      if (!h.grid[size_t(t)][size_t(s)].is_zero())
        val.set_component(t, h.grid[size_t(t)][size_t(s)]);
    std::vector<uint32_t> c = NP.coords(val, sys.gen_degrees[size_t(s)]);
    for (size_t i = 0; i < c.size(); ++i)
      x[size_t(sys.offsets[size_t(s)]) + i] = c[i];
  }
  return x;
}

std::pair<int, int> piece_window(const ModulePresentation& M,
                                 const ModulePresentation& N, int e) {
  std::vector<int> degs;
  for (int t : M.gen_twists()) degs.push_back(t + e);
  for (int t : M.pres.source().twists) degs.push_back(t + e);
  if (degs.empty()) degs.push_back(0);
  auto [lo, hi] = std::minmax_element(degs.begin(), degs.end());
  return {*lo, *hi};
}

// Span of homs that factor through the free cover of N, in coordinates.
RowSpace free_factor_span(const ModulePresentation& M,
                          const ModulePresentation& N, const ModulePieces& NP,
                          const HomSystem& sys, int e) {
  const PrimeField& F = M.ring->field();
  RowSpace span(F, size_t(sys.total));
  ModulePresentation cover = free_module(N.ring, N.gen_twists());
  auto [lo, hi] = piece_window(M, cover, e);
  ModulePieces CP(cover, lo, hi);
  HomSystem csys = layout(M, CP, e);
  DenseMat sys_mat = constraints(M, CP, csys, e);
  for (const std::vector<uint32_t>& x : sys_mat.kernel_basis()) {
    HomElement through = element_from_coords(M, cover, CP, csys, e, x);
    // Compose with the projection cover ->> N (same generator grid).
    HomElement projected{M, N, e, through.grid};
    span.add(coords_of_hom(projected, NP, sys));
  }
  return span;
}

}  // namespace

HomSpaceResult hom_space(const ModulePresentation& M,
                         const ModulePresentation& N, int degree) {
  auto [lo, hi] = piece_window(M, N, degree);
  ModulePieces NP(N, lo, hi);
  HomSystem sys = layout(M, NP, degree);
  DenseMat mat = constraints(M, NP, sys, degree);
  HomSpaceResult out;
  for (const std::vector<uint32_t>& x : mat.kernel_basis())
    out.basis.push_back(element_from_coords(M, N, NP, sys, degree, x));
  out.dim = int(out.basis.size());
  return out;
}

StableHomResult stable_hom(const ModulePresentation& M,
                           const ModulePresentation& N, int degree) {
  auto [lo, hi] = piece_window(M, N, degree);
  ModulePieces NP(N, lo, hi);
  HomSystem sys = layout(M, NP, degree);
  DenseMat mat = constraints(M, NP, sys, degree);
  std::vector<std::vector<uint32_t>> hom_basis = mat.kernel_basis();
  RowSpace pspan = free_factor_span(M, N, NP, sys, degree);
  StableHomResult out;
  out.hom_dim = int(hom_basis.size());
  RowSpace quotient = pspan;
  for (const std::vector<uint32_t>& x : hom_basis) {
    if (quotient.add(x)) {
      out.reps.push_back(element_from_coords(M, N, NP, sys, degree, x));
      ++out.dim;
    }
  }
  return out;
}

bool is_stably_zero(const HomElement& h) {
  auto [lo, hi] = piece_window(h.source, h.target, h.degree);
  ModulePieces NP(h.target, lo, hi);
  HomSystem sys = layout(h.source, NP, h.degree);
  RowSpace pspan = free_factor_span(h.source, h.target, NP, sys, h.degree);
  return pspan.contains(coords_of_hom(h, NP, sys));
}

bool stably_equal(const HomElement& a, const HomElement& b) {
  return is_stably_zero(hom_sub(a, b));
}

std::pair<int, int> hom_degree_range(const ModulePresentation& M,
                                     const ModulePresentation& N) {
  const CIRing& A = *M.ring;
  if (M.gen_rank() == 0 || N.gen_rank() == 0) return {0, -1};
  int top = A.artinian() ? A.top_socle_degree() : 2 * A.max_u_degree();
  auto [mlo, mhi] = std::minmax_element(M.gen_twists().begin(), M.gen_twists().end());
  auto [nlo, nhi] = std::minmax_element(N.gen_twists().begin(), N.gen_twists().end());
  return {*nlo - *mhi - top, *nhi + top - *mlo};
}

int stable_hom_total(const ModulePresentation& M, const ModulePresentation& N) {
  auto [lo, hi] = hom_degree_range(M, N);
  int total = 0;
  for (int e = lo; e <= hi; ++e) total += stable_hom(M, N, e).dim;
  return total;
}

// ---- duals and cosyzygies ----

namespace {
struct DualData {
  std::vector<FreeVector> kernel_gens;  // minimal generators of ker(P^T)
  std::vector<int> ambient_twists;      // = -gen twists of M
  ModulePresentation presentation;
};

DualData dual_data(const ModulePresentation& M) {
  const CIRing& A = *M.ring;
  RingPtr q = A.q();
  const GradedMatrix& P = M.pres;
  std::vector<int> amb;  // twists of F0^*
  for (int t : M.gen_twists()) amb.push_back(-t);
  // Columns of P^T live in F1^* with twists -source twists.
  int rank1 = P.cols();
  std::vector<FreeVector> cols;
  for (int r = 0; r < P.rows(); ++r) {
    FreeVector w(q);
    for (int c = 0; c < rank1; ++c)
      if (!P.entry(r, c).is_zero()) w.set_component(c, P.entry(r, c));
    cols.push_back(std::move(w));
  }
  std::vector<FreeVector> ker = syzygies_over_A(M.ring, rank1, cols);
  std::vector<int> keep = minimal_generator_indices(M.ring, amb, ker);
  DualData out;
  out.ambient_twists = amb;
  for (int i : keep) out.kernel_gens.push_back(ker[size_t(i)]);
  // Present the dual: relations among the kernel generators.
  std::vector<int> gen_twists;
  for (const FreeVector& k : out.kernel_gens)
    gen_twists.push_back(k.homogeneous_degree(amb));
  // Kernel generators live in F0^* of rank |amb|; their syzygies are the
  // relations of the dual module.
  std::vector<FreeVector> rel =
      syzygies_over_A(M.ring, int(amb.size()), out.kernel_gens);
  std::vector<int> rel_keep = minimal_generator_indices(M.ring, gen_twists, rel);
  std::vector<FreeVector> rel_min;
  for (int i : rel_keep) rel_min.push_back(rel[size_t(i)]);
  GradedFreeModule tgt{M.ring, gen_twists};
  out.presentation = present(GradedMatrix::from_columns(tgt, rel_min));
  out.presentation.is_mcm = M.is_mcm || A.artinian();
  return out;
}
}  // namespace

ModulePresentation dual(const ModulePresentation& M) {
  return dual_data(M).presentation;
}

CosyzygyEmbedding cosyzygy_embedding(const ModulePresentation& M) {
  if (!M.is_mcm)
    throw Error(ErrorCode::NotMCM, "cosyzygy embedding needs an MCM module");
  const CIRing& A = *M.ring;
  RingPtr q = A.q();
  DualData D = dual_data(M);
  // F = (free cover of dual)^*, twists negate the dual generator degrees.
  std::vector<int> ftw;
  for (const FreeVector& k : D.kernel_gens)
    ftw.push_back(-k.homogeneous_degree(D.ambient_twists));
  GradedFreeModule F{M.ring, ftw};
  // iota(gen_s of M) = (k_0[s], k_1[s], ...) in F.
  CosyzygyEmbedding out{ModulePresentation{}, F, {}};
  out.iota.assign(D.kernel_gens.size(),
                  std::vector<Polynomial>(size_t(M.gen_rank()), Polynomial::zero(q)));
  for (size_t i = 0; i < D.kernel_gens.size(); ++i)
    for (const auto& [pos, f] : D.kernel_gens[i].components())
      out.iota[i][size_t(pos)] = f;
  std::vector<FreeVector> image_cols;
  for (int s = 0; s < M.gen_rank(); ++s) {
    FreeVector col(q);
    for (size_t i = 0; i < D.kernel_gens.size(); ++i)
      if (!out.iota[i][size_t(s)].is_zero())
        col.set_component(int(i), out.iota[i][size_t(s)]);
    image_cols.push_back(std::move(col));
  }
  out.cosyzygy = present(GradedMatrix::from_columns(F, image_cols));
  out.cosyzygy.is_mcm = true;
  return out;
}

}  // namespace cisupport
