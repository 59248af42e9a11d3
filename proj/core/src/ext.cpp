#include "cisupport/ext.hpp"

#include <algorithm>
#include <map>

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {

struct Layer {
  std::vector<int> offsets;  // one per free-module slot
  int total = 0;
};

Layer make_layer(const std::vector<int>& twists, const ModulePieces& NP, int d) {
  Layer L;
  for (int t : twists) {
    L.offsets.push_back(L.total);
    L.total += NP.dim(d + t);
  }
  return L;
}

// Matrix of "precompose with G": Hom(F_a, N)_{da} -> Hom(F_b, N)_{db},
// phi |-> phi o G, where G[s][c] is the (slot s of F_a, slot c of F_b) entry.
DenseMat compose_matrix(const ModulePieces& NP, const std::vector<int>& tw_a,
                        int da, const Layer& La, const std::vector<int>& tw_b,
                        int db, const Layer& Lb, const PolyGrid& G) {
  const PrimeField& F = NP.module().ring->field();
  DenseMat out(F, size_t(Lb.total), size_t(La.total));
  for (size_t s = 0; s < tw_a.size(); ++s) {
    for (size_t c = 0; c < tw_b.size(); ++c) {
      const Polynomial& g = G[s][c];
      if (g.is_zero()) continue;
      DenseMat mult = NP.mul_by(g, da + tw_a[s]);
      // lands in N_{da + tw_a[s] + deg g} which must be N_{db + tw_b[c]}
      for (size_t r = 0; r < mult.rows(); ++r)
        for (size_t k = 0; k < mult.cols(); ++k)
          if (mult.at(r, k))
            out.set(size_t(Lb.offsets[c]) + r, size_t(La.offsets[s]) + k,
                    F.add(out.at(size_t(Lb.offsets[c]) + r,
                                 size_t(La.offsets[s]) + k),
                          mult.at(r, k)));
    }
  }
  return out;
}

// Express x in span(first | second); returns the `first` coordinates.
std::vector<uint32_t> split_coords(const PrimeField& F,
                                   const std::vector<std::vector<uint32_t>>& first,
                                   const std::vector<std::vector<uint32_t>>& second,
                                   const std::vector<uint32_t>& x) {
  size_t n = x.size();
  DenseMat m(F, n, first.size() + second.size());
  for (size_t j = 0; j < first.size(); ++j)
    for (size_t i = 0; i < n; ++i) m.set(i, j, first[j][i]);
  for (size_t j = 0; j < second.size(); ++j)
    for (size_t i = 0; i < n; ++i) m.set(i, first.size() + j, second[j][i]);
  auto sol = m.solve(x);
  if (!sol)
    throw Error(ErrorCode::Internal, "cohomology class expression failed");
  return std::vector<uint32_t>(sol->begin(), sol->begin() + long(first.size()));
}

struct DegreeSlot {
  std::vector<std::vector<uint32_t>> reps;       // H-basis, ambient coords
  std::vector<std::vector<uint32_t>> boundaries; // spanning B, ambient coords
  // tensor-k data
  std::vector<int> chosen;                        // indices into reps
  std::vector<std::vector<uint32_t>> mspan_rows;  // in H coordinates
};

}  // namespace

ExtWindow ext_pair(const Resolution& resM, const OperatorDecomposition& dec,
                   const ModulePresentation& N) {
  const CIRing& A = *resM.module.ring;
  const PrimeField& F = A.field();
  RingPtr q = A.q();
  int L = resM.length();
  int c = A.codim();

  // Degree window where N lives.
  int n_lo = 0, n_hi = -1;
  if (N.gen_rank() > 0) {
    auto [tlo, thi] = std::minmax_element(N.gen_twists().begin(), N.gen_twists().end());
    int top = A.artinian() ? A.top_socle_degree() : 2 * A.max_u_degree();
    n_lo = *tlo;
    n_hi = *thi + top;
  }
  ModulePieces NP(N, n_lo, n_hi);

  auto twists_of = [&](int i) { return resM.F(i).twists; };

  // Reduced-to-A operator grids.
  std::vector<std::vector<PolyGrid>> tA(static_cast<size_t>(c));
  for (int j = 0; j < c; ++j)
    for (const PolyGrid& g : dec.t[size_t(j)]) {
      PolyGrid red = g;
      for (auto& row : red)
        for (Polynomial& f : row) f = A.nf(f);
      tA[size_t(j)].push_back(std::move(red));
    }

  // Per homological index: the degrees where Hom(F_i, N) is nonzero.
  auto degree_range = [&](int i) -> std::pair<int, int> {
    const std::vector<int>& tw = twists_of(i);
    if (tw.empty() || N.gen_rank() == 0) return {0, -1};
    auto [lo, hi] = std::minmax_element(tw.begin(), tw.end());
    return {n_lo - *hi, n_hi - *lo};
  };

  // Cohomology per (i, degree).
  std::vector<std::map<int, DegreeSlot>> slots(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) {
    auto [dlo, dhi] = degree_range(i);
    for (int d = dlo; d <= dhi; ++d) {
      Layer here = make_layer(twists_of(i), NP, d);
      if (here.total == 0) continue;
      Layer next = make_layer(twists_of(i + 1), NP, d);
      PolyGrid gnext;
      for (int s = 0; s < resM.diff[size_t(i)].rows(); ++s) {
        gnext.push_back({});
        for (int cc = 0; cc < resM.diff[size_t(i)].cols(); ++cc)
          gnext.back().push_back(resM.diff[size_t(i)].entry(s, cc));
      }
      DenseMat delta = compose_matrix(NP, twists_of(i), d, here,
                                      twists_of(i + 1), d, next, gnext);
      std::vector<std::vector<uint32_t>> Z = delta.kernel_basis();
      DegreeSlot slot;
      if (i > 0) {
        Layer prev = make_layer(twists_of(i - 1), NP, d);
        PolyGrid gprev;
        for (int s = 0; s < resM.diff[size_t(i) - 1].rows(); ++s) {
          gprev.push_back({});
          for (int cc = 0; cc < resM.diff[size_t(i) - 1].cols(); ++cc)
            gprev.back().push_back(resM.diff[size_t(i) - 1].entry(s, cc));
        }
        DenseMat dprev = compose_matrix(NP, twists_of(i - 1), d, prev,
                                        twists_of(i), d, here, gprev);
        RowSpace bspace(F, size_t(here.total));
        for (size_t col = 0; col < dprev.cols(); ++col) {
          std::vector<uint32_t> v(size_t(here.total));
          for (size_t r = 0; r < dprev.rows(); ++r) v[r] = dprev.at(r, col);
          if (bspace.add(v)) slot.boundaries.push_back(std::move(v));
        }
        RowSpace quot = bspace;
        for (std::vector<uint32_t>& z : Z)
          if (quot.add(z)) slot.reps.push_back(std::move(z));
      } else {
        for (std::vector<uint32_t>& z : Z) slot.reps.push_back(std::move(z));
      }
      if (!slot.reps.empty() || !slot.boundaries.empty())
        slots[size_t(i)].emplace(d, std::move(slot));
    }
  }

  // Class coordinates of an ambient cocycle at (i, d).
  auto class_coords = [&](int i, int d,
                          const std::vector<uint32_t>& x) -> std::vector<uint32_t> {
    auto it = slots[size_t(i)].find(d);
    if (it == slots[size_t(i)].end()) return {};
    return split_coords(F, it->second.reps, it->second.boundaries, x);
  };

  // Tensor with k: quotient by the images of multiplication by variables.
  for (int i = 0; i < L; ++i) {
    for (auto& [d, slot] : slots[size_t(i)]) {
      RowSpace mspan(F, slot.reps.size());
      auto below = slots[size_t(i)].find(d - 1);
      if (below != slots[size_t(i)].end() && !slot.reps.empty()) {
        Layer here = make_layer(twists_of(i), NP, d);
        for (int v = 0; v < A.nvars(); ++v) {
          // Blockwise multiplication by x_v on Hom(F_i, N).
          Layer lower = make_layer(twists_of(i), NP, d - 1);
          const std::vector<int>& tw = twists_of(i);
          for (const std::vector<uint32_t>& rep : below->second.reps) {
            std::vector<uint32_t> img(size_t(here.total), 0);
            for (size_t s = 0; s < tw.size(); ++s) {
              DenseMat mult = NP.mul_by(Polynomial::variable(q, v), d - 1 + tw[s]);
              for (size_t r = 0; r < mult.rows(); ++r) {
                uint32_t acc = 0;
                for (size_t k = 0; k < mult.cols(); ++k) {
                  uint32_t a = mult.at(r, k);
                  uint32_t b = rep[size_t(lower.offsets[s]) + k];
                  if (a && b) acc = F.add(acc, F.mul(a, b));
                }
                img[size_t(here.offsets[s]) + r] =
                    F.add(img[size_t(here.offsets[s]) + r], acc);
              }
            }
            std::vector<uint32_t> cls = class_coords(i, d, img);
            if (!cls.empty()) {
              if (mspan.add(cls)) slot.mspan_rows.push_back(std::move(cls));
            }
          }
        }
      }
      RowSpace quot = mspan;
      for (int r = 0; r < int(slot.reps.size()); ++r) {
        std::vector<uint32_t> unit(slot.reps.size(), 0);
        unit[size_t(r)] = 1;
        if (quot.add(unit)) slot.chosen.push_back(r);
      }
    }
  }

  // Assemble slices.
  ExtWindow out;
  std::vector<std::map<int, int>> koffsets(static_cast<size_t>(L));  // (i, d) -> offset
  for (int i = 0; i < L; ++i) {
    int total = 0;
    for (auto& [d, slot] : slots[size_t(i)]) {
      koffsets[size_t(i)][d] = total;
      total += int(slot.chosen.size());
    }
    out.dims.push_back(total);
  }

  auto k_coords = [&](int i, int d, const std::vector<uint32_t>& cls)
      -> std::vector<uint32_t> {
    auto it = slots[size_t(i)].find(d);
    if (it == slots[size_t(i)].end()) return {};
    std::vector<std::vector<uint32_t>> chosen_vecs;
    for (int r : it->second.chosen) {
      std::vector<uint32_t> unit(it->second.reps.size(), 0);
      unit[size_t(r)] = 1;
      chosen_vecs.push_back(std::move(unit));
    }
    return split_coords(F, chosen_vecs, it->second.mspan_rows, cls);
  };

  out.maps.assign(size_t(c), {});
  for (int j = 0; j < c; ++j) {
    int wj = A.u()[size_t(j)].total_degree();
    for (int i = 0; i + 2 < L; ++i) {
      DenseMat slice(F, size_t(out.dims[size_t(i) + 2]), size_t(out.dims[size_t(i)]));
      for (auto& [d, slot] : slots[size_t(i)]) {
        Layer here = make_layer(twists_of(i), NP, d);
        int dt = d - wj;
        auto target = slots[size_t(i) + 2].find(dt);
        Layer tgt_layer = make_layer(twists_of(i + 2), NP, dt);
        for (size_t ci = 0; ci < slot.chosen.size(); ++ci) {
          const std::vector<uint32_t>& rep = slot.reps[size_t(slot.chosen[ci])];
          // Apply Hom(t_j, N): precompose with t[j][i] : F_{i+2} -> F_i.
          DenseMat tmat = compose_matrix(NP, twists_of(i), d, here,
                                         twists_of(i + 2), dt, tgt_layer,
                                         tA[size_t(j)][size_t(i)]);
          std::vector<uint32_t> img = tmat.apply(rep);
          bool nonzero = false;
          for (uint32_t x : img)
            if (x) nonzero = true;
          if (!nonzero) continue;
          if (target == slots[size_t(i) + 2].end())
            throw Error(ErrorCode::Internal, "operator image landed in an empty slot");
          std::vector<uint32_t> cls = class_coords(i + 2, dt, img);
          std::vector<uint32_t> kc = k_coords(i + 2, dt, cls);
          int roff = koffsets[size_t(i) + 2][dt];
          int coff = koffsets[size_t(i)][d] + int(ci);
          for (size_t r = 0; r < kc.size(); ++r)
            if (kc[r]) slice.set(size_t(roff) + r, size_t(coff), kc[r]);
        }
      }
      out.maps[size_t(j)].push_back(std::move(slice));
    }
  }
  return out;
}

}  // namespace cisupport
