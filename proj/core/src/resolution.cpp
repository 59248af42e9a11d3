#include "cisupport/resolution.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {
void check_step(const GradedMatrix& prev, const GradedMatrix& next) {
  if (!prev.compose(next).is_zero())
    throw Error(ErrorCode::Internal, "resolution differentials do not compose to zero");
  for (int r = 0; r < next.rows(); ++r)
    for (int c = 0; c < next.cols(); ++c)
      if (!next.entry(r, c).is_zero() && next.entry(r, c).is_constant())
        throw Error(ErrorCode::Internal, "resolution not minimal: unit entry");
}

// Minimal generators of the syzygies of `cols` (vectors in `ambient`); the
// syzygy vectors live over the column slots, whose twists are `col_twists`.
std::vector<FreeVector> syzygy_step(const CIPtr& ring,
                                    const GradedFreeModule& ambient,
                                    const std::vector<int>& col_twists,
                                    const std::vector<FreeVector>& cols) {
  std::vector<FreeVector> syz = syzygies_over_A(ring, ambient.rank(), cols);
  std::vector<int> keep = minimal_generator_indices(ring, col_twists, syz);
  std::vector<FreeVector> chosen;
  for (int i : keep) chosen.push_back(syz[size_t(i)]);
  return chosen;
}
}  // namespace

Resolution resolve(const ModulePresentation& M, int steps) {
  if (steps < 1) throw Error(ErrorCode::Internal, "resolve: steps must be >= 1");
  Resolution res;
  res.module = M;
  // First differential: minimal generators of the relation submodule.
  std::vector<FreeVector> cols;
  for (int c = 0; c < M.pres.cols(); ++c) cols.push_back(M.pres.column(c));
  std::vector<int> keep =
      minimal_generator_indices(M.ring, M.gen_twists(), cols);
  std::vector<FreeVector> chosen;
  for (int i : keep) chosen.push_back(cols[size_t(i)]);
  res.diff.push_back(GradedMatrix::from_columns(M.pres.target(), chosen));
  for (int r = 0; r < res.diff[0].rows(); ++r)
    for (int c = 0; c < res.diff[0].cols(); ++c)
      if (!res.diff[0].entry(r, c).is_zero() && res.diff[0].entry(r, c).is_constant())
        throw Error(ErrorCode::Internal, "presentation not minimal");
  return extend_resolution(std::move(res), steps - 1);
}

Resolution extend_resolution(Resolution res, int extra_steps) {
  CIPtr ring = res.module.ring;
  for (int s = 0; s < extra_steps; ++s) {
    const GradedMatrix& last = res.diff.back();
    std::vector<FreeVector> cols;
    for (int c = 0; c < last.cols(); ++c) cols.push_back(last.column(c));
    std::vector<FreeVector> chosen =
        syzygy_step(ring, last.target(), last.source().twists, cols);
    GradedMatrix step = GradedMatrix::from_columns(last.source(), chosen);
    check_step(last, step);
    res.diff.push_back(std::move(step));
  }
  return res;
}

std::vector<int> poincare_truncated(const Resolution& res, int upto) {
  std::vector<int> b = res.betti();
  if (upto + 1 < int(b.size())) b.resize(size_t(upto) + 1);
  return b;
}

ModulePresentation syzygy_module(const Resolution& res, int n) {
  if (n == 0) {
    ModulePresentation m = res.module;
    return m;
  }
  if (n + 1 > res.length())
    throw Error(ErrorCode::WindowTooShort,
                "syzygy " + std::to_string(n) + " needs a longer resolution");
  // Omega^n = coker(d_{n+1}); diff is zero-indexed so d_{n+1} = diff[n].
  ModulePresentation out = present(res.diff[size_t(n)]);
  // Omega of MCM stays MCM; over the artinian proxy everything already is.
  out.is_mcm = res.module.ring->artinian() || res.module.is_mcm ||
               n >= res.module.ring->dim();
  return out;
}

ModulePresentation cosyzygy_module(const ModulePresentation& M, int n) {
  if (!M.is_mcm)
    throw Error(ErrorCode::NotMCM, "cosyzygy needs the MCM certificate");
  if (n == 0) return M;
  ModulePresentation D = dual(M);
  Resolution res = resolve(D, n + 1);
  ModulePresentation syz = syzygy_module(res, n);
  return dual(syz);
}

ModulePresentation mcmify(const ModulePresentation& M) {
  int d = M.ring->dim();
  ModulePresentation out = M;
  if (d > 0) {
    Resolution res = resolve(M, d + 1);
    out = syzygy_module(res, d);
  }
  out.is_mcm = true;
  return out;
}

ModulePresentation cone_of_map(const HomElement& f) {
  const ModulePresentation& N = f.target;
  CIPtr ring = N.ring;
  RingPtr q = ring->q();
  // Twist the source so the map has internal degree zero.
  ModulePresentation Mt = twist(f.source, -f.degree);
  if (!Mt.is_mcm)
    throw Error(ErrorCode::NotMCM, "cone_of_map needs an MCM source");
  CosyzygyEmbedding emb = cosyzygy_embedding(Mt);
  int ftop = emb.free_middle.rank();
  std::vector<int> tw = emb.free_middle.twists;
  tw.insert(tw.end(), N.gen_twists().begin(), N.gen_twists().end());
  GradedFreeModule tgt{ring, tw};
  std::vector<FreeVector> cols;
  for (int s = 0; s < Mt.gen_rank(); ++s) {
    FreeVector col(q);
    for (int r = 0; r < ftop; ++r)
      if (!emb.iota[size_t(r)][size_t(s)].is_zero())
        col.set_component(r, emb.iota[size_t(r)][size_t(s)]);
    for (int r = 0; r < N.gen_rank(); ++r)
      if (!f.grid[size_t(r)][size_t(s)].is_zero())
        col.set_component(ftop + r, -f.grid[size_t(r)][size_t(s)]);
    cols.push_back(std::move(col));
  }
  for (int c = 0; c < N.pres.cols(); ++c) {
    FreeVector col(q);
    for (int r = 0; r < N.gen_rank(); ++r)
      if (!N.pres.entry(r, c).is_zero())
        col.set_component(ftop + r, N.pres.entry(r, c));
    cols.push_back(std::move(col));
  }
  ModulePresentation out = present(GradedMatrix::from_columns(tgt, cols));
  out.is_mcm = ring->artinian() || (Mt.is_mcm && N.is_mcm);
  return out;
}

int growth_complexity(const std::vector<int>& betti, int lo, int hi, int cap) {
  lo = std::max(lo, 0);
  hi = std::min(hi, int(betti.size()) - 1);
  bool all_zero = true;
  for (int i = lo; i <= hi; ++i)
    if (betti[size_t(i)] != 0) all_zero = false;
  if (all_zero) return 0;
  for (int r = 1; r <= cap; ++r) {
    bool fits = true;
    for (int parity = 0; parity < 2 && fits; ++parity) {
      std::vector<long> seq;
      for (int i = lo; i <= hi; ++i)
        if (i % 2 == parity) seq.push_back(betti[size_t(i)]);
      if (int(seq.size()) <= r) {
        fits = false;  // not enough tail to certify this r
        break;
      }
      for (int step = 0; step < r; ++step) {
        std::vector<long> next;
        for (size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
        seq = std::move(next);
      }
      for (long v : seq)
        if (v != 0) fits = false;
    }
    if (fits) return r;
  }
  return -1;
}

}  // namespace cisupport
