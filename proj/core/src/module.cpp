#include "cisupport/module.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

GradedMatrix::GradedMatrix(GradedFreeModule source, GradedFreeModule target,
                           std::vector<std::vector<Polynomial>> entries)
    : source_(std::move(source)), target_(std::move(target)),
      entries_(std::move(entries)) {
  const CIRing& A = *target_.ring;
  if (int(entries_.size()) != target_.rank())
    throw Error(ErrorCode::Internal, "matrix row count mismatch");
  for (auto& row : entries_) {
    if (int(row.size()) != source_.rank())
      throw Error(ErrorCode::Internal, "matrix column count mismatch");
    for (Polynomial& f : row)
      if (!f.is_zero()) f = A.nf(f);
  }
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c) {
      const Polynomial& f = entries_[size_t(r)][size_t(c)];
      if (f.is_zero()) continue;
      int want = source_.twists[size_t(c)] - target_.twists[size_t(r)];
      if (!f.is_homogeneous() || f.total_degree() != want)
        throw Error(ErrorCode::InhomogeneousEntry,
                    "entry (" + std::to_string(r) + "," + std::to_string(c) +
                        ") = " + f.to_string() +
                        " is not homogeneous of degree " + std::to_string(want));
    }
}

GradedMatrix GradedMatrix::zero(GradedFreeModule source, GradedFreeModule target) {
  RingPtr q = target.ring->q();
  std::vector<std::vector<Polynomial>> e(
      size_t(target.rank()),
      std::vector<Polynomial>(size_t(source.rank()), Polynomial::zero(q)));
  return GradedMatrix(std::move(source), std::move(target), std::move(e));
}

GradedMatrix GradedMatrix::from_columns(const GradedFreeModule& target,
                                        const std::vector<FreeVector>& cols) {
  RingPtr q = target.ring->q();
  std::vector<int> col_twists;
  for (const FreeVector& v : cols) {
    int d = v.homogeneous_degree(target.twists);
    col_twists.push_back(d == FreeVector::kNoDegree ? 1 : d);  // zero column: moot
  }
  GradedFreeModule src{target.ring, std::move(col_twists)};
  std::vector<std::vector<Polynomial>> e(
      size_t(target.rank()),
      std::vector<Polynomial>(cols.size(), Polynomial::zero(q)));
  for (size_t c = 0; c < cols.size(); ++c)
    for (const auto& [pos, f] : cols[c].components()) e[size_t(pos)][c] = f;
  return GradedMatrix(std::move(src), target, std::move(e));
}

bool GradedMatrix::is_zero() const {
  for (const auto& row : entries_)
    for (const Polynomial& f : row)
      if (!f.is_zero()) return false;
  return true;
}

FreeVector GradedMatrix::column(int c) const {
  FreeVector v(target_.ring->q());
  for (int r = 0; r < rows(); ++r)
    if (!entries_[size_t(r)][size_t(c)].is_zero())
      v.set_component(r, entries_[size_t(r)][size_t(c)]);
  return v;
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& inner) const {
  const CIRing& A = *target_.ring;
  RingPtr q = A.q();
  std::vector<std::vector<Polynomial>> e(
      size_t(rows()),
      std::vector<Polynomial>(size_t(inner.cols()), Polynomial::zero(q)));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < inner.cols(); ++c) {
      Polynomial acc = Polynomial::zero(q);
      for (int k = 0; k < cols(); ++k) {
        const Polynomial& a = entries_[size_t(r)][size_t(k)];
        const Polynomial& b = inner.entry(k, c);
        if (a.is_zero() || b.is_zero()) continue;
        acc = acc + a * b;
      }
      e[size_t(r)][size_t(c)] = A.nf(acc);
    }
  return GradedMatrix(inner.source(), target_, std::move(e));
}

GradedMatrix GradedMatrix::operator-(const GradedMatrix& other) const {
  std::vector<std::vector<Polynomial>> e = entries_;
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      e[size_t(r)][size_t(c)] = entries_[size_t(r)][size_t(c)] - other.entry(r, c);
  return GradedMatrix(source_, target_, std::move(e));
}

DenseMat GradedMatrix::scalar_part() const {
  DenseMat m(target_.ring->field(), size_t(rows()), size_t(cols()));
  for (int r = 0; r < rows(); ++r)
    for (int c = 0; c < cols(); ++c)
      m.set(size_t(r), size_t(c), entries_[size_t(r)][size_t(c)].coefficient_of(Monomial{}));
  return m;
}

GradedMatrix minimalize(GradedMatrix m) {
  CIPtr A = m.target().ring;
  RingPtr q = A->q();
  const PrimeField& F = A->field();
  // Work on mutable copies of the data.
  std::vector<int> row_twists = m.target().twists;
  std::vector<int> col_twists = m.source().twists;
  std::vector<std::vector<Polynomial>> e;
  for (int r = 0; r < m.rows(); ++r) {
    e.push_back({});
    for (int c = 0; c < m.cols(); ++c) e.back().push_back(m.entry(r, c));
  }

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t c = 0; c < col_twists.size() && !changed; ++c) {
      for (size_t r = 0; r < row_twists.size() && !changed; ++r) {
        const Polynomial& piv = e[r][c];
        if (piv.is_zero() || !piv.is_constant()) continue;
        uint32_t inv = F.inv(piv.lead().coeff);
        // Column operations clear row r, then drop row r and column c.
        for (size_t c2 = 0; c2 < col_twists.size(); ++c2) {
          if (c2 == c || e[r][c2].is_zero()) continue;
          Polynomial mult = e[r][c2].scaled(inv);
          for (size_t r2 = 0; r2 < row_twists.size(); ++r2)
            e[r2][c2] = A->nf(e[r2][c2] - e[r2][c] * mult);
        }
        for (auto& row : e) row.erase(row.begin() + long(c));
        e.erase(e.begin() + long(r));
        col_twists.erase(col_twists.begin() + long(c));
        row_twists.erase(row_twists.begin() + long(r));
        changed = true;
      }
    }
  }
  // Drop zero relation columns.
  for (size_t c = col_twists.size(); c-- > 0;) {
    bool zero = true;
    for (size_t r = 0; r < row_twists.size(); ++r)
      if (!e[r][c].is_zero()) zero = false;
    if (zero) {
      for (auto& row : e) row.erase(row.begin() + long(c));
      col_twists.erase(col_twists.begin() + long(c));
    }
  }
  GradedFreeModule src{A, col_twists};
  GradedFreeModule tgt{A, row_twists};
  return GradedMatrix(std::move(src), std::move(tgt), std::move(e));
}

ModulePresentation present(GradedMatrix m) {
  CIPtr ring = m.target().ring;
  ModulePresentation out{ring, minimalize(std::move(m)), false};
  if (ring->artinian()) out.is_mcm = true;  // depth 0 = dim 0 always holds
  return out;
}

ModulePresentation free_module(CIPtr ring, std::vector<int> twists) {
  GradedFreeModule tgt{ring, std::move(twists)};
  GradedFreeModule src{ring, {}};
  return present(GradedMatrix::zero(std::move(src), std::move(tgt)));
}

ModulePresentation residue_field(CIPtr ring) {
  RingPtr q = ring->q();
  GradedFreeModule tgt{ring, {0}};
  std::vector<int> ct;
  std::vector<std::vector<Polynomial>> e(1);
  for (int v = 0; v < ring->nvars(); ++v) {
    ct.push_back(1);
    e[0].push_back(Polynomial::variable(q, v));
  }
  GradedFreeModule src{ring, ct};
  return present(GradedMatrix(std::move(src), std::move(tgt), std::move(e)));
}

ModulePresentation direct_sum(const ModulePresentation& a,
                              const ModulePresentation& b) {
  CIPtr ring = a.ring;
  RingPtr q = ring->q();
  std::vector<int> rt = a.pres.target().twists;
  rt.insert(rt.end(), b.pres.target().twists.begin(), b.pres.target().twists.end());
  std::vector<int> ct = a.pres.source().twists;
  ct.insert(ct.end(), b.pres.source().twists.begin(), b.pres.source().twists.end());
  std::vector<std::vector<Polynomial>> e(
      rt.size(), std::vector<Polynomial>(ct.size(), Polynomial::zero(q)));
  for (int r = 0; r < a.pres.rows(); ++r)
    for (int c = 0; c < a.pres.cols(); ++c) e[size_t(r)][size_t(c)] = a.pres.entry(r, c);
  for (int r = 0; r < b.pres.rows(); ++r)
    for (int c = 0; c < b.pres.cols(); ++c)
      e[size_t(a.pres.rows() + r)][size_t(a.pres.cols() + c)] = b.pres.entry(r, c);
  GradedFreeModule src{ring, ct};
  GradedFreeModule tgt{ring, rt};
  ModulePresentation out{ring, GradedMatrix(std::move(src), std::move(tgt), std::move(e)),
                         a.is_mcm && b.is_mcm};
  return out;
}

ModulePresentation twist(const ModulePresentation& m, int e) {
  // M(e): all degrees shift down by e.
  std::vector<int> rt = m.pres.target().twists;
  std::vector<int> ct = m.pres.source().twists;
  for (int& t : rt) t -= e;
  for (int& t : ct) t -= e;
  std::vector<std::vector<Polynomial>> entries;
  for (int r = 0; r < m.pres.rows(); ++r) {
    entries.push_back({});
    for (int c = 0; c < m.pres.cols(); ++c) entries.back().push_back(m.pres.entry(r, c));
  }
  GradedFreeModule src{m.ring, ct};
  GradedFreeModule tgt{m.ring, rt};
  return ModulePresentation{m.ring, GradedMatrix(std::move(src), std::move(tgt), std::move(entries)),
                            m.is_mcm};
}

bool is_free(const ModulePresentation& m) { return m.pres.cols() == 0; }

bool is_zero_module(const ModulePresentation& m) {
  return m.pres.target().rank() == 0;
}

// ---- submodule machinery ----

namespace {
void add_u_extension(GroebnerEngine& eng, const CIRing& A, int rank) {
  for (int pos = 0; pos < rank; ++pos)
    for (const Polynomial& uj : A.u())
      eng.add_generator(FreeVector::from_component(pos, uj));
}
}  // namespace

SubmoduleOverA::SubmoduleOverA(CIPtr ring, int ambient_rank,
                               const std::vector<FreeVector>& gens)
    : ring_(std::move(ring)), eng_(ring_->q(), ambient_rank, false) {
  for (const FreeVector& g : gens) eng_.add_generator(g);
  add_u_extension(eng_, *ring_, ambient_rank);
  eng_.saturate();
}

FreeVector SubmoduleOverA::nf(FreeVector v) const {
  return eng_.reduce(std::move(v));
}

std::vector<FreeVector> syzygies_over_A(const CIPtr& ring, int ambient_rank,
                                        const std::vector<FreeVector>& gens) {
  GroebnerEngine eng(ring->q(), ambient_rank, true);
  for (const FreeVector& g : gens) eng.add_generator(g);
  add_u_extension(eng, *ring, ambient_rank);
  eng.saturate();
  std::vector<FreeVector> out;
  for (const FreeVector& s : eng.syzygies()) {
    // Keep the coordinates on the real generators, reduce mod (u).
    FreeVector cut(ring->q());
    for (const auto& [pos, f] : s.components()) {
      if (pos >= int(gens.size())) continue;
      Polynomial r = ring->nf(f);
      if (!r.is_zero()) cut.set_component(pos, std::move(r));
    }
    if (!cut.is_zero()) out.push_back(std::move(cut));
  }
  return out;
}

std::vector<int> minimal_generator_indices(
    const CIPtr& ring, const std::vector<int>& ambient_twists,
    const std::vector<FreeVector>& gens) {
  int rank = int(ambient_twists.size());
  std::vector<std::pair<int, int>> order;  // (degree, index)
  for (int i = 0; i < int(gens.size()); ++i) {
    if (gens[size_t(i)].is_zero()) continue;
    order.push_back({gens[size_t(i)].homogeneous_degree(ambient_twists), i});
  }
  std::sort(order.begin(), order.end());
  GroebnerEngine eng(ring->q(), rank, false);
  add_u_extension(eng, *ring, rank);
  eng.saturate();
  std::vector<int> kept;
  for (auto [deg, i] : order) {
    FreeVector r = eng.reduce(gens[size_t(i)]);
    if (r.is_zero()) continue;
    kept.push_back(i);
    eng.add_generator(std::move(r));
    eng.saturate();
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace cisupport
