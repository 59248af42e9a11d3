#include "cisupport/pieces.hpp"

#include "cisupport/errors.hpp"

namespace cisupport {

ModulePieces::ModulePieces(ModulePresentation M, int lo, int hi)
    : mod_(std::move(M)), lo_(lo), hi_(hi) {
  const CIRing& A = *mod_.ring;
  const PrimeField& F = A.field();
  const GradedMatrix& P = mod_.pres;
  for (int d = lo_; d <= hi_; ++d) {
    Layer layer(F, 0);
    // Ambient slots of degree d.
    for (int g = 0; g < P.target().rank(); ++g) {
      int mdeg = d - P.target().twists[size_t(g)];
      for (const Monomial& m : A.std_monomials(mdeg)) {
        layer.slot_index[{g, m.e}] = int(layer.slots.size());
        layer.slots.push_back({g, m});
      }
    }
    size_t n = layer.slots.size();
    layer.relations = RowSpace(F, n);
    // Relations: standard-monomial multiples of the presentation columns.
    for (int c = 0; c < P.cols(); ++c) {
      int cdeg = P.source().twists[size_t(c)];
      for (const Monomial& m : A.std_monomials(d - cdeg)) {
        std::vector<uint32_t> row(n, 0);
        bool any = false;
        for (int g = 0; g < P.rows(); ++g) {
          const Polynomial& entry = P.entry(g, c);
          if (entry.is_zero()) continue;
          Polynomial prod = A.nf(entry.times_term(m, 1));
          for (const Term& t : prod.terms()) {
            auto it = layer.slot_index.find({g, t.mono.e});
            if (it == layer.slot_index.end())
              throw Error(ErrorCode::Internal, "piece slot lookup failed");
            row[size_t(it->second)] = F.add(row[size_t(it->second)], t.coeff);
            any = true;
          }
        }
        if (any) layer.relations.add(std::move(row));
      }
    }
    // Quotient basis: slots that are not pivots of the relation space.
    std::vector<bool> pivot(n, false);
    {
      const auto& rows = layer.relations.rows();
      for (const auto& r : rows) {
        size_t p = 0;
        while (p < n && r[p] == 0) ++p;
        if (p < n) pivot[p] = true;
      }
    }
    layer.slot_to_basis.assign(n, -1);
    for (size_t s = 0; s < n; ++s) {
      if (pivot[s]) continue;
      layer.slot_to_basis[s] = int(layer.basis_slots.size());
      layer.basis_slots.push_back(int(s));
    }
    layers_.push_back(std::move(layer));
  }
}

const ModulePieces::Layer& ModulePieces::layer(int d) const {
  if (d < lo_ || d > hi_)
    throw Error(ErrorCode::WindowTooShort,
                "degree " + std::to_string(d) + " outside piece window");
  return layers_[size_t(d - lo_)];
}

int ModulePieces::dim(int d) const {
  if (d < lo_ || d > hi_) return 0;
  return int(layer(d).basis_slots.size());
}

std::vector<uint32_t> ModulePieces::ambient_coords(const FreeVector& v,
                                                   int d) const {
  const Layer& L = layer(d);
  const PrimeField& F = mod_.ring->field();
  std::vector<uint32_t> out(L.slots.size(), 0);
  for (const auto& [pos, f] : v.components()) {
    for (const Term& t : f.terms()) {
      auto it = L.slot_index.find({pos, t.mono.e});
      if (it == L.slot_index.end())
        throw Error(ErrorCode::Internal, "ambient vector has off-degree term");
      out[size_t(it->second)] = F.add(out[size_t(it->second)], t.coeff);
    }
  }
  return out;
}

std::vector<uint32_t> ModulePieces::coords(const FreeVector& v, int d) const {
  const Layer& L = layer(d);
  std::vector<uint32_t> amb = L.relations.reduce(ambient_coords(v, d));
  std::vector<uint32_t> out(L.basis_slots.size(), 0);
  for (size_t s = 0; s < amb.size(); ++s) {
    if (!amb[s]) continue;
    int b = L.slot_to_basis[s];
    if (b < 0)
      throw Error(ErrorCode::Internal, "reduced vector hit a pivot slot");
    out[size_t(b)] = amb[s];
  }
  return out;
}

FreeVector ModulePieces::basis_vector(int d, int i) const {
  const Layer& L = layer(d);
  auto [g, m] = L.slots[size_t(L.basis_slots[size_t(i)])];
  return FreeVector::from_component(
      g, Polynomial::monomial(mod_.ring->q(), m, 1));
}

DenseMat ModulePieces::mul_by(const Polynomial& f, int d) const {
  const CIRing& A = *mod_.ring;
  const PrimeField& F = A.field();
  int e = d + std::max(0, f.total_degree());
  DenseMat out(F, size_t(dim(e)), size_t(dim(d)));
  // Outside the window the module vanishes (artinian) or is truncated by
  // the configured degree window; either way the map is zero.
  if (f.is_zero() || dim(e) == 0 || dim(d) == 0) return out;
  for (int i = 0; i < dim(d); ++i) {
    FreeVector lift = basis_vector(d, i);
    FreeVector image(mod_.ring->q());
    for (const auto& [pos, g] : lift.components())
      image.set_component(pos, A.nf(g * f));
    std::vector<uint32_t> col = coords(image, e);
    for (size_t r = 0; r < col.size(); ++r) out.set(r, size_t(i), col[r]);
  }
  return out;
}

}  // namespace cisupport
