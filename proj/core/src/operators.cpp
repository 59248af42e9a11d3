#include "cisupport/operators.hpp"

#include "cisupport/errors.hpp"

namespace cisupport {

namespace {
PolyGrid grid_of(const GradedMatrix& m) {
  PolyGrid g;
  for (int r = 0; r < m.rows(); ++r) {
    g.push_back({});
    for (int c = 0; c < m.cols(); ++c) g.back().push_back(m.entry(r, c));
  }
  return g;
}

// Raw product over Q (no reduction mod u).
PolyGrid grid_mul(RingPtr q, const PolyGrid& a, const PolyGrid& b) {
  size_t rows = a.size();
  size_t mid = b.size();
  size_t cols = mid == 0 ? 0 : b[0].size();
  PolyGrid out(rows, std::vector<Polynomial>(cols, Polynomial::zero(q)));
  for (size_t r = 0; r < rows; ++r)
    for (size_t k = 0; k < mid; ++k) {
      if (a[r][k].is_zero()) continue;
      for (size_t c = 0; c < cols; ++c) {
        if (b[k][c].is_zero()) continue;
        out[r][c] = out[r][c] + a[r][k] * b[k][c];
      }
    }
  return out;
}

PolyGrid grid_scale_add(RingPtr q, const PolyGrid& acc, const PolyGrid& g,
                        const Polynomial& f) {
  PolyGrid out = acc;
  for (size_t r = 0; r < g.size(); ++r)
    for (size_t c = 0; c < g[r].size(); ++c)
      if (!g[r][c].is_zero()) out[r][c] = out[r][c] + g[r][c] * f;
  return out;
}
}  // namespace

LiftedResolution lift(const Resolution& res) {
  // Entries are already normal-form representatives in Q: the canonical lift.
  LiftedResolution out;
  for (const GradedMatrix& d : res.diff) out.dtilde.push_back(grid_of(d));
  return out;
}

OperatorDecomposition square_decompose(const LiftedResolution& lifted,
                                       const Resolution& res) {
  const CIRing& A = *res.module.ring;
  RingPtr q = A.q();
  // One tracked basis of (u) shared by every entry.
  GroebnerEngine ueng(q, 1, true);
  for (const Polynomial& uj : A.u())
    ueng.add_generator(FreeVector::from_component(0, uj));
  ueng.saturate();

  OperatorDecomposition dec;
  dec.t.assign(A.u().size(), {});
  int nsquares = int(lifted.dtilde.size()) - 1;
  for (int i = 0; i < nsquares; ++i) {
    PolyGrid sq = grid_mul(q, lifted.dtilde[size_t(i)], lifted.dtilde[size_t(i) + 1]);
    size_t rows = sq.size();
    size_t cols = sq.empty() ? 0 : sq[0].size();
    for (size_t j = 0; j < A.u().size(); ++j)
      dec.t[j].push_back(PolyGrid(rows, std::vector<Polynomial>(cols, Polynomial::zero(q))));
    for (size_t r = 0; r < rows; ++r)
      for (size_t c = 0; c < cols; ++c) {
        if (sq[r][c].is_zero()) continue;
        auto coeffs = ueng.express(FreeVector::from_component(0, sq[r][c]));
        if (!coeffs)
          throw Error(ErrorCode::DecompositionFailed,
                      "squared lifted differential has an entry outside (u)");
        // express() returns coefficients against u in input order.
        for (size_t j = 0; j < A.u().size(); ++j)
          dec.t[j].back()[r][c] = (*coeffs)[j];
      }
  }
  return dec;
}

EisenbudAction action_on_ext(const OperatorDecomposition& dec,
                             const Resolution& res) {
  const CIRing& A = *res.module.ring;
  const PrimeField& F = A.field();
  EisenbudAction act;
  act.betti = res.betti();
  size_t c = dec.t.size();
  act.chi.assign(c, {});
  int top = act.top();
  for (int i = 0; i + 2 <= top; ++i) {
    for (size_t j = 0; j < c; ++j) {
      // chi_j^(i) = (t_j^(i+2) mod m)^T : k^{beta_i} -> k^{beta_{i+2}}.
      const PolyGrid& g = dec.t[j][size_t(i)];
      DenseMat chi(F, size_t(act.betti[size_t(i) + 2]), size_t(act.betti[size_t(i)]));
      for (size_t r = 0; r < g.size(); ++r)
        for (size_t col = 0; col < g[r].size(); ++col) {
          uint32_t v = g[r][col].coefficient_of(Monomial{});
          if (v) chi.set(col, r, v);
        }
      act.chi[j].push_back(std::move(chi));
    }
  }
  return act;
}

HomElement chain_map_of(const OperatorPolynomial& eta, const Resolution& res,
                        const OperatorDecomposition& dec) {
  const CIRing& A = *res.module.ring;
  RingPtr q = A.q();
  if (eta.eta.is_zero() || !eta.eta.is_homogeneous())
    throw Error(ErrorCode::Internal, "chain_map_of expects a homogeneous nonzero eta");
  int e = eta.eta.total_degree();
  if (res.length() < 2 * e + 1)
    throw Error(ErrorCode::WindowTooShort,
                "chain_map_of needs resolution length >= " + std::to_string(2 * e + 1));
  int c = A.codim();
  int rank0 = res.F(0).rank();
  int rank2e = res.F(2 * e).rank();
  PolyGrid acc(size_t(rank0), std::vector<Polynomial>(size_t(rank2e), Polynomial::zero(q)));
  int weight = -1;  // internal degree drop of the composite chain map
  for (const Term& term : eta.eta.terms()) {
    // Composite t~ path: apply variables in ascending index, each at the
    // current homological level, descending from 2e to 0.
    PolyGrid mat(size_t(rank2e), std::vector<Polynomial>(size_t(rank2e), Polynomial::zero(q)));
    for (int r = 0; r < rank2e; ++r)
      mat[size_t(r)][size_t(r)] = Polynomial::constant(q, 1);
    int level = 2 * e;
    int w = 0;
    for (int j = 0; j < c; ++j) {
      for (int rep = 0; rep < term.mono.e[size_t(j)]; ++rep) {
        const PolyGrid& tj = dec.t[size_t(j)][size_t(level - 2)];
        // tj : F_level -> F_{level-2}
        mat = grid_mul(q, tj, mat);
        level -= 2;
        w += A.u()[size_t(j)].total_degree();
      }
    }
    if (weight >= 0 && w != weight)
      throw Error(ErrorCode::Internal,
                  "chain_map_of: mixed u-degrees make eta(t~) inhomogeneous");
    weight = w;
    Polynomial coeff = Polynomial::constant(q, int64_t(term.coeff));
    acc = grid_scale_add(q, acc, mat, coeff);
  }
  // Reduce mod u and wrap as a hom from Omega^{2e}M; its internal degree is
  // -weight (each u_j application lowers degree by deg u_j).
  ModulePresentation source = syzygy_module(res, 2 * e);
  HomElement h{source, res.module, -weight, {}};
  h.grid.assign(size_t(rank0), std::vector<Polynomial>(size_t(rank2e), Polynomial::zero(q)));
  for (size_t r = 0; r < acc.size(); ++r)
    for (size_t col = 0; col < acc[r].size(); ++col)
      h.grid[r][col] = A.nf(acc[r][col]);
  return h;
}

}  // namespace cisupport
