#include "cisupport/ci.hpp"

#include <algorithm>

#include "cisupport/errors.hpp"

namespace cisupport {

CIRing::CIRing(RingPtr q, std::vector<Polynomial> u)
    : q_(std::move(q)), u_(std::move(u)) {
  if (u_.empty())
    throw Error(ErrorCode::NotRegularSequence, "need at least one u_j (c >= 1)");
  for (const Polynomial& f : u_) {
    if (f.is_zero() || !f.is_homogeneous() || f.total_degree() < 2)
      throw Error(ErrorCode::NotInSquareOfMaxIdeal,
                  "each u_j must be homogeneous of degree >= 2");
  }
  gb_ = groebner(u_);
  int expected = nvars() - codim();
  if (expected < 0 || krull_dimension(gb_) != expected)
    throw Error(ErrorCode::NotRegularSequence,
                "dim Q/(u) != n - c; u is not a regular sequence");
  std::vector<std::string> tvars;
  for (int j = 1; j <= codim(); ++j) tvars.push_back("t" + std::to_string(j));
  t_ring_ = make_ring(q_->field().p(), tvars);
}

FreeVector CIRing::nf(FreeVector v) const {
  FreeVector out(q_);
  for (const auto& [pos, f] : v.components()) {
    Polynomial r = nf(f);
    if (!r.is_zero()) out.set_component(pos, std::move(r));
  }
  return out;
}

std::vector<Monomial> CIRing::std_monomials(int deg) const {
  std::vector<Monomial> out;
  if (deg < 0) return out;
  int n = nvars();
  // Enumerate exponent vectors of total degree `deg`, skipping anything
  // under the lead-term ideal of (u).
  std::vector<Monomial> leads;
  for (const Polynomial& g : gb_.gens) leads.push_back(g.lead().mono);
  auto is_standard = [&](const Monomial& cand) {
    for (const Monomial& l : leads)
      if (l.divides(cand)) return false;
    return true;
  };
  std::vector<int> e(size_t(n), 0);
  auto rec = [&](auto&& self, int var, int rem) -> void {
    if (var == n - 1) {
      e[size_t(var)] = rem;
      Monomial mm;
      int d = 0;
      for (int i = 0; i < n; ++i) {
        mm.e[size_t(i)] = uint8_t(e[size_t(i)]);
        d += e[size_t(i)];
      }
      mm.deg = uint16_t(d);
      if (is_standard(mm)) out.push_back(mm);
      return;
    }
    for (int k = rem; k >= 0; --k) {
      e[size_t(var)] = k;
      self(self, var + 1, rem - k);
    }
  };
  rec(rec, 0, deg);
  // Sort descending in the ring order for reproducible bases.
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return q_->cmp(a, b) > 0;
  });
  return out;
}

int CIRing::top_socle_degree() const {
  if (!artinian())
    throw Error(ErrorCode::Internal, "top_socle_degree needs artinian A");
  int bound = 0;
  for (const Polynomial& f : u_) bound += f.total_degree();
  for (int d = bound; d >= 0; --d)
    if (!std_monomials(d).empty()) return d;
  return 0;
}

int CIRing::max_u_degree() const {
  int m = 0;
  for (const Polynomial& f : u_) m = std::max(m, f.total_degree());
  return m;
}

CICertificate validate_ci(const CIRing& ring) {
  return CICertificate{ring.codim(), ring.dim()};
}

CIPtr make_ci(RingPtr q, std::vector<Polynomial> u) {
  return std::make_shared<const CIRing>(std::move(q), std::move(u));
}

}  // namespace cisupport
