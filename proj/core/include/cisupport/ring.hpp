#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "cisupport/field.hpp"

namespace cisupport {

// Hard cap on ring arity. Largest ring the system ever builds is
// Q-vars + 1 auxiliary variable (radical membership), so 16 is roomy.
inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = 255;

struct Monomial {
  std::array<uint8_t, kMaxVars> e{};
  uint16_t deg = 0;

  bool is_one() const { return deg == 0; }

  bool divides(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  bool coprime_with(const Monomial& m) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] + m.e[i]);
    r.deg = uint16_t(deg + m.deg);
    return r;
  }
  // Requires m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint8_t(e[i] - m.e[i]);
    r.deg = uint16_t(deg - m.deg);
    return r;
  }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    int d = 0;
    for (int i = 0; i < kMaxVars; ++i) {
      r.e[i] = a.e[i] > b.e[i] ? a.e[i] : b.e[i];
      d += r.e[i];
    }
    r.deg = uint16_t(d);
    return r;
  }
  static Monomial variable(int i) {
    Monomial r;
    r.e[i] = 1;
    r.deg = 1;
    return r;
  }
  bool operator==(const Monomial& m) const { return deg == m.deg && e == m.e; }
  bool operator!=(const Monomial& m) const { return !(*this == m); }
};

enum class OrderKind { GrevLex };

// Polynomial ring F_p[x_0..x_{n-1}] with a graded monomial order.
// Shared immutable context; Polynomial values hold a RingPtr to it.
class PolyRing {
 public:
  PolyRing(PrimeField field, std::vector<std::string> vars,
           OrderKind kind = OrderKind::GrevLex,
           std::vector<int> priority = {})
      : field_(field), vars_(std::move(vars)), kind_(kind),
        priority_(std::move(priority)) {
    if (int(vars_.size()) > kMaxVars)
      throw Error(ErrorCode::Internal, "too many variables");
    if (priority_.empty()) {
      priority_.resize(vars_.size());
      std::iota(priority_.begin(), priority_.end(), 0);
    }
  }

  const PrimeField& field() const { return field_; }
  int nvars() const { return int(vars_.size()); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  OrderKind order_kind() const { return kind_; }
  const std::vector<int>& priority() const { return priority_; }

  // Graded reverse lexicographic under the priority permutation.
  // Returns <0, 0, >0 for a<b, a==b, a>b.
  int cmp(const Monomial& a, const Monomial& b) const {
    if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
    for (int slot = int(priority_.size()) - 1; slot >= 0; --slot) {
      int v = priority_[slot];
      if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
    }
    return 0;
  }

  bool same_ring(const PolyRing& other) const {
    return field_.p() == other.field_.p() && vars_ == other.vars_ &&
           priority_ == other.priority_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  OrderKind kind_;
  std::vector<int> priority_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(uint32_t p, std::vector<std::string> vars) {
  return std::make_shared<const PolyRing>(PrimeField(p), std::move(vars));
}

}  // namespace cisupport
