#pragma once

#include <cstdint>

#include "cisupport/errors.hpp"

namespace cisupport {

// Arithmetic in F_p, p an odd-or-even prime < 2^31. Values live in [0, p).
// Everything here is exact; there is no floating point anywhere in the kernel.
class PrimeField {
 public:
  explicit PrimeField(uint32_t p) : p_(p) {
    if (!is_prime(p)) throw Error(ErrorCode::Internal, "modulus is not prime");
  }

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((uint64_t(a) * b) % p_);
  }
  uint32_t pow(uint32_t a, uint64_t e) const {
    uint32_t r = 1 % p_;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw Error(ErrorCode::Internal, "division by zero in F_p");
    // Extended Euclid; p prime so every nonzero a is a unit.
    int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
      int64_t q = r / nr;
      int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<uint32_t>(t);
  }
  uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }

  uint32_t from_int(int64_t v) const {
    int64_t r = v % int64_t(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  static bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
      if (n % d == 0) return false;
    return true;
  }

 private:
  uint32_t p_;
};

}  // namespace cisupport
