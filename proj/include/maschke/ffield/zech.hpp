#pragma once

#include <cstdint>
#include <vector>

#include "maschke/ffield/field.hpp"

namespace maschke::ffield {

// F_q in discrete-log form for inner loops: an element is its log to a fixed
// primitive root g, and zero is the sentinel q-1. Multiplication adds logs,
// addition uses the Zech table Z(n) = log(1 + g^n). Because g is a non-square,
// an element is a square iff its log is even.
class ZechField {
 public:
  using E = std::uint32_t;

  explicit ZechField(FieldPtr ctx);

  const FieldPtr& ctx() const { return ctx_; }
  std::uint64_t q() const { return q_; }
  E zero() const { return zero_; }
  E one() const { return 0; }
  bool is_zero(E a) const { return a == zero_; }

  E from_int(std::int64_t v) const;
  E from_fq(const FqElem& x) const { return log_[x.index()]; }
  FqElem to_fq(E a) const;

  E mul(E a, E b) const {
    if (a == zero_ || b == zero_) return zero_;
    E s = a + b;
    return s >= order_ ? s - order_ : s;
  }
  E sqr(E a) const { return mul(a, a); }
  E add(E a, E b) const {
    if (a == zero_) return b;
    if (b == zero_) return a;
    E d = b >= a ? b - a : b + order_ - a;
    E z = zech_[d];
    if (z == zero_) return zero_;
    E s = a + z;
    return s >= order_ ? s - order_ : s;
  }
  E neg(E a) const {
    if (a == zero_) return zero_;
    E s = a + half_;
    return s >= order_ ? s - order_ : s;
  }
  E sub(E a, E b) const { return add(a, neg(b)); }
  E inv(E a) const { return a == 0 ? 0 : order_ - a; }
  int chi(E a) const { return a == zero_ ? 0 : ((a & 1u) ? -1 : 1); }
  // one square root of a square, false for non-squares
  bool sqrt(E a, E* r) const {
    if (a == zero_) {
      *r = zero_;
      return true;
    }
    if (a & 1u) return false;
    *r = a / 2;
    return true;
  }
  E pow(E a, std::uint64_t e) const;

 private:
  FieldPtr ctx_;
  std::uint64_t q_;
  E order_;  // q - 1
  E half_;   // (q - 1)/2, the log of -1
  E zero_;
  std::vector<E> log_;   // by FqElem index
  std::vector<std::uint64_t> exp_;  // FqElem index by log
  std::vector<E> zech_;
};

}  // namespace maschke::ffield
