#pragma once

#include <memory>
#include <string>

#include "maschke/algebra/univariate.hpp"

namespace maschke::algebra {

// Q[x]/(m) with m normalized monic
class QuotRing {
 public:
  QuotRing(QPoly modulus, std::string var = "x");
  const QPoly& modulus() const { return modulus_; }
  const std::string& var() const { return var_; }
  QPoly reduce(const QPoly& f) const { return QPoly::divrem(f, modulus_).second; }

 private:
  QPoly modulus_;
  std::string var_;
};

using QuotRingPtr = std::shared_ptr<const QuotRing>;

QuotRingPtr make_quot_ring(const QPoly& modulus, const std::string& var = "x");

// element of a quotient ring; a null ring marks a plain rational constant,
// which adopts the ring of whatever it is combined with
class QuotElem {
 public:
  QuotElem() = default;
  QuotElem(long v) : value_(QPoly::constant(BigRational(v))) {}
  QuotElem(const BigRational& v) : value_(QPoly::constant(v)) {}
  QuotElem(QuotRingPtr ring, QPoly value);
  static QuotElem generator(QuotRingPtr ring);

  const QuotRingPtr& ring() const { return ring_; }
  const QPoly& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  QuotElem inverse() const;

  QuotElem& operator+=(const QuotElem& o);
  QuotElem& operator-=(const QuotElem& o);
  QuotElem& operator*=(const QuotElem& o);
  QuotElem& operator/=(const QuotElem& o) { return *this *= o.inverse(); }
  QuotElem operator-() const { return QuotElem(ring_, -value_); }

  friend QuotElem operator+(QuotElem a, const QuotElem& b) { return a += b; }
  friend QuotElem operator-(QuotElem a, const QuotElem& b) { return a -= b; }
  friend QuotElem operator*(QuotElem a, const QuotElem& b) { return a *= b; }
  friend QuotElem operator/(QuotElem a, const QuotElem& b) { return a /= b; }
  friend bool operator==(const QuotElem& a, const QuotElem& b);
  friend bool operator!=(const QuotElem& a, const QuotElem& b) { return !(a == b); }

  std::string to_string() const;

 private:
  void adopt(const QuotElem& o);
  QuotRingPtr ring_;
  QPoly value_;
};

template <>
struct CoeffTraits<QuotElem> {
  static bool is_zero(const QuotElem& c) { return c.is_zero(); }
  static QuotElem one() { return QuotElem(1); }
  static QuotElem zero() { return QuotElem(); }
  static QuotElem inverse(const QuotElem& c) { return c.inverse(); }
  static std::string str(const QuotElem& c) { return c.to_string(); }
};

}  // namespace maschke::algebra
