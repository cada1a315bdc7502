#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "maschke/algebra/rational.hpp"

namespace maschke::algebra {

// dense univariate polynomial, coefficients low degree first, no trailing zeros
template <class C>
class UPoly {
 public:
  using T = CoeffTraits<C>;

  UPoly() = default;
  explicit UPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const C& v) { return UPoly(std::vector<C>{v}); }
  static UPoly monomial(const C& v, std::size_t deg) {
    std::vector<C> c(deg + 1, T::zero());
    c[deg] = v;
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T::zero(); }
  const C& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  C eval(const C& x) const {
    C acc = T::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    std::vector<C> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * C(static_cast<long>(i)));
    return UPoly(std::move(d));
  }

  UPoly monic() const {
    C inv = T::inverse(lead());
    std::vector<C> c = c_;
    for (auto& v : c) v = v * inv;
    return UPoly(std::move(c));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T::zero());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  UPoly operator-() const {
    std::vector<C> c = c_;
    for (auto& v : c) v = T::zero() - v;
    return UPoly(std::move(c));
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> c(a.c_.size() + b.c_.size() - 1, T::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(c));
  }
  friend UPoly operator*(const C& s, const UPoly& a) {
    std::vector<C> c = a.c_;
    for (auto& v : c) v = s * v;
    return UPoly(std::move(c));
  }
  friend bool operator==(const UPoly& a, const UPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  // f = q*g + r, deg r < deg g; coefficients must form a field
  static std::pair<UPoly, UPoly> divrem(const UPoly& f, const UPoly& g) {
    if (g.is_zero()) throw std::domain_error("division by zero polynomial");
    C inv = T::inverse(g.lead());
    std::vector<C> r = f.c_;
    int dg = g.degree();
    int df = f.degree();
    if (df < dg) return {UPoly(), f};
    std::vector<C> q(df - dg + 1, T::zero());
    for (int i = df; i >= dg; --i) {
      if (T::is_zero(r[i])) continue;
      C factor = r[i] * inv;
      q[i - dg] = factor;
      for (int j = 0; j <= dg; ++j) r[i - dg + j] = r[i - dg + j] - factor * g.c_[j];
    }
    r.resize(dg);
    return {UPoly(std::move(q)), UPoly(std::move(r))};
  }

  static UPoly gcd(UPoly a, UPoly b) {
    while (!b.is_zero()) {
      UPoly r = divrem(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
  }

  // returns (g, s, t) with s*a + t*b = g monic
  static std::tuple<UPoly, UPoly, UPoly> xgcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = constant(T::one()), s1;
    UPoly t0, t1 = constant(T::one());
    while (!r1.is_zero()) {
      auto [q, r] = divrem(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      UPoly s2 = s0 - q * s1;
      s0 = std::move(s1);
      s1 = std::move(s2);
      UPoly t2 = t0 - q * t1;
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    C inv = T::inverse(r0.lead());
    return {inv * r0, inv * s0, inv * t0};
  }

  std::string to_string(const std::string& var = "x") const {
    if (c_.empty()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
      if (T::is_zero(c_[i])) continue;
      if (!s.empty()) s += " + ";
      s += "(" + T::str(c_[i]) + ")";
      if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && T::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

using QPoly = UPoly<BigRational>;

// resultant over a field by the Euclidean algorithm
template <class C>
C resultant(UPoly<C> a, UPoly<C> b) {
  using T = CoeffTraits<C>;
  if (a.is_zero() || b.is_zero()) return T::zero();
  C res = T::one();
  while (b.degree() > 0) {
    int da = a.degree(), db = b.degree();
    UPoly<C> r = UPoly<C>::divrem(a, b).second;
    if (r.is_zero()) return T::zero();
    if ((da % 2 == 1) && (db % 2 == 1)) res = T::zero() - res;
    C lb = b.lead();
    for (int k = 0; k < da - r.degree(); ++k) res = res * lb;
    a = std::move(b);
    b = std::move(r);
  }
  C lb = b.lead();
  for (int k = 0; k < a.degree(); ++k) res = res * lb;
  return res;
}

}  // namespace maschke::algebra
