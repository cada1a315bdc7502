#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace maschke::algebra {

using BigInt = mpz_class;
using BigRational = mpq_class;

// canonical num/den; throws std::domain_error on a zero denominator
BigRational make_rational(const BigInt& num, const BigInt& den);

bool is_integral(const BigRational& r);
// throws std::domain_error if r is not an integer
BigInt to_integer(const BigRational& r);
std::int64_t to_int64(const BigInt& z);
std::string to_string(const BigInt& z);
std::string to_string(const BigRational& r);

BigInt ipow(const BigInt& base, unsigned e);
BigRational rpow(const BigRational& base, unsigned e);

// sign times the product of primes dividing n to an odd power; n != 0
BigInt squarefree_part(const BigInt& n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

// Gaussian rationals re + im*i
struct GaussRational {
  BigRational re;
  BigRational im;

  GaussRational() = default;
  GaussRational(BigRational r) : re(std::move(r)), im(0) {}
  GaussRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}
  GaussRational(long r) : re(r), im(0) {}

  static GaussRational i() { return {BigRational(0), BigRational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  GaussRational conj() const { return {re, BigRational(-im)}; }
  BigRational norm() const { return BigRational(re * re + im * im); }
  GaussRational inverse() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);
  GaussRational operator-() const { return {BigRational(-re), BigRational(-im)}; }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

std::string to_string(const GaussRational& z);

// uniform coefficient interface used by the polynomial templates
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<BigRational> {
  static bool is_zero(const BigRational& c) { return sgn(c) == 0; }
  static BigRational one() { return BigRational(1); }
  static BigRational zero() { return BigRational(0); }
  static BigRational inverse(const BigRational& c);
  static std::string str(const BigRational& c) { return to_string(c); }
};

template <>
struct CoeffTraits<GaussRational> {
  static bool is_zero(const GaussRational& c) { return c.is_zero(); }
  static GaussRational one() { return GaussRational(1); }
  static GaussRational zero() { return GaussRational(0); }
  static GaussRational inverse(const GaussRational& c) { return c.inverse(); }
  static std::string str(const GaussRational& c) { return to_string(c); }
};

}  // namespace maschke::algebra
