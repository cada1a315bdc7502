#include "maschke/algebra/rational.hpp"

#include <stdexcept>

namespace maschke::algebra {

BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (sgn(den) == 0) throw std::domain_error("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

bool is_integral(const BigRational& r) { return r.get_den() == 1; }

BigInt to_integer(const BigRational& r) {
  if (!is_integral(r)) throw std::domain_error("non-integral value " + to_string(r));
  return r.get_num();
}

std::int64_t to_int64(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer exceeds 64 bits: " + z.get_str());
  return z.get_si();
}

std::string to_string(const BigInt& z) { return z.get_str(); }
std::string to_string(const BigRational& r) { return r.get_str(); }

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

BigRational rpow(const BigRational& base, unsigned e) {
  BigRational out(ipow(base.get_num(), e), ipow(base.get_den(), e));
  out.canonicalize();
  return out;
}

BigInt squarefree_part(const BigInt& n) {
  if (sgn(n) == 0) throw std::domain_error("squarefree part of zero");
  BigInt m = abs(n);
  BigInt out = sgn(n) < 0 ? -1 : 1;
  for (BigInt d = 2; d * d <= m; ++d) {
    unsigned e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
      m /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return out * m;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

GaussRational GaussRational::inverse() const {
  BigRational n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero");
  return {BigRational(re / n), BigRational(-im / n)};
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  BigRational r = re * o.re - im * o.im;
  BigRational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) { return *this *= o.inverse(); }

std::string to_string(const GaussRational& z) {
  if (sgn(z.im) == 0) return to_string(z.re);
  if (sgn(z.re) == 0) return to_string(z.im) + "*i";
  std::string s = "(" + to_string(z.re);
  s += sgn(z.im) < 0 ? "-" : "+";
  s += to_string(BigRational(abs(z.im))) + "*i)";
  return s;
}

BigRational CoeffTraits<BigRational>::inverse(const BigRational& c) {
  if (sgn(c) == 0) throw std::domain_error("inverse of zero");
  return BigRational(1 / c);
}

}  // namespace maschke::algebra
