#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "maschke/algebra/rational.hpp"

namespace maschke::hecke {

using algebra::BigInt;

// a + b alpha in Z[alpha], alpha = (1 + sqrt(-15))/2, alpha^2 = alpha - 4
struct QuadRingElem {
  BigInt a, b;

  BigInt norm() const { return a * a + a * b + 4 * b * b; }
  BigInt trace() const { return 2 * a + b; }
  QuadRingElem conj() const { return {a + b, -b}; }
  QuadRingElem operator-() const { return {-a, -b}; }
  QuadRingElem operator*(const QuadRingElem& o) const;
  QuadRingElem operator+(const QuadRingElem& o) const { return {a + o.a, b + o.b}; }
  bool operator==(const QuadRingElem& o) const { return a == o.a && b == o.b; }
  std::string to_string() const;
};

// reduction mod 3: Z[alpha] -> Z/3, alpha -> -1 (a + b alpha -> a - b)
int phi3(const QuadRingElem& x);

enum class SplitType { split, inert, ramified };
std::string to_string(SplitType t);

struct BadPrime : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct NormFormError : std::logic_error {
  using std::logic_error::logic_error;
};

SplitType split_type(std::uint64_t p);

struct HeckeValue {
  std::uint64_t p;
  SplitType type;
  std::optional<QuadRingElem> beta;  // chi of a prime above p, split p only
  std::int64_t ap;
};

// chi(P) = beta with P^2 = (beta), phi3(beta) = 1; a_p = beta + conj(beta)
HeckeValue hecke_value(std::uint64_t p);
std::int64_t hecke_ap(std::uint64_t p);
// a_{p^k}, k = 2 only
std::int64_t hecke_prime_power(std::uint64_t p, unsigned k);

}  // namespace maschke::hecke
