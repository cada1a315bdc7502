#include "maschke/hecke/hecke.hpp"

#include <cmath>

namespace maschke::hecke {

QuadRingElem QuadRingElem::operator*(const QuadRingElem& o) const {
  // (a + b x)(c + d x) = ac + (ad + bc) x + bd x^2, x^2 = x - 4
  const BigInt bd = b * o.b;
  return {a * o.a - 4 * bd, a * o.b + b * o.a + bd};
}

std::string QuadRingElem::to_string() const {
  return algebra::to_string(a) + (sgn(b) < 0 ? " - " : " + ") + algebra::to_string(BigInt(abs(b))) + "*alpha";
}

int phi3(const QuadRingElem& x) {
  BigInt r = (x.a - x.b) % 3;
  if (r < 0) r += 3;
  return static_cast<int>(r.get_si());
}

std::string to_string(SplitType t) {
  switch (t) {
    case SplitType::split: return "split";
    case SplitType::inert: return "inert";
    case SplitType::ramified: return "ramified";
  }
  return "?";
}

SplitType split_type(std::uint64_t p) {
  if (p <= 5 || !algebra::is_prime(p)) throw BadPrime("need a prime p > 5, got " + std::to_string(p));
  // Euler criterion for -15
  BigInt r;
  const BigInt m(static_cast<unsigned long>(p));
  BigInt base = m - 15 % m;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), BigInt((m - 1) / 2).get_mpz_t(), m.get_mpz_t());
  return r == 1 ? SplitType::split : SplitType::inert;
}

HeckeValue hecke_value(std::uint64_t p) {
  const SplitType t = split_type(p);
  if (t != SplitType::split) return {p, t, std::nullopt, 0};
  const auto P = static_cast<std::int64_t>(p);
  // (2a + b)^2 + 15 b^2 = 4 p^2, so |b| <= 2p / sqrt(15)
  const std::int64_t bmax = static_cast<std::int64_t>(2.0 * static_cast<double>(P) / std::sqrt(15.0)) + 1;
  for (std::int64_t b = 1; b <= bmax; ++b) {
    const std::int64_t rest = 4 * P * P - 15 * b * b;
    if (rest < 0) break;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    while (r * r > rest) --r;
    while ((r + 1) * (r + 1) <= rest) ++r;
    if (r * r != rest || (r - b) % 2 != 0) continue;
    // a = (-b + r)/2; the other root -b - r is the conjugate up to sign
    QuadRingElem beta{BigInt(static_cast<long>((r - b) / 2)), BigInt(static_cast<long>(b))};
    if (phi3(beta) == 0) throw NormFormError("norm-p^2 element divisible by 3");
    if (phi3(beta) != 1) beta = -beta;
    if (beta.norm() != BigInt(static_cast<long>(P)) * P) throw NormFormError("norm mismatch");
    return {p, t, beta, algebra::to_int64(beta.trace())};
  }
  throw NormFormError("no element of norm p^2 with b != 0 above split p = " + std::to_string(p));
}

std::int64_t hecke_ap(std::uint64_t p) { return hecke_value(p).ap; }

std::int64_t hecke_prime_power(std::uint64_t p, unsigned k) {
  if (k != 2) throw std::invalid_argument("hecke_prime_power supports k = 2 only");
  const HeckeValue h = hecke_value(p);
  const auto P = static_cast<std::int64_t>(p);
  if (h.type == SplitType::split) {
    // beta^2 + conj(beta)^2 = tr(beta)^2 - 2 N(beta)
    return h.ap * h.ap - 2 * P * P;
  }
  // (p)^2 = (p^2) and phi3(p^2) = 1, so chi((p)) = p^2 and the two
  // eigenvalues of Frob_p are +-p: both square to p^2
  return 2 * P * P;
}

}  // namespace maschke::hecke
