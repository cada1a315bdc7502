#include "maschke/traceformula/traceformula.hpp"

#include <stdexcept>

namespace maschke::traceformula {

using algebra::ipow;
using algebra::make_rational;

namespace {

void validate(const MultSpec& s) {
  if (s.d < 2) throw std::invalid_argument("degree must be at least 2");
  if (s.n < 1) throw std::invalid_argument("dimension must be at least 1");
  if (s.mults.size() != s.d) throw std::invalid_argument("multiplicity vector must have d entries");
  if (s.r == 0 || s.d % s.r != 0) throw std::invalid_argument("cover order must divide d");
}

BigInt power_sum(const MultSpec& s, unsigned step) {
  const BigInt base = BigInt(1) - BigInt(s.d);
  BigInt acc = 0;
  for (unsigned k = 0; k < s.d; k += step) acc += ipow(base, s.mults[k]);
  return acc;
}

BigRational integral(const BigInt& num, const BigInt& den, const char* what) {
  BigRational v = make_rational(num, den);
  if (!algebra::is_integral(v)) throw std::domain_error(std::string("non-integral ") + what + ": " + v.get_str());
  return v;
}

}  // namespace

unsigned MultSpec::total() const {
  unsigned t = 0;
  for (auto m : mults) t += m;
  return t;
}

EulerPrimitive euler_and_primitive(unsigned d, unsigned n) {
  if (d < 2 || n < 1) throw std::invalid_argument("need d >= 2 and n >= 1");
  const BigInt D = d;
  const BigInt top = ipow(BigInt(1) - D, n + 2);
  BigRational euler = integral(BigInt(n + 2) * D + top - 1, D, "Euler characteristic");
  BigInt sign = (n % 2 == 0) ? 1 : -1;
  BigRational prim = integral(sign * (top + D - 1), D, "primitive Betti number");
  return {euler.get_num(), prim.get_num()};
}

BigRational chenevert_hypersurface(const MultSpec& spec) {
  validate(spec);
  BigInt sign = (spec.n % 2 == 0) ? 1 : -1;
  return integral(sign * power_sum(spec, 1), BigInt(spec.d), "hypersurface trace");
}

BigRational chenevert_cover(const MultSpec& spec) {
  validate(spec);
  BigInt sign = (spec.n % 2 == 1) ? 1 : -1;
  // gamma runs over the (d/r)-th roots of unity, the exponents divisible by r
  BigInt inner = power_sum(spec, 1) - BigInt(spec.r) * power_sum(spec, spec.r);
  return integral(sign * inner, BigInt(spec.d), "cover trace");
}

MultSpec extend_by_trivial(const MultSpec& spec) {
  MultSpec out = spec;
  out.n = spec.n + 1;
  out.mults[0] += 1;
  return out;
}

}  // namespace maschke::traceformula
