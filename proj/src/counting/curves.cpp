// curves on P1 x P1 and double covers of the y-line
#include <stdexcept>

#include "maschke/counting/counting.hpp"

namespace maschke::counting::detail {

using ffield::ZechField;

namespace {

// forms in (y:v); sign = -1 gives the twist g-(x,y) = g+(ix,iy)
struct CurveForms {
  const ZechField& f;
  E c2, c24, c14, c4, cm15;
  explicit CurveForms(const ZechField& fld)
      : f(fld), c2(f.from_int(2)), c24(f.from_int(24)), c14(f.from_int(14)), c4(f.from_int(4)), cm15(f.from_int(-15)) {}

  // P = 2y^4 + s y^2 v^2 + 2v^4, Q = y^4 - 24 s y^2 v^2 + v^4 with s = +-1
  void PQ(E y, E v, int sign, E* P, E* Q) const {
    const E y2 = f.sqr(y), v2 = f.sqr(v);
    const E y4 = f.sqr(y2), v4 = f.sqr(v2), yv = f.mul(y2, v2);
    const E mid = sign > 0 ? yv : f.neg(yv);
    *P = f.add(f.mul(c2, f.add(y4, v4)), mid);
    *Q = f.sub(f.add(y4, v4), f.mul(c24, mid));
  }
  // A~ = y^8 + 14 y^4 v^4 + v^8
  E A(E y, E v) const {
    const E y4 = f.sqr(f.sqr(y)), v4 = f.sqr(f.sqr(v));
    return f.add(f.add(f.sqr(y4), f.sqr(v4)), f.mul(c14, f.mul(y4, v4)));
  }
  E Qsq_minus_4Psq(E y, E v) const {
    E P, Q;
    PQ(y, v, 1, &P, &Q);
    return f.sub(f.sqr(Q), f.mul(c4, f.sqr(P)));
  }
  // g in (x:u) over a fixed (y:v); for g- the x^2 u^2 term flips sign
  E g(E x, E u, E P, E Q, int sign) const {
    const E x2 = f.sqr(x), u2 = f.sqr(u);
    const E mid = f.mul(Q, f.mul(x2, u2));
    const E quart = f.mul(P, f.add(f.sqr(x2), f.sqr(u2)));
    return sign > 0 ? f.sub(quart, mid) : f.add(quart, mid);
  }
};

template <class Fn>
void for_each_p1(const ZechField& f, Fn&& fn) {
  for (E y = 0; y < f.q(); ++y) fn(y, f.one());
  fn(f.one(), f.zero());
}

std::int64_t fiber_naive(const CurveForms& cf, E P, E Q, int sign) {
  std::int64_t n = 0;
  for_each_p1(cf.f, [&](E x, E u) { n += cf.f.is_zero(cf.g(x, u, P, Q, sign)); });
  return n;
}

// points (x:u) with P x^4 -+ Q x^2 u^2 + P u^4 = 0
std::int64_t fiber_structured(const CurveForms& cf, E P, E Q, int sign) {
  const ZechField& f = cf.f;
  if (f.is_zero(P)) {
    if (f.is_zero(Q)) return static_cast<std::int64_t>(f.q()) + 1;
    return 2;  // x = 0 and u = 0
  }
  // u = 1, X = x^2: P X^2 - s Q X + P = 0
  const E b = sign > 0 ? f.neg(Q) : Q;
  const E disc = f.sub(f.sqr(b), f.mul(cf.c4, f.sqr(P)));
  const E inv2P = f.inv(f.mul(cf.c2, P));
  const E mb = f.neg(b);
  if (f.is_zero(disc)) return 1 + f.chi(f.mul(mb, inv2P));
  E r = 0;
  if (!f.sqrt(disc, &r)) return 0;
  return 2 + f.chi(f.mul(f.add(mb, r), inv2P)) + f.chi(f.mul(f.sub(mb, r), inv2P));
}

std::int64_t hyperelliptic_naive(const ZechField& f, E h) {
  std::int64_t n = 0;
  for (E t = 0; t < f.q(); ++t) n += (f.sqr(t) == h);
  return n;
}

}  // namespace

std::int64_t curve_count(VarietyId id, const ZechField& f, bool naive) {
  CurveForms cf(f);
  std::int64_t total = 0;
  auto weight = [&](E h) -> std::int64_t { return naive ? hyperelliptic_naive(f, h) : 1 + f.chi(h); };
  for_each_p1(f, [&](E y, E v) {
    switch (id) {
      case VarietyId::Cplus:
      case VarietyId::Cminus:
      case VarietyId::Ctilde: {
        const int sign = id == VarietyId::Cminus ? -1 : 1;
        E P, Q;
        cf.PQ(y, v, sign, &P, &Q);
        const std::int64_t fiber = naive ? fiber_naive(cf, P, Q, sign) : fiber_structured(cf, P, Q, sign);
        total += id == VarietyId::Ctilde ? fiber * weight(cf.A(y, v)) : fiber;
        break;
      }
      case VarietyId::C3:
        total += weight(cf.A(y, v));
        break;
      case VarietyId::Cbar:
        total += weight(cf.Qsq_minus_4Psq(y, v));
        break;
      case VarietyId::C7:
        total += weight(f.mul(cf.A(y, v), cf.Qsq_minus_4Psq(y, v)));
        break;
      default:
        throw std::invalid_argument("not a curve: " + to_string(id));
    }
  });
  return total;
}

}  // namespace maschke::counting::detail

namespace maschke::counting {

std::pair<std::int64_t, std::int64_t> count_curve_pair(std::uint32_t p) {
  auto ctx = ffield::build_ext(p, 1);
  ffield::ZechField f(ctx);
  return {detail::curve_count(VarietyId::Cplus, f, false), detail::curve_count(VarietyId::Ctilde, f, false)};
}

std::int64_t count_C13(const ffield::FieldPtr& ctx) {
  ffield::ZechField f(ctx);
  detail::CurveForms cf(f);
  const auto q = static_cast<detail::E>(f.q());
  std::int64_t total = 0;
  auto fiber = [&](detail::E h1, detail::E h2) {
    std::int64_t n = 0;
    for (detail::E s = 0; s < q; ++s) {
      if (f.sqr(s) != h1) continue;
      for (detail::E t = 0; t < q; ++t) n += (f.sqr(t) == h2);
    }
    return n;
  };
  for (detail::E y = 0; y < q; ++y) total += fiber(cf.Qsq_minus_4Psq(y, f.one()), cf.A(y, f.one()));
  // two points of the y-line model at infinity: s^2 = -15, t^2 = 1 in the leading coefficients
  total += fiber(cf.cm15, f.one());
  return total;
}

}  // namespace maschke::counting
