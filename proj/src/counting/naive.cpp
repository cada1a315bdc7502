#include <stdexcept>

#include "maschke/counting/counting.hpp"

namespace maschke::counting::detail {

using ffield::ZechField;

namespace {

// visit a representative of every point of P^n, chart x0 = 1 first, then the
// lower strata in order
template <class Fn>
void for_each_projective(const ZechField& f, unsigned n, Fn&& fn) {
  const E q = static_cast<E>(f.q());
  std::vector<E> x(n + 1);
  for (unsigned lead = 0; lead <= n; ++lead) {
    for (unsigned i = 0; i < lead; ++i) x[i] = f.zero();
    x[lead] = f.one();
    const unsigned free = n - lead;
    // odometer over the free coordinates; every E in [0, q) is a field element
    for (unsigned i = lead + 1; i <= n; ++i) x[i] = 0;
    while (true) {
      fn(x.data());
      unsigned i = n;
      while (i > lead) {
        if (++x[i] < q) break;
        x[i] = 0;
        --i;
      }
      if (i == lead) break;
    }
    (void)free;
  }
}

}  // namespace

std::int64_t naive_count(VarietyId id, const ZechField& f) {
  Evaluator ev(f);
  std::int64_t total = 0;
  switch (id) {
    case VarietyId::S:
      for_each_projective(f, 3, [&](const E* x) { total += f.is_zero(ev.F(x)); });
      break;
    case VarietyId::Sbar:
      for_each_projective(f, 3, [&](const E* x) { total += f.is_zero(ev.Fbar(x)); });
      break;
    case VarietyId::X:
      for_each_projective(f, 3, [&](const E* x) { total += 1 + f.chi(ev.F(x)); });
      break;
    case VarietyId::W:
      for_each_projective(f, 3, [&](const E* x) { total += f.is_zero(ev.W(x)); });
      break;
    case VarietyId::U:
      for_each_projective(f, 4, [&](const E* y) { total += f.is_zero(ev.GI(y)) && f.is_zero(ev.GM(y)); });
      break;
    case VarietyId::Z:
      for_each_projective(f, 4, [&](const E* y) { total += f.is_zero(ev.GI(y)); });
      break;
    case VarietyId::Y:
      for_each_projective(f, 4, [&](const E* y) {
        if (f.is_zero(ev.GI(y))) total += 1 + f.chi(ev.GM(y));
      });
      break;
    default:
      throw std::invalid_argument("no naive surface kernel for " + to_string(id));
  }
  return total;
}

}  // namespace maschke::counting::detail

namespace maschke::counting {

std::int64_t count_X_weighted_oracle(const ffield::FieldPtr& ctx) {
  if (ctx->q() > 13) throw std::invalid_argument("weighted oracle limited to q <= 13");
  ffield::ZechField f(ctx);
  detail::Evaluator ev(f);
  using E = detail::E;
  const E q = static_cast<E>(f.q());
  std::int64_t solutions = 0;
  E x[4];
  for (x[0] = 0; x[0] < q; ++x[0])
    for (x[1] = 0; x[1] < q; ++x[1])
      for (x[2] = 0; x[2] < q; ++x[2])
        for (x[3] = 0; x[3] < q; ++x[3]) {
          E v = ev.F(x);
          for (E w = 0; w < q; ++w) {
            bool origin = f.is_zero(x[0]) && f.is_zero(x[1]) && f.is_zero(x[2]) && f.is_zero(x[3]) && f.is_zero(w);
            if (!origin && f.sqr(w) == v) ++solutions;
          }
        }
  const std::int64_t units = static_cast<std::int64_t>(f.q()) - 1;
  if (solutions % units != 0) throw std::logic_error("weighted orbit count not divisible by q - 1");
  return solutions / units;
}

}  // namespace maschke::counting
