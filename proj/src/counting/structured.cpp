// Kernels exploiting that every surface and threefold equation here depends on
// y0 and y1, y2, y3 only through the squares u_i = y_i^2 and the product
// y0 y1 y2 y3, symmetrically in y1, y2, y3. On the chart y0 = 1 the sum over
// (y1, y2, y3) in F_q^3 becomes a sum over multisets {u1, u2, u3} of squares
// with P = +-sqrt(u1 u2 u3): each multiset with all u_i != 0 has 4 preimages
// per sign of P, and a multiset with zeros has 2^(#nonzero) preimages at P = 0.
#include <chrono>
#include <future>
#include <stdexcept>

#include "maschke/counting/counting.hpp"

namespace maschke::counting::detail {

using ffield::ZechField;

namespace {

std::vector<E> squares_with_zero(const ZechField& f) {
  std::vector<E> sq{f.zero()};
  for (E e = 0; e + 1 < f.q(); e += 2) sq.push_back(e);
  return sq;
}

template <class Fn>
std::int64_t sharded(std::size_t n, unsigned workers, Fn&& fn) {
  if (workers <= 1) return fn(0, 1);
  std::vector<std::future<std::int64_t>> jobs;
  for (unsigned w = 0; w < workers; ++w) jobs.push_back(std::async(std::launch::async, [&, w] { return fn(w, workers); }));
  std::int64_t total = 0;
  for (auto& j : jobs) total += j.get();  // fixed order, integers: deterministic
  (void)n;
  return total;
}

template <class V>
std::int64_t chart_sum(const ZechField& f, const V& v, unsigned workers) {
  const std::vector<E> sq = squares_with_zero(f);
  const std::size_t n = sq.size();
  auto shard = [&](std::size_t first, std::size_t step) -> std::int64_t {
    std::int64_t total = 0;
    for (std::size_t i = first; i < n; i += step) {
      const E ui = sq[i];
      E ri = 0;
      f.sqrt(ui, &ri);
      for (std::size_t j = i; j < n; ++j) {
        const E uj = sq[j];
        E rj = 0;
        f.sqrt(uj, &rj);
        const auto st = v.pair(ui, uj);
        const E rij = f.mul(ri, rj);
        for (std::size_t k = j; k < n; ++k) {
          const E uk = sq[k];
          const std::int64_t perms = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
          if (i == 0) {
            const int nonzero = (j > 0) + (k > 0);
            total += perms * (std::int64_t{1} << nonzero) * v.eval(st, uk, f.zero());
          } else {
            E rk = 0;
            f.sqrt(uk, &rk);
            const E p0 = f.mul(rij, rk);
            total += perms * 4 * (v.eval(st, uk, p0) + v.eval(st, uk, f.neg(p0)));
          }
        }
      }
    }
    return total;
  };
  std::int64_t total = sharded(n, workers, shard);

  // stratum y0 = 0, points of P^2
  const E q = static_cast<E>(f.q());
  E y[4] = {f.zero(), f.one(), 0, 0};
  for (y[2] = 0; y[2] < q; ++y[2])
    for (y[3] = 0; y[3] < q; ++y[3]) total += v.boundary(y);
  y[1] = f.zero();
  y[2] = f.one();
  for (y[3] = 0; y[3] < q; ++y[3]) total += v.boundary(y);
  y[2] = f.zero();
  y[3] = f.one();
  total += v.boundary(y);
  return total;
}

struct PairSums {
  E s;  // ui + uj
  E p;  // ui * uj
};

struct SurfaceW {
  const ZechField& f;
  const Evaluator& ev;
  PairSums pair(E ui, E uj) const { return {f.add(ui, uj), f.mul(ui, uj)}; }
  // 5 + 6 s1 - 27 s1^2 - 36 s2 + 72 P
  std::int64_t eval(const PairSums& st, E uk, E P) const {
    const E s1 = f.add(st.s, uk);
    const E s2 = f.add(st.p, f.mul(uk, st.s));
    E v = f.add(ev.c(5), f.mul(ev.c(6), s1));
    v = f.add(v, f.mul(ev.c(-27), f.sqr(s1)));
    v = f.add(v, f.mul(ev.c(-36), s2));
    v = f.add(v, f.mul(ev.c(72), P));
    return f.is_zero(v);
  }
  std::int64_t boundary(const E y[4]) const { return f.is_zero(ev.W(y)); }
};

struct SurfaceSbar {
  const ZechField& f;
  const Evaluator& ev;
  PairSums pair(E ui, E uj) const { return {f.add(ui, uj), f.mul(ui, uj)}; }
  // 1 + s1^2 + 12 s2 + 14 s1 + 168 P
  std::int64_t eval(const PairSums& st, E uk, E P) const {
    const E s1 = f.add(st.s, uk);
    const E s2 = f.add(st.p, f.mul(uk, st.s));
    E v = f.add(f.one(), f.sqr(s1));
    v = f.add(v, f.mul(ev.c(12), s2));
    v = f.add(v, f.mul(ev.c(14), s1));
    v = f.add(v, f.mul(ev.c(168), P));
    return f.is_zero(v);
  }
  std::int64_t boundary(const E y[4]) const { return f.is_zero(ev.Fbar(y)); }
};

enum class IgusaMode { Z, U, Y };

// G_I is the quadratic v^2 + B v + C in v = y4^2 with B = y0^2 - s1 and
// C = s2 - 2 y0 y1 y2 y3; each root v has 1 + chi(v) square roots y4
struct Igusa {
  const ZechField& f;
  const Evaluator& ev;
  IgusaMode mode;
  E half;

  Igusa(const ZechField& fld, const Evaluator& e, IgusaMode m) : f(fld), ev(e), mode(m), half(f.inv(f.from_int(2))) {}

  std::int64_t weight(E v, E gm0) const {
    const std::int64_t lifts = 1 + f.chi(v);
    if (lifts == 0) return 0;
    const E gm = f.add(gm0, f.mul(ev.c(6), v));
    switch (mode) {
      case IgusaMode::Z:
        return lifts;
      case IgusaMode::U:
        return f.is_zero(gm) ? lifts : 0;
      case IgusaMode::Y:
        return lifts * (1 + f.chi(gm));
    }
    return 0;
  }

  // sum over roots of v^2 + B v + C; gm0 = G_M with y4 = 0
  std::int64_t roots(E B, E C, E gm0) const {
    const E disc = f.sub(f.sqr(B), f.mul(ev.c(4), C));
    const E minus_b = f.neg(B);
    if (f.is_zero(disc)) return weight(f.mul(minus_b, half), gm0);
    E r = 0;
    if (!f.sqrt(disc, &r)) return 0;
    return weight(f.mul(f.add(minus_b, r), half), gm0) + weight(f.mul(f.sub(minus_b, r), half), gm0);
  }

  PairSums pair(E ui, E uj) const { return {f.add(ui, uj), f.mul(ui, uj)}; }
  std::int64_t eval(const PairSums& st, E uk, E P) const {
    const E s1 = f.add(st.s, uk);
    const E s2 = f.add(st.p, f.mul(uk, st.s));
    const E B = f.sub(f.one(), s1);
    const E C = f.sub(s2, f.add(P, P));
    const E gm0 = f.add(f.one(), f.mul(ev.c(3), s1));
    return roots(B, C, gm0);
  }
  std::int64_t boundary(const E y[4]) const {
    E u[4];
    for (int i = 1; i < 4; ++i) u[i] = f.sqr(y[i]);
    const E s1 = f.add(u[1], f.add(u[2], u[3]));
    const E s2 = f.add(f.mul(u[1], u[2]), f.add(f.mul(u[1], u[3]), f.mul(u[2], u[3])));
    return roots(f.neg(s1), s2, f.mul(ev.c(3), s1));
  }
};

// sum over x in P^3 of chi(F(x)) through s = x^2: only square s_i contribute,
// with weight r(s_i) = 1 + chi(s_i); normalizing the first nonzero s_i to 1
// absorbs the q - 1 scalings
std::int64_t double_cover_character_sum(const ZechField& f, const Evaluator& ev, unsigned workers) {
  const std::vector<E> sq = squares_with_zero(f);
  const std::size_t n = sq.size();
  auto r = [&](std::size_t idx) -> std::int64_t { return idx == 0 ? 1 : 2; };
  auto shard = [&](std::size_t first, std::size_t step) -> std::int64_t {
    std::int64_t total = 0;
    for (std::size_t i = first; i < n; i += step) {
      const E ti = sq[i];
      const E ti2 = f.sqr(ti);
      for (std::size_t j = i; j < n; ++j) {
        const E tj = sq[j];
        const E tj2 = f.sqr(tj);
        // Fbar(1, ti, tj, tk) = A + B tk^2 + tk^4 + C tk
        E A = f.add(f.one(), f.add(f.sqr(ti2), f.sqr(tj2)));
        A = f.add(A, f.mul(ev.c(14), f.add(ti2, f.add(tj2, f.mul(ti2, tj2)))));
        const E B = f.mul(ev.c(14), f.add(f.one(), f.add(ti2, tj2)));
        const E C = f.mul(ev.c(168), f.mul(ti, tj));
        const std::int64_t wij = r(i) * r(j);
        for (std::size_t k = j; k < n; ++k) {
          const E tk = sq[k];
          const E tk2 = f.sqr(tk);
          const E val = f.add(f.add(A, f.mul(B, tk2)), f.add(f.sqr(tk2), f.mul(C, tk)));
          const int c = f.chi(val);
          if (c == 0) continue;
          const std::int64_t perms = (i == j && j == k) ? 1 : (i == j || j == k) ? 3 : 6;
          total += perms * wij * r(k) * c;
        }
      }
    }
    return total;
  };
  std::int64_t total = sharded(n, workers, shard);

  // s = (0, 1, t2, t3), (0, 0, 1, t3), (0, 0, 0, 1)
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      E s[4] = {f.zero(), f.one(), sq[j], sq[k]};
      total += r(j) * r(k) * f.chi(ev.Fbar(s));
    }
  for (std::size_t k = 0; k < n; ++k) {
    E s[4] = {f.zero(), f.zero(), f.one(), sq[k]};
    total += r(k) * f.chi(ev.Fbar(s));
  }
  E s[4] = {f.zero(), f.zero(), f.zero(), f.one()};
  total += f.chi(ev.Fbar(s));
  return total;
}

}  // namespace

std::int64_t structured_count(VarietyId id, const ZechField& f, unsigned workers) {
  Evaluator ev(f);
  switch (id) {
    case VarietyId::W:
      return chart_sum(f, SurfaceW{f, ev}, workers);
    case VarietyId::Sbar:
      return chart_sum(f, SurfaceSbar{f, ev}, workers);
    case VarietyId::Z:
      return chart_sum(f, Igusa(f, ev, IgusaMode::Z), workers);
    case VarietyId::U:
      return chart_sum(f, Igusa(f, ev, IgusaMode::U), workers);
    case VarietyId::Y:
      return chart_sum(f, Igusa(f, ev, IgusaMode::Y), workers);
    case VarietyId::X:
      return static_cast<std::int64_t>(projective_size(f.q(), 3)) + double_cover_character_sum(f, ev, workers);
    default:
      throw std::invalid_argument("no structured kernel for " + to_string(id));
  }
}

}  // namespace maschke::counting::detail

namespace maschke::counting {

CountRecord structured_kernel_S(const ffield::FieldPtr& ctx) {
  using ffield::FqElem;
  if (ctx->k() > 2) throw std::invalid_argument("structured S kernel needs k <= 2");
  if (ctx->p() <= 5) throw std::invalid_argument("p <= 5 has bad reduction");
  auto t0 = std::chrono::steady_clock::now();
  const ffield::FieldCtx* c = ctx.get();
  const std::uint64_t q = ctx->q();
  const FqElem c14 = FqElem::from_int(c, 14), c168 = FqElem::from_int(c, 168), one = FqElem::from_int(c, 1);
  std::int64_t total = 0;
  // F = s^4 + 14(a1^2+a2^2+a3^2) s^2 + 168 a1 a2 a3 s + (sum a_i^4 + 14 sum a_i^2 a_j^2), s = x0^2, a_i = x_i^2
  auto visit = [&](const FqElem& x1, const FqElem& x2, const FqElem& x3) {
    const FqElem a1 = x1 * x1, a2 = x2 * x2, a3 = x3 * x3;
    const FqElem b1 = a1 * a1, b2 = a2 * a2, b3 = a3 * a3;
    ffield::FqPoly g(5, FqElem(c));
    g[4] = one;
    g[2] = c14 * (b1 + b2 + b3);
    g[1] = c168 * a1 * a2 * a3;
    g[0] = b1 * b1 + b2 * b2 + b3 * b3 + c14 * (b1 * b2 + b1 * b3 + b2 * b3);
    for (const auto& [s, mult] : ffield::low_degree_roots(g)) total += 1 + ffield::quad_char(s);
  };
  for (std::uint64_t i = 0; i < q; ++i)
    for (std::uint64_t j = 0; j < q; ++j) visit(one, FqElem::from_index(c, i), FqElem::from_index(c, j));
  for (std::uint64_t j = 0; j < q; ++j) visit(FqElem(c), one, FqElem::from_index(c, j));
  visit(FqElem(c), FqElem(c), one);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {VarietyId::S, ctx->p(), ctx->k(), q, total, Kernel::structured, ms};
}

}  // namespace maschke::counting
