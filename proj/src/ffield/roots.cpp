#include <algorithm>
#include <stdexcept>

#include "maschke/ffield/field.hpp"

namespace maschke::ffield {

FqPoly poly_trim(FqPoly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

FqPoly poly_rem(const FqPoly& a, const FqPoly& m) {
  FqPoly r = poly_trim(a);
  FqPoly mm = poly_trim(m);
  if (mm.empty()) throw std::domain_error("polynomial division by zero");
  const std::size_t dm = mm.size() - 1;
  FqElem inv = mm.back().inverse();
  while (r.size() > dm) {
    FqElem f = r.back() * inv;
    std::size_t shift = r.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) r[shift + i] -= f * mm[i];
    r = poly_trim(std::move(r));
  }
  return r;
}

static FqPoly poly_mul(const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly c(a.size() + b.size() - 1, FqElem(a[0].ctx()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return poly_trim(std::move(c));
}

static FqPoly poly_divexact_linear(const FqPoly& f, const FqElem& r) {
  // synthetic division by (X - r); remainder discarded
  FqPoly q(f.size() - 1, FqElem(f[0].ctx()));
  FqElem acc(f[0].ctx());
  for (std::size_t i = f.size(); i-- > 1;) {
    acc = f[i] + acc * r;
    q[i - 1] = acc;
  }
  return q;
}

FqPoly poly_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m) { return poly_rem(poly_mul(a, b), m); }

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    FqPoly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    FqElem inv = a.back().inverse();
    for (auto& c : a) c = c * inv;
  }
  return a;
}

static FqPoly poly_powmod(FqPoly base, std::uint64_t e, const FqPoly& m) {
  const FieldCtx* ctx = m[0].ctx();
  FqPoly r = {FqElem::from_int(ctx, 1)};
  base = poly_rem(base, m);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m);
    e >>= 1;
    if (e) base = poly_mulmod(base, base, m);
  }
  return poly_rem(r, m);
}

FqPoly poly_powmod_x(std::uint64_t e, const FqPoly& m) {
  const FieldCtx* ctx = m[0].ctx();
  return poly_powmod({FqElem(ctx), FqElem::from_int(ctx, 1)}, e, m);
}

FqElem poly_eval(const FqPoly& f, const FqElem& x) {
  FqElem acc(x.ctx());
  for (std::size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

// product of the distinct linear factors of f
static FqPoly split_part(const FqPoly& f) {
  const FieldCtx* ctx = f[0].ctx();
  if (f.size() <= 1) return {FqElem::from_int(ctx, 1)};
  FqPoly xq = poly_powmod_x(ctx->q(), f);
  xq.resize(std::max<std::size_t>(xq.size(), 2), FqElem(ctx));
  xq[1] -= FqElem::from_int(ctx, 1);
  return poly_gcd(f, xq);
}

// roots of a monic squarefree split polynomial by equal-degree splitting
static void split_roots(const FqPoly& g, std::vector<FqElem>& out) {
  const FieldCtx* ctx = g[0].ctx();
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    out.push_back(-(g[0] * g[1].inverse()));
    return;
  }
  const std::uint64_t q = ctx->q();
  for (std::uint64_t shift = 0; shift < q; ++shift) {
    FqPoly lin = {FqElem::from_index(ctx, shift), FqElem::from_int(ctx, 1)};
    FqPoly h = poly_powmod(lin, (q - 1) / 2, g);
    h.resize(std::max<std::size_t>(h.size(), 1), FqElem(ctx));
    h[0] -= FqElem::from_int(ctx, 1);
    FqPoly d = poly_gcd(g, h);
    if (d.size() > 1 && d.size() < g.size()) {
      split_roots(d, out);
      // cofactor = g / d
      FqPoly cof;
      {
        FqPoly num = g;
        const std::size_t dd = d.size() - 1;
        cof.assign(num.size() - dd, FqElem(ctx));
        for (std::size_t i = num.size(); i-- > dd;) {
          FqElem c = num[i];
          cof[i - dd] = c;
          for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * d[j];
        }
      }
      split_roots(cof, out);
      return;
    }
  }
  throw std::logic_error("equal-degree splitting failed");
}

std::vector<std::pair<FqElem, int>> low_degree_roots(const FqPoly& f_in) {
  FqPoly f = poly_trim(f_in);
  if (f.empty()) throw std::invalid_argument("zero polynomial has every element as a root");
  if (f.size() > 5) throw std::invalid_argument("degree above 4");
  std::vector<std::pair<FqElem, int>> out;
  if (f.size() == 1) return out;
  std::vector<FqElem> roots;
  split_roots(split_part(f), roots);
  for (const auto& r : roots) {
    int mult = 0;
    FqPoly cur = f;
    while (cur.size() > 1 && poly_eval(cur, r).is_zero()) {
      cur = poly_divexact_linear(cur, r);
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

std::size_t count_distinct_roots(const FqPoly& f_in) {
  FqPoly f = poly_trim(f_in);
  if (f.empty()) throw std::invalid_argument("zero polynomial");
  return split_part(f).size() - 1;
}

}  // namespace maschke::ffield
