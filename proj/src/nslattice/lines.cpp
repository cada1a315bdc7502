#include <deque>
#include <functional>
#include <sstream>

#include "maschke/nslattice/nslattice.hpp"

namespace maschke::nslattice {

namespace {

using Poly = std::vector<FqElem>;  // low degree first

Poly pmul(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, FqElem(a[0].ctx()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void padd(Poly& acc, const Poly& b, const FqElem& c) {
  if (acc.size() < b.size()) acc.resize(b.size(), FqElem(b[0].ctx()));
  for (std::size_t i = 0; i < b.size(); ++i) acc[i] += c * b[i];
}

std::size_t lead(const Vec4& x) {
  for (std::size_t i = 0; i < 4; ++i)
    if (!x[i].is_zero()) return i;
  return 4;
}

Vec4 scaled(const Vec4& x, const FqElem& c) {
  Vec4 r = x;
  for (auto& e : r) e = e * c;
  return r;
}

FqElem det4(Mat4 m) {
  const auto* ctx = m[0][0].ctx();
  FqElem d = FqElem::from_int(ctx, 1);
  for (int c = 0; c < 4; ++c) {
    int piv = c;
    while (piv < 4 && m[piv][c].is_zero()) ++piv;
    if (piv == 4) return FqElem(ctx);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = -d;
    }
    d = d * m[c][c];
    const FqElem inv = m[c][c].inverse();
    for (int r = c + 1; r < 4; ++r) {
      if (m[r][c].is_zero()) continue;
      const FqElem f = m[r][c] * inv;
      for (int k = c; k < 4; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return d;
}

}  // namespace

LineFq LineFq::through(const Vec4& a, const Vec4& b) {
  Vec4 r0 = a, r1 = b;
  std::size_t c0 = lead(r0), c1 = lead(r1);
  if (c1 < c0) {
    std::swap(r0, r1);
    std::swap(c0, c1);
  }
  if (c0 == 4) throw std::invalid_argument("zero vector does not span a line");
  r0 = scaled(r0, r0[c0].inverse());
  if (c1 == c0) {
    const FqElem f = r1[c0];
    for (int i = 0; i < 4; ++i) r1[i] -= f * r0[i];
    c1 = lead(r1);
    if (c1 == 4) throw std::invalid_argument("dependent points do not span a line");
  }
  r1 = scaled(r1, r1[c1].inverse());
  const FqElem f = r0[c1];
  for (int i = 0; i < 4; ++i) r0[i] -= f * r1[i];
  return {r0, r1};
}

std::array<std::uint64_t, 8> LineFq::key() const {
  return {u[0].index(), u[1].index(), u[2].index(), u[3].index(),
          v[0].index(), v[1].index(), v[2].index(), v[3].index()};
}

std::array<FqElem, 6> LineFq::plucker() const {
  static constexpr int pairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  std::array<FqElem, 6> pl;
  for (int k = 0; k < 6; ++k) pl[k] = u[pairs[k][0]] * v[pairs[k][1]] - u[pairs[k][1]] * v[pairs[k][0]];
  for (const auto& e : pl)
    if (!e.is_zero()) {
      const FqElem inv = e.inverse();
      for (auto& x : pl) x = x * inv;
      break;
    }
  return pl;
}

bool LineFq::meets(const LineFq& o) const { return det4({u, v, o.u, o.v}).is_zero(); }

LineFq LineFq::frobenius() const {
  LineFq r = *this;
  for (auto& e : r.u) e = e.frobenius();
  for (auto& e : r.v) e = e.frobenius();
  return r;
}

LineFq LineFq::apply(const Mat4& g) const {
  auto act = [&](const Vec4& x) {
    Vec4 y;
    for (int i = 0; i < 4; ++i) {
      y[i] = FqElem(x[0].ctx());
      for (int j = 0; j < 4; ++j) y[i] += g[i][j] * x[j];
    }
    return y;
  };
  return through(act(u), act(v));
}

std::string LineFq::to_string() const {
  std::ostringstream os;
  os << "<(";
  for (int i = 0; i < 4; ++i) os << (i ? ":" : "") << u[i].to_string();
  os << "), (";
  for (int i = 0; i < 4; ++i) os << (i ? ":" : "") << v[i].to_string();
  os << ")>";
  return os.str();
}

std::size_t KeyHash::operator()(const std::array<std::uint64_t, 8>& k) const {
  std::size_t h = 0;
  for (auto x : k) h = h * 1000003u ^ std::hash<std::uint64_t>{}(x);
  return h;
}

void LineSet::add(const LineFq& l) {
  auto [it, fresh] = index_.emplace(l.key(), lines_.size());
  if (fresh) lines_.push_back(l);
}

std::size_t LineSet::index_of(const LineFq& l) const {
  auto it = index_.find(l.key());
  if (it == index_.end()) throw std::out_of_range("line not in set: " + l.to_string());
  return it->second;
}

FqElem eval_F(const Vec4& x) {
  const auto* ctx = x[0].ctx();
  std::array<FqElem, 4> s, f;
  for (int i = 0; i < 4; ++i) {
    s[i] = x[i] * x[i];
    f[i] = s[i] * s[i];
  }
  FqElem oct(ctx), cross(ctx);
  for (int i = 0; i < 4; ++i) {
    oct += f[i] * f[i];
    for (int j = i + 1; j < 4; ++j) cross += f[i] * f[j];
  }
  return oct + FqElem::from_int(ctx, 14) * cross + FqElem::from_int(ctx, 168) * s[0] * s[1] * s[2] * s[3];
}

bool line_on_S(const LineFq& l) {
  const auto* ctx = l.u[0].ctx();
  std::array<Poly, 4> sq, qu;
  for (int i = 0; i < 4; ++i) {
    sq[i] = pmul(Poly{l.u[i], l.v[i]}, Poly{l.u[i], l.v[i]});
    qu[i] = pmul(sq[i], sq[i]);
  }
  Poly total{FqElem(ctx)};
  const FqElem one = FqElem::from_int(ctx, 1), c14 = FqElem::from_int(ctx, 14), c168 = FqElem::from_int(ctx, 168);
  for (int i = 0; i < 4; ++i) {
    padd(total, pmul(qu[i], qu[i]), one);
    for (int j = i + 1; j < 4; ++j) padd(total, pmul(qu[i], qu[j]), c14);
  }
  padd(total, pmul(pmul(sq[0], sq[1]), pmul(sq[2], sq[3])), c168);
  for (const auto& c : total)
    if (!c.is_zero()) return false;
  return true;
}

LineSet enumerate_lines(const ffield::FieldPtr& ctx) {
  const auto* c = ctx.get();
  const std::uint64_t q = ctx->q();
  // points of S(F_q), normalized with leading coordinate 1, bucketed by lead
  std::array<std::vector<Vec4>, 4> by_lead;
  for (int ld = 0; ld < 4; ++ld) {
    const int free = 3 - ld;
    std::uint64_t total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (std::uint64_t n = 0; n < total; ++n) {
      Vec4 x;
      for (int i = 0; i < 4; ++i) x[i] = FqElem(c);
      x[ld] = FqElem::from_int(c, 1);
      std::uint64_t t = n;
      for (int i = ld + 1; i < 4; ++i) {
        x[i] = FqElem::from_index(c, t % q);
        t /= q;
      }
      if (eval_F(x).is_zero()) by_lead[ld].push_back(x);
    }
  }
  LineSet out;
  for (int c2 = 1; c2 < 4; ++c2)
    for (int c1 = 0; c1 < c2; ++c1)
      for (const auto& u : by_lead[c1]) {
        if (!u[c2].is_zero()) continue;
        for (const auto& v : by_lead[c2]) {
          Vec4 mid;
          for (int i = 0; i < 4; ++i) mid[i] = u[i] + v[i];
          if (!eval_F(mid).is_zero()) continue;
          LineFq l{u, v};
          if (line_on_S(l)) out.add(l);
        }
      }
  return out;
}

Embedding embed_constants(const ffield::FieldPtr& ctx) {
  const auto* c = ctx.get();
  Embedding e;
  if (!ffield::sqrt_fq(FqElem::from_int(c, -1), &e.i) || !ffield::sqrt_fq(FqElem::from_int(c, 5), &e.sqrt5) ||
      !ffield::sqrt_fq(FqElem::from_int(c, -3), &e.sqrt_m3))
    throw SeedError("F_" + std::to_string(ctx->q()) + " lacks one of sqrt(-1), sqrt(5), sqrt(-3)");
  return e;
}

LineFq seed_line(Seed s, const ffield::FieldPtr& ctx, const Embedding& e) {
  const auto* c = ctx.get();
  const FqElem zero(c), one = FqElem::from_int(c, 1);
  if (s == Seed::l3) {
    // alpha^4 - 2 alpha^3 + 2 alpha^2 + 2 alpha + 1 = 0
    ffield::FqPoly m = {one, FqElem::from_int(c, 2), FqElem::from_int(c, 2), FqElem::from_int(c, -2), one};
    for (const auto& [alpha, mult] : ffield::low_degree_roots(m)) {
      LineFq l = LineFq::through({alpha, one, zero, zero}, {zero, zero, alpha, one});
      if (line_on_S(l)) return l;
    }
    throw SeedError("no root of the l3 minimal polynomial in F_" + std::to_string(ctx->q()) + " gives a line on S");
  }
  // a = (1 + i)(1 + sqrt5)/4; points (1 : a : a i : 0), (0 : a : -a i : 1)
  const FqElem quarter = FqElem::from_int(c, 4).inverse();
  for (const FqElem& r5 : {e.sqrt5, -e.sqrt5}) {
    const FqElem a = (one + e.i) * (one + r5) * quarter;
    LineFq l = LineFq::through({one, a, a * e.i, zero}, {zero, a, -(a * e.i), one});
    if (line_on_S(l)) return l;
  }
  throw SeedError("l5 does not lie on S over F_" + std::to_string(ctx->q()));
}

Mat4 reduce(const grouprep::GroupElement& g, const ffield::FieldPtr& ctx, const Embedding& e) {
  const auto* c = ctx.get();
  const FqElem scale = FqElem::from_int(c, std::int64_t{1} << g.shift()).inverse();
  const auto& num = g.numerators();
  Mat4 m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      m[i][j] = (FqElem::from_int(c, num[8 * i + 2 * j]) + FqElem::from_int(c, num[8 * i + 2 * j + 1]) * e.i) * scale;
  return m;
}

LineSet orbit_lines(const LineFq& seed, const std::vector<Mat4>& generators) {
  LineSet out;
  out.add(seed);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& g : generators) {
      LineFq next = out[k].apply(g);
      if (!out.contains(next)) out.add(next);
    }
  return out;
}

LineSet orbit_lines(Seed s, const ffield::FieldPtr& ctx) {
  const Embedding e = embed_constants(ctx);
  const std::vector<Mat4> gens = {reduce(grouprep::maschke_g1(), ctx, e), reduce(grouprep::maschke_g2(), ctx, e)};
  return orbit_lines(seed_line(s, ctx, e), gens);
}

algebra::IntMatrix gram_matrix(const LineSet& lines) {
  const std::size_t n = lines.size();
  algebra::IntMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, i) = -6;
    for (std::size_t j = i + 1; j < n; ++j) {
      const int m = lines[i].meets(lines[j]) ? 1 : 0;
      g(i, j) = m;
      g(j, i) = m;
    }
  }
  return g;
}

std::vector<std::size_t> frobenius_permutation(const LineSet& lines) {
  std::vector<std::size_t> perm(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) perm[i] = lines.index_of(lines[i].frobenius());
  return perm;
}

}  // namespace maschke::nslattice
