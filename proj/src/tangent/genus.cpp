#include <sstream>

#include "maschke/tangent/tangent.hpp"

namespace maschke::tangent {

namespace {

// dense polynomials over F_p, low degree first
using Poly = std::vector<std::uint64_t>;

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint64_t pw(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  for (; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}
std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pw(a, p - 2, p); }

Poly mod(Poly a, const Poly& b, std::uint64_t p) {
  std::uint64_t li = inv(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t f = a.back() * li % p;
    std::size_t sh = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = (a[sh + i] + p - f * b[i] % p) % p;
    trim(a);
  }
  return a;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// determinant mod p by elimination
std::uint64_t det(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t n = m.size();
  std::uint64_t d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      d = (p - d) % p;
    }
    d = d * m[c][c] % p;
    std::uint64_t ic = inv(m[c][c], p);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      std::uint64_t f = m[r][c] * ic % p;
      for (std::size_t k = c; k < n; ++k) m[r][k] = (m[r][k] + p - f * m[c][k] % p) % p;
    }
  }
  return d;
}

// Sylvester resultant for formal degrees deg a = a.size() - 1, deg b = b.size() - 1,
// so it specializes correctly even when leading coefficients vanish
std::uint64_t sylvester(const Poly& a, const Poly& b, std::uint64_t p) {
  std::size_t m = a.size() - 1, n = b.size() - 1, N = m + n;
  std::vector<std::vector<std::uint64_t>> s(N, std::vector<std::uint64_t>(N, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[r][r + i] = a[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[n + r][r + i] = b[n - i];
  return det(std::move(s), p);
}

// interpolation through (xs[i], ys[i]) by Newton divided differences
Poly interpolate(const std::vector<std::uint64_t>& xs, const std::vector<std::uint64_t>& ys, std::uint64_t p) {
  std::size_t n = xs.size();
  std::vector<std::uint64_t> c = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i)
      c[i] = (c[i] + p - c[i - 1]) % p * inv((xs[i] + p - xs[i - j]) % p, p) % p;
  Poly f{c[n - 1]};
  for (std::size_t k = n - 1; k-- > 0;) {
    // f = f * (y - xs[k]) + c[k]
    Poly g(f.size() + 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
      g[i + 1] = (g[i + 1] + f[i]) % p;
      g[i] = (g[i] + p - f[i] * xs[k] % p) % p;
    }
    g[0] = (g[0] + c[k]) % p;
    f = std::move(g);
  }
  trim(f);
  return f;
}

using Bi = std::vector<std::vector<std::uint64_t>>;  // [i][j] of x^i y^j

Poly specialize(const Bi& g, std::uint64_t y, std::uint64_t p) {
  Poly out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = g[i].size(); j-- > 0;) acc = (acc * y + g[i][j]) % p;
    out[i] = acc;
  }
  return out;
}

// Res_x(a, b) as a polynomial in y
Poly resultant_x(const Bi& a, const Bi& b, unsigned dy, std::uint64_t p) {
  std::size_t bound = ((a.size() - 1) + (b.size() - 1)) * dy + 1;
  std::vector<std::uint64_t> xs, ys;
  for (std::uint64_t y = 1; xs.size() < bound; ++y) {
    xs.push_back(y);
    ys.push_back(sylvester(specialize(a, y, p), specialize(b, y, p), p));
  }
  return interpolate(xs, ys, p);
}

// affine chart: no common zero of g, g_x, g_y
bool affine_smooth(const Bi& g, unsigned dx, unsigned dy, std::uint64_t p) {
  Bi gx(dx, std::vector<std::uint64_t>(dy + 1, 0)), gy(dx + 1, std::vector<std::uint64_t>(dy + 1, 0));
  for (unsigned i = 0; i <= dx; ++i)
    for (unsigned j = 0; j <= dy; ++j) {
      if (i > 0) gx[i - 1][j] = g[i][j] * i % p;
      if (j > 0) gy[i][j - 1] = g[i][j] * j % p;
    }
  // common zeros of g, g_x, g_y lie over roots of every Res_x(g, g_x + l g_y)
  Poly acc = resultant_x(g, gy, dy, p);
  for (std::uint64_t l = 0; l < 4 && !(acc.size() == 1); ++l) {
    Bi comb = gy;
    for (unsigned i = 0; i <= dx; ++i)
      for (unsigned j = 0; j <= dy; ++j) comb[i][j] = (gy[i][j] * l + (i < dx ? gx[i][j] : 0)) % p;
    acc = gcd(acc, resultant_x(g, comb, dy, p), p);
    if (acc.empty()) return false;
  }
  return acc.size() == 1;
}

std::vector<std::vector<std::int64_t>> integer_coeffs(const QMultiPoly& f, unsigned dx, unsigned dy) {
  std::vector<std::vector<std::int64_t>> g(dx + 1, std::vector<std::int64_t>(dy + 1, 0));
  std::size_t ix = f.var_index("x"), iy = f.var_index("y");
  for (const auto& [e, c] : f.terms()) g[e[ix]][e[iy]] = algebra::to_int64(algebra::to_integer(c));
  return g;
}

}  // namespace

bool bihomogeneous_smooth_mod_p(const std::vector<std::vector<std::int64_t>>& g, unsigned dx, unsigned dy,
                                std::uint64_t p) {
  auto sp = static_cast<std::int64_t>(p);
  // the four affine charts of P^1 x P^1, by reversing coefficients
  for (int cx = 0; cx < 2; ++cx)
    for (int cy = 0; cy < 2; ++cy) {
      Bi h(dx + 1, std::vector<std::uint64_t>(dy + 1, 0));
      for (unsigned i = 0; i <= dx; ++i)
        for (unsigned j = 0; j <= dy; ++j) {
          std::int64_t v = g[cx ? dx - i : i][cy ? dy - j : j] % sp;
          h[i][j] = static_cast<std::uint64_t>(v < 0 ? v + sp : v);
        }
      if (!affine_smooth(h, dx, dy, p)) return false;
    }
  return true;
}

const std::vector<std::uint64_t>& smoothness_primes() {
  static const std::vector<std::uint64_t> primes{10007, 10009, 10037};
  return primes;
}

std::optional<int> hyperelliptic_genus(const QPoly& f) {
  if (f.degree() < 1) return std::nullopt;
  if (QPoly::gcd(f, f.derivative()).degree() != 0) return std::nullopt;
  return (f.degree() - 1) / 2;
}

GenusReport curve_invariants() {
  GenusReport r;
  const auto& ft = four_tangent_forms();
  auto gp = integer_coeffs(ft.gplus, 4, 4), gm = integer_coeffs(ft.gminus, 4, 4);
  r.cplus_smooth = r.cminus_smooth = true;
  for (std::uint64_t p : smoothness_primes()) {
    bool sp = bihomogeneous_smooth_mod_p(gp, 4, 4, p), sm = bihomogeneous_smooth_mod_p(gm, 4, 4, p);
    r.cplus_smooth = r.cplus_smooth && sp;
    r.cminus_smooth = r.cminus_smooth && sm;
    if (sp && sm) r.smooth_primes.push_back(p);
    r.certificates.push_back("p = " + std::to_string(p) + ": C+ " + (sp ? "smooth" : "singular") + ", C- " +
                             (sm ? "smooth" : "singular") + " (resultant gcd over four charts)");
  }
  // smooth of bidegree (a, b): genus (a - 1)(b - 1)
  if (r.cplus_smooth) r.genus_cplus = 9;
  if (r.cminus_smooth) r.genus_cminus = 9;

  // zeros of A on C+: over each of the 8 roots of A the fibre P x^4 - Q x^2 + P
  // has 4 distinct points iff P and Q^2 - 4P^2 do not vanish there
  QPoly A = form_A(), P = form_P(), D = quotient_discriminant();
  bool a_sqfree = QPoly::gcd(A, A.derivative()).degree() == 0;
  BigRational resP = algebra::resultant(A, P), resD = algebra::resultant(A, D);
  bool at_infinity = P.degree() == 4 && D.degree() == 8 && A.degree() == 8;
  r.branch_simple = a_sqfree && resP != 0 && resD != 0 && at_infinity;
  r.branch_points = r.branch_simple ? 4 * A.degree() : 0;
  std::ostringstream os;
  os << "gcd(A, A') = 1: " << (a_sqfree ? "yes" : "no") << "; Res(A, P) = " << algebra::to_string(resP)
     << "; Res(A, Q^2 - 4P^2) = " << algebra::to_string(resD)
     << "; fibre over y = infinity unramified with even pole order of A";
  r.certificates.push_back(os.str());
  if (r.genus_cplus == 9 && r.branch_simple) r.genus_ctilde = 2 * r.genus_cplus - 1 + r.branch_points / 2;
  r.certificates.push_back("Riemann-Hurwitz: 2*" + std::to_string(r.genus_ctilde) + " - 2 = 2(2*9 - 2) + " +
                           std::to_string(r.branch_points));

  r.genus_cbar = hyperelliptic_genus(D).value_or(-1);
  r.genus_c3 = hyperelliptic_genus(A).value_or(-1);
  r.genus_c7 = hyperelliptic_genus(A * D).value_or(-1);
  r.certificates.push_back("deg(Q^2 - 4P^2) = " + std::to_string(D.degree()) + ", deg A = " +
                           std::to_string(A.degree()) + ", deg A(Q^2 - 4P^2) = " + std::to_string((A * D).degree()));
  return r;
}

}  // namespace maschke::tangent
