#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <sstream>

#include "maschke/grouprep/group.hpp"
#include "maschke/tangent/tangent.hpp"

namespace maschke::tangent {

using algebra::GaussRational;
using algebra::GMultiPoly;
using algebra::MultiPoly;
using algebra::QuotElem;
using algebra::QuotRingPtr;

namespace {

using QEPoly = MultiPoly<QuotElem>;

constexpr std::size_t kMaxWitness = 600;

std::string clip(std::string s) {
  if (s.size() > kMaxWitness) s = s.substr(0, kMaxWitness) + " ...";
  return s;
}

// pass iff the difference vanishes; the residue is the witness otherwise
template <class C>
SymbolicCheck identity(CheckId id, const MultiPoly<C>& residue, const std::string& statement) {
  SymbolicCheck c{id, residue.is_zero(), {}};
  c.witness = c.pass ? statement : "residue of " + statement + ": " + clip(residue.to_string());
  return c;
}

QEPoly to_quot(const QMultiPoly& f) {
  return f.map_coeffs<QuotElem>([](const BigRational& r) { return QuotElem(r); });
}
GMultiPoly to_gauss(const QMultiPoly& f) {
  return f.map_coeffs<GaussRational>([](const BigRational& r) { return GaussRational(r); });
}

// the same polynomial over a larger variable list, matching by name
QMultiPoly lift(const QMultiPoly& f, const std::vector<std::string>& vars) {
  std::map<std::string, QMultiPoly> img;
  for (const auto& v : f.variables()) img.emplace(v, QMultiPoly::variable(vars, v));
  return poly_substitute(f, img);
}

QMultiPoly var(const std::vector<std::string>& vars, const std::string& v, std::uint32_t e = 1) {
  return QMultiPoly::variable(vars, v, e);
}
QMultiPoly num(const std::vector<std::string>& vars, long n) { return QMultiPoly::constant(vars, BigRational(n)); }

// f at a point of R^n, as an element of R
QuotElem evaluate(const QMultiPoly& f, const std::map<std::string, QuotElem>& at) {
  std::map<std::string, QEPoly> img;
  for (const auto& [v, x] : at) img.emplace(v, QEPoly::constant({}, x));
  return poly_substitute(to_quot(f), img).constant_term();
}

SymbolicCheck check_abc() {
  const std::vector<std::string> v{"x", "y", "t"};
  std::map<std::string, QMultiPoly> line{
      {"x0", var(v, "x")}, {"x1", num(v, 1)}, {"x2", var(v, "t") * var(v, "y")}, {"x3", var(v, "t")}};
  QMultiPoly fc = poly_substitute(octic(), line);
  const auto& ft = four_tangent_forms();
  QMultiPoly rhs = lift(ft.A, v) * var(v, "t", 8) + lift(ft.B, v) * var(v, "t", 4) + lift(ft.C, v);
  return identity(CheckId::ABC, fc - rhs, "F(x, 1, t y, t) - (A t^8 + B t^4 + C) = 0 in Q[x, y, t]");
}

SymbolicCheck check_delta() {
  const auto& ft = four_tangent_forms();
  const std::vector<std::string> v{"x", "y"};
  QMultiPoly delta = ft.B * ft.B - num(v, 4) * ft.A * ft.C;
  QMultiPoly expanded = parse_poly("(14*x^4*y^4 + 14*x^4 + 168*x^2*y^2 + 14*y^4 + 14)^2", v) -
                        num(v, 4) * parse_poly("(x^8 + 14*x^4 + 1)*(y^8 + 14*y^4 + 1)", v);
  if (delta != expanded)
    return identity(CheckId::DELTA, delta - expanded, "B^2 - 4AC against its expanded form");
  return identity(CheckId::DELTA, delta - num(v, 48) * ft.gplus * ft.gminus,
                  "B^2 - 4AC - 48 g+ g- = 0 in Z[x, y]");
}

SymbolicCheck check_twist() {
  const auto& ft = four_tangent_forms();
  const std::vector<std::string> v{"x", "y"};
  GaussRational i = GaussRational::i();
  std::map<std::string, GMultiPoly> img{{"x", i * GMultiPoly::variable(v, "x")},
                                        {"y", i * GMultiPoly::variable(v, "y")}};
  GMultiPoly twisted = poly_substitute(to_gauss(ft.gplus), img);
  return identity(CheckId::TWIST, twisted - to_gauss(ft.gminus), "g+(i x, i y) - g-(x, y) = 0 in Q(i)[x, y]");
}

std::map<std::string, QMultiPoly> invariant_map() {
  auto p = invariants();
  std::map<std::string, QMultiPoly> img;
  for (int k = 0; k < 5; ++k) img.emplace("y" + std::to_string(k), p[k]);
  return img;
}

SymbolicCheck check_igusa() {
  return identity(CheckId::IGUSA, poly_substitute(igusa_quartic(), invariant_map()),
                  "G_I(p0, ..., p4) = 0 in Q[x0, ..., x3]");
}

SymbolicCheck check_gm() {
  return identity(CheckId::GM, poly_substitute(maschke_quadric(), invariant_map()) - octic(),
                  "G_M(p0, ..., p4) - F = 0 in Q[x0, ..., x3]");
}

SymbolicCheck check_wquartic() {
  QMultiPoly gi = igusa_quartic();
  const auto& vars = gi.variables();
  std::size_t i4 = gi.var_index("y4");
  // G_I is even in y4; substitute r = y4^2
  for (const auto& [e, c] : gi.terms())
    if (e[i4] % 2 != 0) return {CheckId::WQUARTIC, false, "G_I has an odd power of y4"};
  QMultiPoly r = parse_poly("y0^2 + 3*(y1^2 + y2^2 + y3^2)", vars);
  r = BigRational(-1, 6) * r;
  QMultiPoly sub = gi.coefficient_in(i4, 4) * r * r + gi.coefficient_in(i4, 2) * r + gi.coefficient_in(i4, 0);
  const std::vector<std::string> w{"y0", "y1", "y2", "y3"};
  std::map<std::string, QMultiPoly> img;
  for (const auto& v : w) img.emplace(v, var(w, v));
  img.emplace("y4", num(w, 0));
  QMultiPoly reduced = poly_substitute(sub, img);
  QMultiPoly h = w_quartic();
  BigRational lambda = reduced.coefficient({4, 0, 0, 0}) / h.coefficient({4, 0, 0, 0});
  if (lambda == 0) return {CheckId::WQUARTIC, false, "substituted quartic has no y0^4 term"};
  SymbolicCheck c = identity(CheckId::WQUARTIC, reduced - lambda * h,
                             "G_I|(y4^2 = -(y0^2 + 3(y1^2 + y2^2 + y3^2))/6) - lambda H = 0");
  c.witness += ", lambda = " + algebra::to_string(lambda);
  return c;
}

// span of two points of P^3 over Q[s]/(s^2 + 3) lies on H
SymbolicCheck check_wlines() {
  QuotRingPtr ring = algebra::make_quot_ring(parse_upoly("s^2 + 3", "s"), "s");
  QuotElem s = QuotElem::generator(ring);
  QuotElem w = (s - QuotElem(1)) * QuotElem(BigRational(1, 2));
  using Pt = std::array<QuotElem, 4>;
  const std::vector<std::string> v{"l", "m"};
  QEPoly h = to_quot(w_quartic());
  auto on_w = [&](const Pt& a, const Pt& b) {
    std::map<std::string, QEPoly> img;
    for (int k = 0; k < 4; ++k)
      img.emplace("y" + std::to_string(k), a[k] * QEPoly::variable(v, "l") + b[k] * QEPoly::variable(v, "m"));
    return poly_substitute(h, img);
  };
  QEPoly rm = on_w({QuotElem(3), QuotElem(0), s, QuotElem(0)}, {QuotElem(0), QuotElem(3), QuotElem(0), s});
  QEPoly rm2 = on_w({w - QuotElem(1), -w, QuotElem(1), QuotElem(0)},
                    {-w - QuotElem(2), w + QuotElem(1), QuotElem(0), QuotElem(1)});
  if (!rm.is_zero()) return identity(CheckId::WLINES, rm, "H(l P + m Q) = 0 on m");
  return identity(CheckId::WLINES, rm2, "H(l P + m Q) = 0 in Q[s]/(s^2 + 3)[l, m] for m and m'");
}

SymbolicCheck check_lines32() {
  const auto& ft = four_tangent_forms();
  const std::vector<std::string> xv{"x"};
  std::map<std::string, QMultiPoly> diag{{"x", var(xv, "x")}, {"y", var(xv, "x")}};
  QMultiPoly octic8 = parse_poly("x^8 + 14*x^4 + 1", xv);
  QMultiPoly r1 = poly_substitute(ft.gplus, diag) - num(xv, 2) * octic8;
  if (!r1.is_zero()) return identity(CheckId::LINES32, r1, "g+(x, x) - 2(x^8 + 14x^4 + 1)");
  QMultiPoly r2 =
      parse_poly("(x^4 - 2*x^3 + 2*x^2 + 2*x + 1)*(x^4 + 2*x^3 + 2*x^2 - 2*x + 1)", xv) - octic8;
  if (!r2.is_zero()) return identity(CheckId::LINES32, r2, "quartic factorization of x^8 + 14x^4 + 1");

  // at every root x of the octic, y in {x, -x, 1/x, -1/x}: A = B = C = g+ = g- = 0
  QPoly f = parse_upoly("x^8 + 14*x^4 + 1", "x");
  QuotRingPtr ring = algebra::make_quot_ring(f, "x");
  QuotElem x = QuotElem::generator(ring);
  QuotElem xi = x.inverse();
  std::vector<QuotElem> ys{x, -x, xi, -xi};
  for (std::size_t k = 0; k < ys.size(); ++k) {
    std::map<std::string, QuotElem> at{{"x", x}, {"y", ys[k]}};
    for (const auto* g : {&ft.A, &ft.B, &ft.C, &ft.gplus, &ft.gminus}) {
      QuotElem val = evaluate(*g, at);
      if (!val.is_zero())
        return {CheckId::LINES32, false, "nonzero value " + clip(val.to_string()) + " at branch " + std::to_string(k)};
    }
  }
  // the 32 points are distinct: f squarefree, and x^4 - 1 coprime to f
  QPoly sq = QPoly::gcd(f, f.derivative());
  QPoly cp = QPoly::gcd(f, parse_upoly("x^4 - 1", "x"));
  if (sq.degree() != 0 || cp.degree() != 0)
    return {CheckId::LINES32, false, "coincident points: gcd(f, f') = " + sq.to_string() +
                                         ", gcd(f, x^4 - 1) = " + cp.to_string()};
  return {CheckId::LINES32, true,
          "g+(x, x) = 2(x^8 + 14x^4 + 1); quartic factorization exact; A = B = C = g+ = g- = 0 at "
          "8 x 4 = 32 distinct points (x^8 + 14x^4 + 1 = 0, y^2 in {x^2, x^-2}), the full intersection number "
          "4^2 + 4^2 of C+ and C-"};
}

SymbolicCheck check_ginvar() {
  const std::vector<std::string> xv{"x0", "x1", "x2", "x3"};
  GMultiPoly f = to_gauss(octic());
  int which = 1;
  for (const auto& g : {grouprep::maschke_g1(), grouprep::maschke_g2()}) {
    auto m = g.matrix();
    std::map<std::string, GMultiPoly> img;
    for (int i = 0; i < 4; ++i) {
      GMultiPoly row(xv);
      for (int j = 0; j < 4; ++j) row += m[i][j] * GMultiPoly::variable(xv, xv[j]);
      img.emplace(xv[i], row);
    }
    GMultiPoly r = poly_substitute(f, img) - f;
    if (!r.is_zero()) return identity(CheckId::GINVAR, r, "F o g" + std::to_string(which) + " - F");
    ++which;
  }
  return {CheckId::GINVAR, true, "F o g1 - F = F o g2 - F = 0 in Q(i)[x0, ..., x3]"};
}

// deform the line through c = (x, 2) on C+ inside F + eps G, G = X0^2 X1^4 X2^2,
// and reduce k(t) modulo the square root of f_c(t)
SymbolicCheck check_aj() {
  const auto& ft = four_tangent_forms();
  // the base point: g+(x, 2) = 38x^4 + 79x^2 + 38
  std::map<std::string, QMultiPoly> y2{{"x", var({"x"}, "x")}, {"y", num({"x"}, 2)}};
  QMultiPoly base = poly_substitute(ft.gplus, y2);
  QPoly m = parse_upoly("38*x^4 + 79*x^2 + 38", "x");
  if (base != parse_poly("38*x^4 + 79*x^2 + 38", {"x"}))
    return {CheckId::AJ, false, "g+(x, 2) = " + base.to_string()};
  QuotRingPtr ring = algebra::make_quot_ring(m, "x");
  QuotElem x = QuotElem::generator(ring);

  const std::vector<std::string> v{"t", "a", "b", "c", "d", "e"};
  auto V = [&](const std::string& n) { return QEPoly::variable(v, n); };
  auto K = [&](const QuotElem& c) { return QEPoly::constant(v, c); };
  QEPoly eps = V("e");
  std::map<std::string, QEPoly> line{{"x0", K(x) + eps * (V("a") + V("c") * V("t"))},
                                     {"x1", K(QuotElem(1))},
                                     {"x2", K(QuotElem(2)) * V("t") + eps * (V("b") + V("d") * V("t"))},
                                     {"x3", V("t")}};
  const std::vector<std::string> xe{"x0", "x1", "x2", "x3", "e"};
  QMultiPoly deformed = lift(octic(), xe) + parse_poly("e*x0^2*x1^4*x2^2", xe);
  std::map<std::string, QEPoly> img = line;
  img.emplace("e", eps);
  QEPoly hk = poly_substitute(to_quot(deformed), img, std::make_pair(std::string("e"), 1u));
  std::size_t ie = hk.var_index("e"), it = hk.var_index("t");
  QEPoly h = hk.coefficient_in(ie, 0), k = hk.coefficient_in(ie, 1);

  // h = A t^8 + B t^4 + C with B^2 = 4AC, so h = A (t^4 + B/2A)^2
  QuotElem A = h.coefficient_in(it, 8).constant_term();
  QuotElem B = h.coefficient_in(it, 4).constant_term();
  QuotElem C = h.coefficient_in(it, 0).constant_term();
  if (!(B * B - QuotElem(4) * A * C).is_zero())
    return {CheckId::AJ, false, "f_c is not a square: B^2 - 4AC = " + clip((B * B - QuotElem(4) * A * C).to_string())};
  QEPoly root = V("t").pow(4) + K(B / (QuotElem(2) * A));
  if (h != K(A) * root * root) return {CheckId::AJ, false, "h(t) has terms outside t^0, t^4, t^8"};

  QEPoly rem = poly_divrem(k, root).second;
  QEPoly t2 = rem.coefficient_in(it, 2);
  if (!t2.is_constant())
    return {CheckId::AJ, false, "t^2 coefficient depends on a, b, c, d: " + clip(t2.to_string())};
  QuotElem c2 = t2.constant_term();
  if (c2.is_zero()) return {CheckId::AJ, false, "t^2 coefficient of k mod f_c vanishes"};
  return {CheckId::AJ, true,
          "t^2 coefficient of k(t) mod f_c(t) = " + c2.to_string() +
              ", free of a, b, c, d and nonzero in Q[x]/(38x^4 + 79x^2 + 38)"};
}

SymbolicCheck check_quot() {
  const std::vector<std::string> v{"y", "s", "w", "x"};
  auto up = [&](const QPoly& f) {
    QMultiPoly out(v);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
      out += f.coeffs()[i] * var(v, "y", static_cast<std::uint32_t>(i));
    return out;
  };
  QPoly p = form_P(), q = form_Q(), a = form_A(), d = quotient_discriminant();
  QMultiPoly P = up(p), Q = up(q), A = up(a), D = up(d), s = var(v, "s"), w = var(v, "w");

  // g+ is P X^2 - Q X + P in X = x^2, hence invariant under x -> -x
  QMultiPoly X = var(v, "x", 2);
  QMultiPoly r0 = lift(four_tangent_forms().gplus, v) - (P * X * X - Q * X + P);
  if (!r0.is_zero()) return identity(CheckId::QUOT, r0, "g+ - (P x^4 - Q x^2 + P)");
  // X = (Q + s)/2P solves it on s^2 = Q^2 - 4P^2: 4P(P X^2 - Q X + P) = s^2 - D
  QMultiPoly r1 = (Q + s) * (Q + s) - num(v, 2) * Q * (Q + s) + num(v, 4) * P * P - (s * s - D);
  if (!r1.is_zero()) return identity(CheckId::QUOT, r1, "quotient discriminant");
  // u = s w on the fibre product of s^2 = D and w^2 = A
  QMultiPoly r2 = (s * w) * (s * w) - A * D - (w * w * (s * s - D) + D * (w * w - A));
  if (!r2.is_zero()) return identity(CheckId::QUOT, r2, "u^2 - A D");

  auto squarefree = [](const QPoly& f) { return QPoly::gcd(f, f.derivative()).degree() == 0; };
  bool ok = d.degree() == 8 && squarefree(d) && a.degree() == 8 && squarefree(a) && QPoly::gcd(a, d).degree() == 0;
  std::ostringstream os;
  os << "P x^2 - Q x + P has discriminant s^2 = Q^2 - 4P^2 = " << d.to_string("y") << " (degree " << d.degree()
     << (squarefree(d) ? ", squarefree" : ", not squarefree") << "); u^2 = A (Q^2 - 4P^2) of degree "
     << (a * d).degree() << (QPoly::gcd(a, d).degree() == 0 ? ", gcd(A, Q^2 - 4P^2) = 1" : ", A and D share a factor");
  return {CheckId::QUOT, ok, os.str()};
}

}  // namespace

std::string to_string(CheckId id) {
  switch (id) {
    case CheckId::ABC: return "ABC";
    case CheckId::DELTA: return "DELTA";
    case CheckId::TWIST: return "TWIST";
    case CheckId::IGUSA: return "IGUSA";
    case CheckId::GM: return "GM";
    case CheckId::WQUARTIC: return "WQUARTIC";
    case CheckId::WLINES: return "WLINES";
    case CheckId::LINES32: return "LINES32";
    case CheckId::GINVAR: return "GINVAR";
    case CheckId::AJ: return "AJ";
    case CheckId::QUOT: return "QUOT";
  }
  return "?";
}

const std::vector<CheckId>& all_checks() {
  static const std::vector<CheckId> ids{CheckId::ABC,    CheckId::DELTA,    CheckId::TWIST,   CheckId::IGUSA,
                                        CheckId::GM,     CheckId::WQUARTIC, CheckId::WLINES,  CheckId::LINES32,
                                        CheckId::GINVAR, CheckId::AJ,       CheckId::QUOT};
  return ids;
}

std::optional<CheckId> parse_check(std::string_view name) {
  for (CheckId id : all_checks())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string SymbolicCheck::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : witness) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

SymbolicCheck run_check(CheckId id) {
  switch (id) {
    case CheckId::ABC: return check_abc();
    case CheckId::DELTA: return check_delta();
    case CheckId::TWIST: return check_twist();
    case CheckId::IGUSA: return check_igusa();
    case CheckId::GM: return check_gm();
    case CheckId::WQUARTIC: return check_wquartic();
    case CheckId::WLINES: return check_wlines();
    case CheckId::LINES32: return check_lines32();
    case CheckId::GINVAR: return check_ginvar();
    case CheckId::AJ: return check_aj();
    case CheckId::QUOT: return check_quot();
  }
  throw std::invalid_argument("unknown check");
}

std::vector<SymbolicCheck> run_checks(const std::vector<CheckId>& ids, unsigned workers) {
  std::vector<SymbolicCheck> out;
  out.reserve(ids.size());
  if (workers <= 1) {
    for (CheckId id : ids) out.push_back(run_check(id));
    return out;
  }
  // batches of at most `workers` concurrent checks, collected in order
  for (std::size_t lo = 0; lo < ids.size(); lo += workers) {
    std::vector<std::future<SymbolicCheck>> batch;
    for (std::size_t i = lo; i < std::min(ids.size(), lo + workers); ++i)
      batch.push_back(std::async(std::launch::async, run_check, ids[i]));
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

}  // namespace maschke::tangent
