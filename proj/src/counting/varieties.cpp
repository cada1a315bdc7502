#include <chrono>
#include <stdexcept>

#include "maschke/counting/counting.hpp"

namespace maschke::counting {

using ffield::ZechField;

const std::vector<VarietyId>& all_varieties() {
  static const std::vector<VarietyId> ids = {
      VarietyId::S,     VarietyId::Sbar,   VarietyId::X,      VarietyId::U,  VarietyId::Utilde,
      VarietyId::W,     VarietyId::Wtilde, VarietyId::Z,      VarietyId::Y,  VarietyId::Cplus,
      VarietyId::Cminus, VarietyId::Ctilde, VarietyId::C3,    VarietyId::Cbar, VarietyId::C7};
  return ids;
}

const VarietySpec& variety_spec(VarietyId id) {
  static const std::vector<VarietySpec> specs = {
      {VarietyId::S, "S", Ambient::P3, "F = sum x_i^8 + 14 sum x_i^4 x_j^4 + 168 x0^2 x1^2 x2^2 x3^2", false},
      {VarietyId::Sbar, "Sbar", Ambient::P3, "sum s_i^4 + 14 sum s_i^2 s_j^2 + 168 s0 s1 s2 s3", false},
      {VarietyId::X, "X", Ambient::WeightedDoubleCover, "w^2 = F(x0,x1,x2,x3)", false},
      {VarietyId::U, "U", Ambient::P4, "G_I = G_M = 0", false},
      {VarietyId::Utilde, "Utilde", Ambient::P4, "resolution of the 30 nodes of U", true},
      {VarietyId::W, "W", Ambient::P3,
       "5y0^4 + 6y0^2(y1^2+y2^2+y3^2) - 27(y1^4+y2^4+y3^4) - 90(y1^2y2^2+y1^2y3^2+y2^2y3^2) + 72y0y1y2y3", false},
      {VarietyId::Wtilde, "Wtilde", Ambient::P3, "resolution of the 12 nodes of W", true},
      {VarietyId::Z, "Z", Ambient::P4,
       "G_I = y4^4 + (y0^2-y1^2-y2^2-y3^2)y4^2 + y1^2y2^2 + y1^2y3^2 + y2^2y3^2 - 2y0y1y2y3", false},
      {VarietyId::Y, "Y", Ambient::P5, "G_I = 0, w^2 = G_M = y0^2 + 3(y1^2+y2^2+y3^2) + 6y4^2", false},
      {VarietyId::Cplus, "Cplus", Ambient::P1xP1, "g+ = P(y)x^4 - Q(y)x^2 + P(y)", false},
      {VarietyId::Cminus, "Cminus", Ambient::P1xP1, "g-(x,y) = g+(ix,iy)", false},
      {VarietyId::Ctilde, "Ctilde", Ambient::SuperellipticOverBase, "z^2 = A(y) over C+", false},
      {VarietyId::C3, "C3", Ambient::SuperellipticOverBase, "t^2 = A(y) = y^8 + 14y^4 + 1", false},
      {VarietyId::Cbar, "Cbar", Ambient::SuperellipticOverBase, "s^2 = Q^2 - 4P^2", false},
      {VarietyId::C7, "C7", Ambient::SuperellipticOverBase, "u^2 = A (Q^2 - 4P^2)", false},
  };
  return specs.at(static_cast<std::size_t>(id));
}

std::optional<VarietyId> parse_variety(const std::string& name) {
  for (auto id : all_varieties())
    if (variety_spec(id).name == name) return id;
  return std::nullopt;
}

std::string to_string(VarietyId id) { return variety_spec(id).name; }
std::string to_string(Kernel k) { return k == Kernel::naive ? "naive" : "structured"; }

std::optional<Kernel> parse_kernel(const std::string& s) {
  if (s == "naive") return Kernel::naive;
  if (s == "structured") return Kernel::structured;
  return std::nullopt;
}

std::uint64_t projective_size(std::uint64_t q, unsigned n) {
  std::uint64_t s = 0, t = 1;
  for (unsigned i = 0; i <= n; ++i) {
    s += t;
    t *= q;
  }
  return s;
}

CountRecord count_points(VarietyId id, const ffield::FieldPtr& ctx, Kernel kernel, unsigned workers) {
  if (ctx->p() <= 5) throw std::invalid_argument("p <= 5 has bad reduction");
  const auto& spec = variety_spec(id);
  if (spec.resolved) throw std::invalid_argument(spec.name + " is a resolved model; apply the node correction to the singular count");
  auto t0 = std::chrono::steady_clock::now();
  ZechField f(ctx);
  std::int64_t count = 0;
  switch (id) {
    case VarietyId::Cplus:
    case VarietyId::Cminus:
    case VarietyId::Ctilde:
    case VarietyId::C3:
    case VarietyId::Cbar:
    case VarietyId::C7:
      count = detail::curve_count(id, f, kernel == Kernel::naive);
      break;
    case VarietyId::S:
      if (kernel == Kernel::structured) return structured_kernel_S(ctx);
      count = detail::naive_count(id, f);
      break;
    default:
      count = kernel == Kernel::naive ? detail::naive_count(id, f) : detail::structured_count(id, f, workers);
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {id, ctx->p(), ctx->k(), ctx->q(), count, kernel, ms};
}

namespace detail {

Evaluator::Evaluator(const ZechField& f) : f_(f) {
  for (int v = -200; v <= 200; ++v) small_.push_back(f.from_int(v));
}

E Evaluator::c(int v) const {
  if (v < -200 || v > 200) return f_.from_int(v);
  return small_[v + 200];
}

E Evaluator::Fbar(const E s[4]) const {
  const ZechField& f = f_;
  E sq[4];
  for (int i = 0; i < 4; ++i) sq[i] = f.sqr(s[i]);
  E quart = f.zero();
  for (int i = 0; i < 4; ++i) quart = f.add(quart, f.sqr(sq[i]));
  E cross = f.zero();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) cross = f.add(cross, f.mul(sq[i], sq[j]));
  E prod = f.mul(f.mul(s[0], s[1]), f.mul(s[2], s[3]));
  return f.add(quart, f.add(f.mul(c(14), cross), f.mul(c(168), prod)));
}

E Evaluator::F(const E x[4]) const {
  E s[4];
  for (int i = 0; i < 4; ++i) s[i] = f_.sqr(x[i]);
  return Fbar(s);
}

E Evaluator::W(const E y[4]) const {
  const ZechField& f = f_;
  E u[4];
  for (int i = 0; i < 4; ++i) u[i] = f.sqr(y[i]);
  E s1 = f.add(u[1], f.add(u[2], u[3]));
  E quart = f.add(f.sqr(u[1]), f.add(f.sqr(u[2]), f.sqr(u[3])));
  E cross = f.add(f.mul(u[1], u[2]), f.add(f.mul(u[1], u[3]), f.mul(u[2], u[3])));
  E prod = f.mul(f.mul(y[0], y[1]), f.mul(y[2], y[3]));
  E v = f.mul(c(5), f.sqr(u[0]));
  v = f.add(v, f.mul(c(6), f.mul(u[0], s1)));
  v = f.add(v, f.mul(c(-27), quart));
  v = f.add(v, f.mul(c(-90), cross));
  return f.add(v, f.mul(c(72), prod));
}

E Evaluator::GI(const E y[5]) const {
  const ZechField& f = f_;
  E u[5];
  for (int i = 0; i < 5; ++i) u[i] = f.sqr(y[i]);
  E b = f.sub(u[0], f.add(u[1], f.add(u[2], u[3])));
  E cross = f.add(f.mul(u[1], u[2]), f.add(f.mul(u[1], u[3]), f.mul(u[2], u[3])));
  E prod = f.mul(f.mul(y[0], y[1]), f.mul(y[2], y[3]));
  E v = f.add(f.sqr(u[4]), f.mul(b, u[4]));
  v = f.add(v, cross);
  return f.sub(v, f.add(prod, prod));
}

E Evaluator::GM(const E y[5]) const {
  const ZechField& f = f_;
  E u[5];
  for (int i = 0; i < 5; ++i) u[i] = f.sqr(y[i]);
  E s = f.add(u[1], f.add(u[2], u[3]));
  return f.add(u[0], f.add(f.mul(c(3), s), f.mul(c(6), u[4])));
}

}  // namespace detail

}  // namespace maschke::counting
