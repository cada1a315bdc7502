#include "maschke/ffield/field.hpp"

#include <stdexcept>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/algebra/rational.hpp"

namespace maschke::ffield {

namespace {

using Coeffs = std::vector<std::uint64_t>;  // over F_p, low degree first

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs rem_p(Coeffs a, const Coeffs& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t inv = algebra::invmod(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t f = a.back() * inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - f * m[i] % p) % p;
    trim(a);
  }
  return a;
}

Coeffs mulmod_p(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return rem_p(c, m, p);
}

Coeffs gcd_p(Coeffs a, Coeffs b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem_p(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// X^(p^j) mod m for j = 1..k
std::vector<Coeffs> frobenius_powers(const Coeffs& m, std::uint64_t p, unsigned k) {
  std::vector<Coeffs> out;
  Coeffs cur = rem_p(Coeffs{0, 1}, m, p);
  for (unsigned j = 1; j <= k; ++j) {
    Coeffs result = {1};
    Coeffs base = cur;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) result = mulmod_p(result, base, m, p);
      base = mulmod_p(base, base, m, p);
      e >>= 1;
    }
    cur = result;
    out.push_back(cur);
  }
  return out;
}

bool irreducible(const Coeffs& m, std::uint64_t p, unsigned k) {
  auto fr = frobenius_powers(m, p, k);
  for (unsigned j = 1; j < k; ++j) {
    Coeffs d = fr[j - 1];
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = (d[1] + p - 1) % p;
    if (gcd_p(d, m, p).size() != 1) return false;
  }
  Coeffs last = fr[k - 1];
  trim(last);
  return last == Coeffs{0, 1};
}

FieldPtr make_ctx(std::uint32_t p, unsigned k, bool check_good);

}  // namespace

FieldPtr build_ext(std::uint32_t p, unsigned k) { return make_ctx(p, k, true); }
FieldPtr build_ext_unchecked(std::uint32_t p, unsigned k) { return make_ctx(p, k, false); }

namespace {

FieldPtr make_ctx(std::uint32_t p, unsigned k, bool check_good) {
  if (check_good && p <= 5) throw std::invalid_argument("p <= 5 has bad reduction");
  if (!algebra::is_prime(p)) throw std::invalid_argument("p must be prime");
  if (k < 1 || k > 4) throw std::invalid_argument("extension degree must lie in 1..4");
  if (p == 2) throw std::invalid_argument("characteristic 2 unsupported");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  if (q >= (1ull << 40)) throw std::invalid_argument("field too large");

  std::vector<std::uint32_t> mod;
  if (k == 1) {
    mod = {0, 1};
  } else {
    // lower coefficients read as a base-p number with c_{k-1} most significant
    std::uint64_t count = q;
    bool found = false;
    for (std::uint64_t n = 0; n < count && !found; ++n) {
      Coeffs m(k + 1, 0);
      std::uint64_t t = n;
      for (unsigned i = 0; i < k; ++i) {
        m[i] = t % p;
        t /= p;
      }
      m[k] = 1;
      if (m[0] == 0) continue;
      if (irreducible(m, p, k)) {
        for (auto v : m) mod.push_back(static_cast<std::uint32_t>(v));
        found = true;
      }
    }
    if (!found) throw std::logic_error("no irreducible modulus found");
  }

  return std::make_shared<FieldCtx>(p, k, std::move(mod));
}

}  // namespace

FieldCtx::FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < k; ++i) q_ *= p;
  if (k == 1) {
    chi_.assign(p, -1);
    chi_[0] = 0;
    for (std::uint64_t x = 1; x < p; ++x) chi_[x * x % p] = 1;
  }
}

std::string FieldCtx::describe() const {
  std::string s = "F_" + std::to_string(q_) + " = F_" + std::to_string(p_) + "[X]/(";
  for (int i = static_cast<int>(k_); i >= 0; --i) {
    if (modulus_[i] == 0) continue;
    if (i != static_cast<int>(k_)) s += "+";
    if (i == 0 || modulus_[i] != 1) s += std::to_string(modulus_[i]);
    if (i > 0) s += "X" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s + ")";
}

FqElem FqElem::from_int(const FieldCtx* ctx, std::int64_t v) {
  FqElem e(ctx);
  std::int64_t p = ctx->p();
  e.c_[0] = static_cast<std::uint32_t>(((v % p) + p) % p);
  return e;
}

FqElem FqElem::from_coeffs(const FieldCtx* ctx, const std::vector<std::uint32_t>& c) {
  if (c.size() > ctx->k()) throw std::invalid_argument("too many coefficients");
  FqElem e(ctx);
  for (std::size_t i = 0; i < c.size(); ++i) e.c_[i] = c[i] % ctx->p();
  return e;
}

FqElem FqElem::from_index(const FieldCtx* ctx, std::uint64_t idx) {
  FqElem e(ctx);
  for (unsigned i = 0; i < ctx->k(); ++i) {
    e.c_[i] = static_cast<std::uint32_t>(idx % ctx->p());
    idx /= ctx->p();
  }
  return e;
}

FqElem FqElem::gen(const FieldCtx* ctx) {
  if (ctx->k() == 1) return from_int(ctx, 0);
  FqElem e(ctx);
  e.c_[1] = 1;
  return e;
}

std::uint64_t FqElem::index() const {
  std::uint64_t idx = 0;
  for (int i = static_cast<int>(ctx_->k()) - 1; i >= 0; --i) idx = idx * ctx_->p() + c_[i];
  return idx;
}

FqElem FqElem::operator+(const FqElem& o) const {
  FqElem r(ctx_ ? ctx_ : o.ctx_);
  const std::uint32_t p = r.ctx_->p();
  for (unsigned i = 0; i < r.ctx_->k(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    r.c_[i] = s >= p ? s - p : s;
  }
  return r;
}

FqElem FqElem::operator-(const FqElem& o) const {
  FqElem r(ctx_ ? ctx_ : o.ctx_);
  const std::uint32_t p = r.ctx_->p();
  for (unsigned i = 0; i < r.ctx_->k(); ++i) r.c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p - o.c_[i];
  return r;
}

FqElem FqElem::operator-() const {
  FqElem r(ctx_);
  const std::uint32_t p = ctx_->p();
  for (unsigned i = 0; i < ctx_->k(); ++i) r.c_[i] = c_[i] == 0 ? 0 : p - c_[i];
  return r;
}

FqElem FqElem::operator*(const FqElem& o) const {
  const FieldCtx* ctx = ctx_ ? ctx_ : o.ctx_;
  FqElem r(ctx);
  const std::uint64_t p = ctx->p();
  const unsigned k = ctx->k();
  if (k == 1) {
    r.c_[0] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c_[0]) * o.c_[0] % p);
    return r;
  }
  std::uint64_t t[8] = {0, 0, 0, 0, 0, 0, 0, 0};
  for (unsigned i = 0; i < k; ++i)
    for (unsigned j = 0; j < k; ++j) t[i + j] = (t[i + j] + static_cast<std::uint64_t>(c_[i]) * o.c_[j]) % p;
  const auto& m = ctx->modulus();
  for (int d = 2 * static_cast<int>(k) - 2; d >= static_cast<int>(k); --d) {
    std::uint64_t f = t[d];
    if (f == 0) continue;
    t[d] = 0;
    for (unsigned i = 0; i < k; ++i) t[d - k + i] = (t[d - k + i] + (p - f) * m[i]) % p;
  }
  for (unsigned i = 0; i < k; ++i) r.c_[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

FqElem FqElem::pow(std::uint64_t e) const {
  FqElem r = from_int(ctx_, 1);
  FqElem b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FqElem FqElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_q");
  return pow(ctx_->q() - 2);
}

std::string FqElem::to_string() const {
  if (ctx_->k() == 1) return std::to_string(c_[0]);
  std::string s = "[";
  for (unsigned i = 0; i < ctx_->k(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
  return s + "]";
}

int quad_char(const FqElem& u) {
  if (u.is_zero()) return 0;
  const FieldCtx* ctx = u.ctx();
  if (ctx->k() == 1) return ctx->char_table()[u.coeff(0)];
  return u.pow((ctx->q() - 1) / 2).is_one() ? 1 : -1;
}

bool sqrt_fq(const FqElem& u, FqElem* root) {
  const FieldCtx* ctx = u.ctx();
  if (u.is_zero()) {
    *root = u;
    return true;
  }
  if (quad_char(u) != 1) return false;
  std::uint64_t q = ctx->q();
  std::uint64_t s = 0, t = q - 1;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  FqElem z(ctx);
  for (std::uint64_t idx = 2; idx < q; ++idx) {
    z = FqElem::from_index(ctx, idx);
    if (quad_char(z) == -1) break;
  }
  FqElem c = z.pow(t);
  FqElem x = u.pow((t + 1) / 2);
  FqElem b = u.pow(t);
  std::uint64_t m = s;
  while (!b.is_one()) {
    std::uint64_t i = 0;
    FqElem bb = b;
    while (!bb.is_one()) {
      bb = bb * bb;
      ++i;
    }
    FqElem w = c;
    for (std::uint64_t j = 0; j + i + 1 < m; ++j) w = w * w;
    x = x * w;
    c = w * w;
    b = b * c;
    m = i;
  }
  *root = x;
  return true;
}

}  // namespace maschke::ffield
