#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace maschke::ffield {

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

// F_q = F_p[X]/(modulus), q = p^k, 1 <= k <= 4
class FieldCtx {
 public:
  // trusts the caller that modulus is monic irreducible of degree k; use build_ext
  FieldCtx(std::uint32_t p, unsigned k, std::vector<std::uint32_t> modulus);
  std::uint32_t p() const { return p_; }
  unsigned k() const { return k_; }
  std::uint64_t q() const { return q_; }
  // monic, coefficients low degree first, size k+1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  // quadratic character by residue, k = 1 only
  const std::vector<std::int8_t>& char_table() const { return chi_; }
  std::string describe() const;

 private:
  std::uint32_t p_ = 0;
  unsigned k_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::int8_t> chi_;
};

// deterministic context; throws std::invalid_argument for p <= 5, composite p, k outside 1..4
FieldPtr build_ext(std::uint32_t p, unsigned k);

// same without the p > 5 restriction, for oracle tests over tiny fields
FieldPtr build_ext_unchecked(std::uint32_t p, unsigned k);

class FqElem {
 public:
  FqElem() = default;
  FqElem(const FieldCtx* ctx) : ctx_(ctx) {}
  static FqElem from_int(const FieldCtx* ctx, std::int64_t v);
  static FqElem from_coeffs(const FieldCtx* ctx, const std::vector<std::uint32_t>& c);
  // element with base-p digits of idx as coefficients, idx < q
  static FqElem from_index(const FieldCtx* ctx, std::uint64_t idx);
  static FqElem gen(const FieldCtx* ctx);

  const FieldCtx* ctx() const { return ctx_; }
  std::uint32_t coeff(unsigned i) const { return c_[i]; }
  std::uint64_t index() const;
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
  bool is_one() const { return c_[0] == 1 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem& operator+=(const FqElem& o) { return *this = *this + o; }
  FqElem& operator-=(const FqElem& o) { return *this = *this - o; }
  FqElem& operator*=(const FqElem& o) { return *this = *this * o; }
  FqElem pow(std::uint64_t e) const;
  FqElem inverse() const;
  FqElem frobenius() const { return pow(ctx_->p()); }
  bool operator==(const FqElem& o) const { return c_ == o.c_; }
  bool operator!=(const FqElem& o) const { return c_ != o.c_; }
  bool operator<(const FqElem& o) const { return index() < o.index(); }
  std::string to_string() const;

 private:
  const FieldCtx* ctx_ = nullptr;
  std::array<std::uint32_t, 4> c_{0, 0, 0, 0};
};

// 0 for zero, +1 for nonzero squares, -1 otherwise
int quad_char(const FqElem& u);

// some square root of u if u is a square (Tonelli-Shanks in F_q)
bool sqrt_fq(const FqElem& u, FqElem* root);

// polynomial over F_q, coefficients low degree first
using FqPoly = std::vector<FqElem>;

// roots in F_q with multiplicity, deg f <= 4, f != 0
std::vector<std::pair<FqElem, int>> low_degree_roots(const FqPoly& f);

// number of roots in F_q counted without multiplicity, any degree
std::size_t count_distinct_roots(const FqPoly& f);

// helpers over F_q[X]
FqPoly poly_trim(FqPoly f);
FqPoly poly_mulmod(const FqPoly& a, const FqPoly& b, const FqPoly& m);
FqPoly poly_rem(const FqPoly& a, const FqPoly& m);
FqPoly poly_gcd(FqPoly a, FqPoly b);
FqPoly poly_powmod_x(std::uint64_t e, const FqPoly& m);
FqElem poly_eval(const FqPoly& f, const FqElem& x);

}  // namespace maschke::ffield
