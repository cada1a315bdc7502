#include "maschke/ffield/zech.hpp"

#include <stdexcept>

namespace maschke::ffield {

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

ZechField::ZechField(FieldPtr ctx) : ctx_(std::move(ctx)), q_(ctx_->q()) {
  if (q_ > (1ull << 31)) throw std::invalid_argument("field too large for log tables");
  order_ = static_cast<E>(q_ - 1);
  half_ = order_ / 2;
  zero_ = order_;
  const FieldCtx* c = ctx_.get();
  const auto factors = prime_factors(q_ - 1);

  FqElem g(c);
  bool found = false;
  for (std::uint64_t idx = 2; idx < q_ && !found; ++idx) {
    g = FqElem::from_index(c, idx);
    found = true;
    for (auto f : factors)
      if (g.pow((q_ - 1) / f).is_one()) {
        found = false;
        break;
      }
  }
  if (!found) throw std::logic_error("no primitive element");

  log_.assign(q_, zero_);
  exp_.assign(q_ - 1, 0);
  FqElem x = FqElem::from_int(c, 1);
  for (E n = 0; n < order_; ++n) {
    std::uint64_t idx = x.index();
    exp_[n] = idx;
    log_[idx] = n;
    x = x * g;
  }
  if (!x.is_one()) throw std::logic_error("primitive element order mismatch");

  const std::uint64_t p = c->p();
  zech_.assign(q_ - 1, zero_);
  for (E n = 0; n < order_; ++n) {
    std::uint64_t idx = exp_[n];
    std::uint64_t c0 = idx % p;
    std::uint64_t shifted = idx - c0 + (c0 + 1) % p;
    zech_[n] = log_[shifted];
  }
}

ZechField::E ZechField::from_int(std::int64_t v) const {
  return from_fq(FqElem::from_int(ctx_.get(), v));
}

FqElem ZechField::to_fq(E a) const {
  if (a == zero_) return FqElem(ctx_.get());
  return FqElem::from_index(ctx_.get(), exp_[a]);
}

ZechField::E ZechField::pow(E a, std::uint64_t e) const {
  if (a == zero_) return e == 0 ? 0 : zero_;
  return static_cast<E>((static_cast<unsigned __int128>(a) * e) % order_);
}

}  // namespace maschke::ffield
