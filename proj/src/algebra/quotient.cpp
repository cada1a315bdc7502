#include "maschke/algebra/quotient.hpp"

#include <stdexcept>

namespace maschke::algebra {

QuotRing::QuotRing(QPoly modulus, std::string var) : var_(std::move(var)) {
  if (modulus.degree() < 1) throw std::domain_error("quotient modulus must have positive degree");
  modulus_ = modulus.monic();
}

QuotRingPtr make_quot_ring(const QPoly& modulus, const std::string& var) {
  return std::make_shared<const QuotRing>(modulus, var);
}

QuotElem::QuotElem(QuotRingPtr ring, QPoly value) : ring_(std::move(ring)), value_(std::move(value)) {
  if (ring_) value_ = ring_->reduce(value_);
}

QuotElem QuotElem::generator(QuotRingPtr ring) {
  return QuotElem(ring, QPoly::monomial(BigRational(1), 1));
}

void QuotElem::adopt(const QuotElem& o) {
  if (!o.ring_) return;
  if (!ring_) {
    ring_ = o.ring_;
    return;
  }
  if (ring_ != o.ring_ && ring_->modulus() != o.ring_->modulus())
    throw std::domain_error("mixing elements of different quotient rings");
}

QuotElem& QuotElem::operator+=(const QuotElem& o) {
  adopt(o);
  value_ += o.value_;
  return *this;
}

QuotElem& QuotElem::operator-=(const QuotElem& o) {
  adopt(o);
  value_ -= o.value_;
  return *this;
}

QuotElem& QuotElem::operator*=(const QuotElem& o) {
  adopt(o);
  value_ = value_ * o.value_;
  if (ring_) value_ = ring_->reduce(value_);
  return *this;
}

QuotElem QuotElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (!ring_) return QuotElem(CoeffTraits<BigRational>::inverse(value_.coeff(0)));
  auto [g, s, t] = QPoly::xgcd(value_, ring_->modulus());
  if (g.degree() != 0) throw std::domain_error("element is a zero divisor in " + ring_->modulus().to_string());
  return QuotElem(ring_, s);
}

bool operator==(const QuotElem& a, const QuotElem& b) {
  // constants compare by value; a constant from a null ring is already reduced
  return a.value_ == b.value_;
}

std::string QuotElem::to_string() const {
  return value_.to_string(ring_ ? ring_->var() : "x");
}

}  // namespace maschke::algebra
