#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "maschke/algebra/rational.hpp"

namespace maschke::algebra {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  IntMatrix transpose() const;
  bool is_symmetric() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> a_;
};

// fraction-free Bareiss elimination; pivot_cols receives the pivot columns
std::size_t bareiss_rank(const IntMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

// exact rank over Q, cross-checked against rank modulo three 30-bit primes;
// throws std::logic_error if a modular rank exceeds the rational rank or all disagree
std::size_t int_rank(const IntMatrix& m);

// the three fixed 30-bit primes used by int_rank
const std::vector<std::uint64_t>& check_primes();

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// rank over any exact field, entries given row-major
template <class F>
std::size_t field_rank(std::vector<std::vector<F>> a) {
  using T = CoeffTraits<F>;
  std::size_t rank = 0;
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && T::is_zero(a[piv][c])) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    F inv = T::inverse(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (T::is_zero(a[r][c])) continue;
      F f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] = a[r][k] - f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace maschke::algebra
