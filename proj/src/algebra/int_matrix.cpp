#include <algorithm>
#include "maschke/algebra/int_matrix.hpp"

#include <random>

namespace maschke::algebra {

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::size_t bareiss_rank(const IntMatrix& m, std::vector<std::size_t>* pivot_cols) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m(i, j);
  if (pivot_cols) pivot_cols->clear();
  BigInt prev = 1;
  std::size_t rank = 0;
  BigInt t;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && sgn(a[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const BigInt& pv = a[rank][c];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const BigInt lead = a[r][c];
      for (std::size_t k = c + 1; k < cols; ++k) {
        // a[r][k] = (pv * a[r][k] - lead * a[rank][k]) / prev, exact
        t = pv * a[r][k];
        t -= lead * a[rank][k];
        mpz_divexact(a[r][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = pv;
    if (pivot_cols) pivot_cols->push_back(c);
    ++rank;
  }
  return rank;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  BigInt pz = static_cast<unsigned long>(p);
  BigInt r;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), pz.get_mpz_t());
      a[i][j] = r.get_ui();
    }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    std::uint64_t inv = invmod(a[rank][c], p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::uint64_t f = mulmod(a[i][c], inv, p);
      for (std::size_t k = c; k < cols; ++k) a[i][k] = (a[i][k] + p - mulmod(f, a[rank][k], p)) % p;
    }
    ++rank;
  }
  return rank;
}

const std::vector<std::uint64_t>& check_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::mt19937_64 gen(20240611u);
    std::uniform_int_distribution<std::uint64_t> dist(1u << 29, (1u << 30) - 1);
    std::vector<std::uint64_t> out;
    while (out.size() < 3) {
      std::uint64_t c = dist(gen) | 1u;
      if (is_prime(c) && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    return out;
  }();
  return primes;
}

std::size_t int_rank(const IntMatrix& m) {
  const std::size_t exact = bareiss_rank(m);
  bool agree = exact == 0;
  for (std::uint64_t p : check_primes()) {
    std::size_t rp = rank_mod_p(m, p);
    if (rp > exact) throw std::logic_error("modular rank exceeds rational rank");
    if (rp == exact) agree = true;
  }
  if (!agree) throw std::logic_error("rational rank not confirmed by any check prime");
  return exact;
}

}  // namespace maschke::algebra
