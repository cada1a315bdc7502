#include <stdexcept>

#include "maschke/nslattice/nslattice.hpp"

namespace maschke::nslattice {

namespace {

using algebra::mulmod;
using algebra::invmod;

std::int64_t trace_mod(const algebra::IntMatrix& gram, const std::vector<std::size_t>& perm, std::uint64_t P,
                       std::size_t* rank_out) {
  const std::size_t n = gram.rows();
  auto red = [&](const algebra::BigInt& x) {
    algebra::BigInt r = x % static_cast<unsigned long>(P);
    if (r < 0) r += static_cast<unsigned long>(P);
    return r.get_ui();
  };
  // pivot columns of the Gram matrix mod P
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = red(gram(i, j));
  std::vector<std::size_t> pivots;
  {
    auto m = a;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < n; ++c) {
      std::size_t piv = r;
      while (piv < n && m[piv][c] == 0) ++piv;
      if (piv == n) continue;
      std::swap(m[piv], m[r]);
      const std::uint64_t inv = invmod(m[r][c], P);
      for (std::size_t i = r + 1; i < n; ++i) {
        if (m[i][c] == 0) continue;
        const std::uint64_t f = mulmod(m[i][c], inv, P);
        for (std::size_t k = c; k < n; ++k) m[i][k] = (m[i][k] + P - mulmod(f, m[r][k], P)) % P;
      }
      pivots.push_back(c);
      ++r;
    }
  }
  const std::size_t rank = pivots.size();
  *rank_out = rank;
  // B = G[:, pivots] has full column rank and P B = G[:, perm(pivots)] = B M;
  // reducing [B | P B] leaves [I | M] on top
  std::vector<std::vector<std::uint64_t>> aug(n, std::vector<std::uint64_t>(2 * rank));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < rank; ++k) {
      aug[i][k] = a[i][pivots[k]];
      aug[i][rank + k] = a[i][perm[pivots[k]]];
    }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rank; ++c) {
    std::size_t piv = r;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("pivot columns not independent");
    std::swap(aug[piv], aug[r]);
    const std::uint64_t inv = invmod(aug[r][c], P);
    for (auto& x : aug[r]) x = mulmod(x, inv, P);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const std::uint64_t f = aug[i][c];
      for (std::size_t k = c; k < 2 * rank; ++k) aug[i][k] = (aug[i][k] + P - mulmod(f, aug[r][k], P)) % P;
    }
    ++r;
  }
  for (std::size_t i = rank; i < n; ++i)
    for (std::size_t k = rank; k < 2 * rank; ++k)
      if (aug[i][k] != 0) throw std::logic_error("permutation does not preserve the column space");
  std::uint64_t t = 0;
  for (std::size_t k = 0; k < rank; ++k) t = (t + aug[k][rank + k]) % P;
  const auto tr = static_cast<std::int64_t>(t > P / 2 ? static_cast<std::int64_t>(t) - static_cast<std::int64_t>(P)
                                                      : static_cast<std::int64_t>(t));
  return tr;
}

std::array<int, 3> signs_at(std::uint64_t p) {
  return {p % 4 == 3 ? -1 : 1, p % 3 == 2 ? -1 : 1, (p % 5 == 2 || p % 5 == 3) ? -1 : 1};
}

}  // namespace

std::int64_t trace_on_column_space(const algebra::IntMatrix& gram, const std::vector<std::size_t>& perm) {
  const auto& primes = algebra::check_primes();
  std::size_t r0 = 0, r1 = 0;
  const std::int64_t t0 = trace_mod(gram, perm, primes[0], &r0);
  const std::int64_t t1 = trace_mod(gram, perm, primes[1], &r1);
  if (r0 != r1 || t0 != t1) throw std::logic_error("modular traces disagree");
  if (t0 > static_cast<std::int64_t>(r0) || -t0 > static_cast<std::int64_t>(r0))
    throw std::logic_error("trace exceeds the rank");
  return t0;
}

std::vector<std::uint64_t> signature_primes() {
  std::array<std::uint64_t, 8> found{};
  std::size_t missing = 8;
  for (std::uint64_t p = 7; missing > 0; p += 2) {
    if (!algebra::is_prime(p)) continue;
    const auto s = signs_at(p);
    const int idx = 4 * (s[0] < 0) + 2 * (s[1] < 0) + (s[2] < 0);
    if (found[idx] == 0) {
      found[idx] = p;
      --missing;
    }
  }
  return {found.begin(), found.end()};
}

GaloisSample galois_sample(std::uint64_t p) {
  auto ctx = ffield::build_ext(static_cast<std::uint32_t>(p), 2);
  LineSet lines = orbit_lines(Seed::l3, ctx);
  const LineSet other = orbit_lines(Seed::l5, ctx);
  for (const auto& l : other.lines()) lines.add(l);
  const algebra::IntMatrix g = gram_matrix(lines);
  const auto perm = frobenius_permutation(lines);
  const std::int64_t tr = trace_on_column_space(g, perm);
  const std::size_t rank = algebra::rank_mod_p(g, algebra::check_primes()[0]);
  return {p, signs_at(p), lines.size(), rank, tr};
}

GaloisResult galois_multiplicities(const std::vector<std::uint64_t>& primes) {
  GaloisResult res{};
  std::array<bool, 8> seen{};
  for (auto p : primes) {
    res.samples.push_back(galois_sample(p));
    const auto& s = res.samples.back().signs;
    seen[4 * (s[0] < 0) + 2 * (s[1] < 0) + (s[2] < 0)] = true;
  }
  for (bool b : seen)
    if (!b) throw std::invalid_argument("sample primes must cover all eight Frobenius classes");
  // Frobenius classes and characters of (Z/2)^3 form a Hadamard system
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) {
        std::int64_t sum = 0;
        std::array<bool, 8> used{};
        for (const auto& smp : res.samples) {
          const int idx = 4 * (smp.signs[0] < 0) + 2 * (smp.signs[1] < 0) + (smp.signs[2] < 0);
          if (used[idx]) continue;  // one sample per class
          used[idx] = true;
          const int chi = (a ? smp.signs[0] : 1) * (b ? smp.signs[1] : 1) * (c ? smp.signs[2] : 1);
          sum += chi * smp.trace;
        }
        if (sum % 8 != 0) throw std::logic_error("non-integral multiplicity");
        res.multiplicity[4 * a + 2 * b + c] = sum / 8;
      }
  return res;
}

}  // namespace maschke::nslattice
