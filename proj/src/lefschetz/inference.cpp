#include <algorithm>
#include <cmath>
#include <set>

#include "maschke/lefschetz/lefschetz.hpp"

namespace maschke::lefschetz {

std::array<std::int64_t, 4> charpoly_from(std::int64_t bp, int eps, std::uint64_t p) {
  // x^3 - b x^2 + eps b p x - eps p^3
  const auto pp = static_cast<std::int64_t>(p);
  return {-eps * pp * pp * pp, eps * bp * pp, -bp, 1};
}

EpsilonResult epsilon_and_charpoly(std::int64_t bp, std::int64_t bp2, std::uint64_t p) {
  const auto pp = static_cast<std::int64_t>(p);
  if (bp == 0) {
    if (bp2 != 0) throw InconsistentCounts("b_p = 0 forces b_{p^2} = 0, got " + std::to_string(bp2));
    const int eps = sigma(kSigma101, p);
    return {eps, true, charpoly_from(bp, eps, p)};
  }
  for (int eps : {1, -1})
    if (bp2 == bp * bp - 2 * eps * pp * bp) return {eps, false, charpoly_from(bp, eps, p)};
  throw InconsistentCounts("no sign fits b_p = " + std::to_string(bp) + ", b_{p^2} = " + std::to_string(bp2) +
                           " at p = " + std::to_string(p));
}

CmVerdict cm_exclusion(const std::vector<CmWitness>& witnesses) {
  CmVerdict v{false, {}};
  std::set<algebra::BigInt> parts;
  for (const auto& w : witnesses) {
    const algebra::BigInt t = algebra::BigInt(static_cast<long>(w.b)) - w.epsilon * static_cast<long>(w.p);
    const algebra::BigInt disc = t * t - 4 * algebra::BigInt(static_cast<unsigned long>(w.p)) * w.p;
    if (disc == 0) continue;  // real eigenvalues say nothing about the CM field
    const algebra::BigInt sf = algebra::squarefree_part(disc);
    v.squarefree.emplace_back(w.p, sf);
    parts.insert(sf);
  }
  if (v.squarefree.empty()) throw InconsistentCounts("all CM witnesses are degenerate");
  v.excluded = parts.size() >= 2;
  return v;
}

namespace {

// integer roots m with |m| <= bound of z^3 - e1 z^2 + e2 z - e3, as a full
// multiset, or nothing
std::optional<std::array<std::int64_t, 3>> integer_cubic_roots(std::int64_t e1, std::int64_t e2, std::int64_t e3,
                                                               std::int64_t bound) {
  for (std::int64_t m1 = -bound; m1 <= bound; ++m1) {
    if (((m1 - e1) * m1 + e2) * m1 - e3 != 0) continue;
    // z^2 - (e1 - m1) z + (e2 - m1 (e1 - m1))
    const std::int64_t s = e1 - m1, pr = e2 - m1 * s;
    const std::int64_t disc = s * s - 4 * pr;
    if (disc < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    if (r * r != disc || (s + r) % 2 != 0) return std::nullopt;
    std::array<std::int64_t, 3> m = {m1, (s - r) / 2, (s + r) / 2};
    if (std::abs(m[1]) > bound || std::abs(m[2]) > bound) return std::nullopt;
    std::sort(m.begin(), m.end());
    return m;
  }
  return std::nullopt;
}

}  // namespace

SexticSplit infer_sextic_split(std::int64_t tp, std::int64_t tp2, std::uint64_t p) {
  if (p % 4 != 1) throw std::invalid_argument("sextic split needs p = 1 mod 4");
  const auto pp = static_cast<std::int64_t>(p);
  if ((tp * tp - tp2) % 2 != 0) throw InconsistentCounts("t_p^2 - t_{p^2} is odd");
  const std::int64_t s1 = tp, s2 = (tp * tp - tp2) / 2;
  // |t_{p^3}| < 6 p^{3/2}
  std::int64_t nmax = 0;
  while ((nmax + 1) * (nmax + 1) < 36 * pp * pp * pp) ++nmax;
  std::int64_t bound = 0;
  while ((bound + 1) * (bound + 1) <= 4 * pp) ++bound;
  SexticSplit out;
  // increasing |n|, positive first
  for (std::int64_t a = 0; a <= nmax; ++a) {
    for (std::int64_t n : {a, -a}) {
      if (a == 0 && n < 0) continue;
      const std::int64_t six_s3 = tp * tp * tp - 3 * tp2 * tp + 2 * n;
      if (six_s3 % 6 != 0) continue;
      const std::int64_t s3 = six_s3 / 6;
      auto m = integer_cubic_roots(s1, s2 - 3 * pp, s3 - 2 * pp * s1, bound);
      if (m) out.candidates.push_back({n, *m});
    }
  }
  if (out.candidates.empty())
    throw InconsistentCounts("no t_{p^3} splits the sextic at p = " + std::to_string(p));
  return out;
}

}  // namespace maschke::lefschetz
