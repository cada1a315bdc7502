#include "maschke/lefschetz/lefschetz.hpp"

namespace maschke::lefschetz {

std::string DirichletSignature::name() const {
  return "sigma_" + std::to_string(a) + std::to_string(b) + std::to_string(c);
}

int sigma(const DirichletSignature& s, std::uint64_t p) {
  int v = 1;
  if (s.a && p % 4 == 3) v = -v;
  if (s.b && p % 3 == 2) v = -v;
  if (s.c && (p % 5 == 2 || p % 5 == 3)) v = -v;
  return v;
}

int sigma(const DirichletSignature& s, std::uint64_t p, unsigned k) {
  return (k % 2 == 0) ? 1 : sigma(s, p);
}

std::vector<DirichletSignature> all_signatures() {
  std::vector<DirichletSignature> out;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) out.push_back({a, b, c});
  return out;
}

const std::vector<SignatureMultiplicity>& line_lattice_decomposition() {
  static const std::vector<SignatureMultiplicity> d = {
      {{0, 0, 0}, 44}, {{0, 0, 1}, 28}, {{0, 1, 0}, 28}, {{1, 0, 0}, 42}, {{1, 0, 1}, 33}, {{1, 1, 0}, 27},
  };
  return d;
}

std::int64_t line_lattice_trace(std::uint64_t p, unsigned k) {
  std::int64_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= static_cast<std::int64_t>(p);
  std::int64_t t = 0;
  for (const auto& [sig, m] : line_lattice_decomposition()) t += m * sigma(sig, p, k);
  return q * t;
}

}  // namespace maschke::lefschetz
