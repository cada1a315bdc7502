#include <doctest.h>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/nslattice/nslattice.hpp"

using namespace maschke::nslattice;
using maschke::ffield::build_ext;

TEST_CASE("rational line counts") {
  CHECK(enumerate_lines(build_ext(7, 1)).size() == 16);
  CHECK(enumerate_lines(build_ext(13, 1)).size() == 160);
}

TEST_CASE("lines over F_61") {
  auto f = build_ext(61, 1);
  LineSet all = enumerate_lines(f);
  REQUIRE(all.size() == 352);
  for (const auto& l : all.lines()) CHECK(line_on_S(l));
  LineSet o3 = orbit_lines(Seed::l3, f), o5 = orbit_lines(Seed::l5, f);
  CHECK(o3.size() == 160);
  CHECK(o5.size() == 192);
  for (const auto& l : o3.lines()) CHECK_FALSE(o5.contains(l));
  auto gram = gram_matrix(all);
  CHECK(gram.is_symmetric());
  // self-intersection of a line on a degree 8 surface is 2 - d = -6
  CHECK(gram(0, 0) == -6);
  CHECK(maschke::algebra::int_rank(gram) == 202);
}

TEST_CASE("galois multiplicities") {
  auto g = galois_multiplicities(signature_primes());
  CHECK(g.multiplicity == std::array<std::int64_t, 8>{44, 28, 28, 0, 42, 33, 27, 0});
  for (const auto& s : g.samples) CHECK(s.rank == 202);
}
