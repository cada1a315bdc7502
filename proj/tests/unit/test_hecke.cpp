#include <doctest.h>

#include "maschke/hecke/hecke.hpp"

using namespace maschke::hecke;
using maschke::algebra::BigInt;

TEST_CASE("values at 17") {
  auto v = hecke_value(17);
  CHECK(v.type == SplitType::split);
  REQUIRE(v.beta.has_value());
  QuadRingElem want{BigInt(11), BigInt(-8)};
  CHECK((*v.beta == want || v.beta->conj() == want));
  CHECK(v.beta->norm() == 289);
  CHECK(phi3(*v.beta) == 1);
  CHECK(v.ap == 14);
}

TEST_CASE("printed a_p") {
  const std::pair<std::uint64_t, std::int64_t> rows[] = {{7, 0},   {11, 0},  {13, 0},   {17, 14}, {19, -22}, {23, -34},
                                                         {29, 0},  {31, 2},  {79, 98},  {83, -154}, {89, 0},   {97, 0}};
  for (auto [p, a] : rows) {
    CAPTURE(p);
    CHECK(hecke_ap(p) == a);
  }
}

TEST_CASE("split primes") {
  for (std::uint64_t p : {7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53}) {
    auto v = hecke_value(p);
    if (v.type == SplitType::inert) {
      CHECK(v.ap == 0);
      continue;
    }
    REQUIRE(v.beta.has_value());
    CHECK(v.beta->norm() == BigInt(static_cast<long>(p * p)));
    CHECK(phi3(*v.beta) == 1);
    CHECK(std::abs(v.ap) <= static_cast<std::int64_t>(2 * p));
  }
}

TEST_CASE("prime powers") {
  // inert: a_{p^2} = 2 p^2; split: a_{p^2} = a_p^2 - 2 p^2
  CHECK(hecke_prime_power(7, 2) == 2 * 49);
  CHECK(hecke_prime_power(17, 2) == 14 * 14 - 2 * 289);
  CHECK_THROWS(hecke_value(5));
}
