#include <doctest.h>

#include <set>

#include "maschke/ffield/field.hpp"
#include "maschke/ffield/zech.hpp"

using namespace maschke::ffield;

TEST_CASE("field construction rejects bad input") {
  CHECK_THROWS_AS(build_ext(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_ext(9, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_ext(7, 5), std::invalid_argument);
  CHECK_NOTHROW(build_ext_unchecked(3, 2));
}

TEST_CASE("field axioms over F_49 and F_{11^3}") {
  for (auto [p, k] : {std::pair{7u, 2u}, std::pair{11u, 3u}}) {
    auto f = build_ext(p, k);
    CHECK(f->q() == (k == 2 ? 49u : 1331u));
    FqElem g = FqElem::gen(f.get());
    // frobenius has order k
    FqElem h = g;
    for (unsigned i = 0; i < k; ++i) h = h.frobenius();
    CHECK(h == g);
    for (std::uint64_t idx = 1; idx < f->q(); idx += 37) {
      FqElem a = FqElem::from_index(f.get(), idx);
      CHECK((a * a.inverse()).is_one());
      CHECK(a.pow(f->q() - 1).is_one());
      CHECK(a.index() == idx);
    }
  }
}

TEST_CASE("zech logarithms agree with direct arithmetic") {
  auto f = build_ext(13, 2);
  ZechField z(f);
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < f->q(); i += 5) {
    FqElem a = FqElem::from_index(f.get(), i);
    FqElem b = FqElem::from_index(f.get(), (i * 7 + 3) % f->q());
    auto la = z.from_fq(a), lb = z.from_fq(b);
    CHECK(z.to_fq(z.add(la, lb)) == a + b);
    CHECK(z.to_fq(z.mul(la, lb)) == a * b);
    CHECK(z.to_fq(z.neg(la)) == -a);
  }
  // half the nonzero elements are squares
  int squares = 0;
  for (std::uint64_t i = 1; i < f->q(); ++i) squares += z.chi(z.from_fq(FqElem::from_index(f.get(), i))) == 1;
  CHECK(squares == 84);
}
