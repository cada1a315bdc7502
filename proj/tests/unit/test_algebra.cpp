#include <doctest.h>

#include "maschke/algebra/int_matrix.hpp"
#include "maschke/algebra/multipoly.hpp"
#include "maschke/algebra/quotient.hpp"
#include "maschke/algebra/univariate.hpp"

using namespace maschke::algebra;

TEST_CASE("rational helpers") {
  CHECK(squarefree_part(BigInt(-672)) == -42);
  CHECK(squarefree_part(BigInt(-864)) == -6);
  CHECK(ipow(BigInt(7), 4) == 2401);
  CHECK(is_integral(make_rational(6, 3)));
  CHECK_FALSE(is_integral(BigRational(1, 2)));
  CHECK(to_int64(BigInt(-296)) == -296);
  auto ps = primes_in_range(7, 30);
  CHECK(ps == std::vector<std::uint64_t>{7, 11, 13, 17, 19, 23, 29});
  CHECK(is_prime(10007));
  CHECK_FALSE(is_prime(10011));
}

TEST_CASE("gaussian rationals") {
  GaussRational i = GaussRational::i();
  CHECK(i * i == GaussRational(-1));
  GaussRational z(BigRational(3), BigRational(4));
  CHECK(z.norm() == 25);
  CHECK(z * z.inverse() == GaussRational(1));
}

TEST_CASE("univariate gcd and resultant") {
  QPoly x = QPoly::monomial(BigRational(1), 1), one = QPoly::constant(BigRational(1));
  QPoly f = (x - one) * (x + one), g = (x - one) * (x - QPoly::constant(BigRational(2)));
  CHECK(QPoly::gcd(f, g) == x - one);
  CHECK(resultant(f, g) == 0);
  // Res(x^2 + 1, x - 2) = 5
  CHECK(resultant(x * x + one, x - QPoly::constant(BigRational(2))) == 5);
  auto [q, r] = QPoly::divrem(f, x - one);
  CHECK(q == x + one);
  CHECK(r.is_zero());
}

TEST_CASE("quotient ring arithmetic") {
  // Q[x]/(x^2 + 1) is Q(i)
  QPoly m = QPoly(std::vector<BigRational>{1, 0, 1});
  auto ring = make_quot_ring(m);
  QuotElem i = QuotElem::generator(ring);
  CHECK(i * i == QuotElem(-1));
  QuotElem z = i + QuotElem(2);
  CHECK(z * z.inverse() == QuotElem(1));
}

TEST_CASE("multivariate polynomials") {
  std::vector<std::string> v{"x", "y"};
  QMultiPoly x = QMultiPoly::variable(v, "x"), y = QMultiPoly::variable(v, "y");
  QMultiPoly f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  CHECK(f.degree_in(0) == 2);
}

TEST_CASE("integer rank") {
  IntMatrix m(3, 3);
  int vals[3][3] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  CHECK(int_rank(m) == 2);
  CHECK(bareiss_rank(m) == 2);
  CHECK(rank_mod_p(m, 1000003) == 2);
  CHECK(m.transpose()(0, 1) == 4);
}
