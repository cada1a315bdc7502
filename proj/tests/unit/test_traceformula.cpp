#include <doctest.h>

#include "maschke/traceformula/traceformula.hpp"

using namespace maschke::traceformula;

TEST_CASE("octic surface invariants") {
  auto ep = euler_and_primitive(8, 2);
  CHECK(ep.euler == 304);
  CHECK(ep.primitive == 301);
  // a smooth quartic surface
  auto k3 = euler_and_primitive(4, 2);
  CHECK(k3.euler == 24);
  CHECK(k3.primitive == 21);
  // plane cubic: genus one
  CHECK(euler_and_primitive(3, 1).euler == 0);
}

TEST_CASE("identity traces") {
  MultSpec surface{8, 2, 1, std::vector<unsigned>(8, 0)};
  surface.mults[0] = 4;
  CHECK(chenevert_hypersurface(surface) == 301);
  MultSpec cover{8, 2, 2, std::vector<unsigned>(8, 0)};
  cover.mults[0] = 4;
  CHECK(chenevert_cover(cover) == 300);
}

TEST_CASE("r = d cover is the hypersurface one dimension up") {
  for (unsigned d = 2; d <= 6; ++d)
    for (unsigned n = 1; n <= 3; ++n) {
      MultSpec s{d, n, d, std::vector<unsigned>(d, 0)};
      // a few spread-out multiplicity vectors
      for (unsigned shift = 0; shift < d; ++shift) {
        std::fill(s.mults.begin(), s.mults.end(), 0);
        for (unsigned j = 0; j < n + 2; ++j) s.mults[(j * shift) % d]++;
        CAPTURE(d);
        CAPTURE(n);
        CHECK(chenevert_cover(s) == chenevert_hypersurface(extend_by_trivial(s)));
      }
    }
}

TEST_CASE("extend_by_trivial adds one fixed coordinate") {
  MultSpec s{8, 2, 2, {1, 1, 1, 1, 0, 0, 0, 0}};
  MultSpec e = extend_by_trivial(s);
  CHECK(e.n == 3);
  CHECK(e.mults[0] == 2);
  CHECK(e.total() == 5);
}
