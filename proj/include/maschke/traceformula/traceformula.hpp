#pragma once

#include <vector>

#include "maschke/algebra/rational.hpp"

namespace maschke::traceformula {

using algebra::BigInt;
using algebra::BigRational;

// eigenvalue multiplicities of a linear map on C^{n+2}: mults[k] is the
// multiplicity of zeta_d^k for a fixed primitive d-th root of unity zeta_d
struct MultSpec {
  unsigned d = 0;
  unsigned n = 0;
  unsigned r = 1;
  std::vector<unsigned> mults;

  unsigned total() const;
};

struct EulerPrimitive {
  BigInt euler;
  BigInt primitive;
};

// Euler characteristic and primitive middle Betti number of a smooth degree-d
// hypersurface of dimension n
EulerPrimitive euler_and_primitive(unsigned d, unsigned n);

// trace on primitive middle cohomology of the hypersurface {f = 0}
BigRational chenevert_hypersurface(const MultSpec& spec);

// trace on middle cohomology of the cyclic r:1 cover branched along {f = 0}
BigRational chenevert_cover(const MultSpec& spec);

// the spec of sigma extended by one more coordinate with trivial action, n + 1
MultSpec extend_by_trivial(const MultSpec& spec);

}  // namespace maschke::traceformula
