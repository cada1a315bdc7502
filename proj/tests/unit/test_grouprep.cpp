#include <doctest.h>

#include <random>

#include "maschke/grouprep/classfunc.hpp"

using namespace maschke::grouprep;
using maschke::algebra::BigRational;

namespace {

const GroupDataPtr& group() {
  static const GroupDataPtr g = make_group_data({maschke_g1(), maschke_g2()});
  return g;
}
const TraceFunctions& traces() {
  static const TraceFunctions t = trace_class_functions(group(), 2);
  return t;
}

}  // namespace

TEST_CASE("group order and classes") {
  CHECK(group()->table.order() == 46080);
  CHECK(group()->classes.classes.size() == 59);
  std::size_t total = 0;
  for (const auto& c : group()->classes.classes) total += c.size;
  CHECK(total == 46080);
}

TEST_CASE("generators have the expected orders") {
  auto order = [](const GroupElement& g) {
    GroupElement x = g;
    int n = 1;
    while (x != GroupElement::identity() && n < 1000) x = x * g, ++n;
    return n;
  };
  CHECK(order(GroupElement::scalar_i()) == 4);
  CHECK(order(maschke_g1()) % 2 == 0);
}

TEST_CASE("heisenberg group") {
  GroupTable h = GroupTable::generate(heisenberg_generators());
  CHECK(h.order() == 64);
  // every element of H lies in G
  for (const auto& x : h.elements()) CHECK(group()->table.find(x).has_value());
  // U_v U_w = (-1)^<v,w> U_w U_v
  const GroupElement minus = GroupElement::scalar_i() * GroupElement::scalar_i();
  for (int v = 0; v < 16; ++v)
    for (int w = 0; w < 16; ++w) {
      std::array<int, 4> a{v >> 3 & 1, v >> 2 & 1, v >> 1 & 1, v & 1}, b{w >> 3 & 1, w >> 2 & 1, w >> 1 & 1, w & 1};
      GroupElement ua = heisenberg_element(a[0], a[1], a[2], a[3]), ub = heisenberg_element(b[0], b[1], b[2], b[3]);
      GroupElement lhs = ua * ub, rhs = ub * ua;
      CHECK(lhs == (symplectic_form(a, b) ? minus * rhs : rhs));
    }
}

TEST_CASE("trace class functions") {
  const auto& t = traces();
  std::size_t e = group()->table.index_of(GroupElement::identity());
  CHECK(t.t_X.at_element(e) == 300);
  CHECK(t.t_S.at_element(e) == 301);
  CHECK(class_inner(t.t_X, t.t_X) == 28);
  CHECK(class_inner(t.t_S, t.t_S) == 29);
  auto eps = determinant_character(group());
  CHECK(class_inner(t.t_X, eps) == 2);
  CHECK(class_inner(eps, eps) == 1);
  CHECK(class_inner(eps, ClassFunction::trivial(group())) == 0);
}

TEST_CASE("trace is a class function") {
  std::mt19937_64 rng(20260);
  const auto& tab = group()->table;
  std::uniform_int_distribution<std::size_t> pick(0, tab.order() - 1);
  for (int i = 0; i < 200; ++i) {
    std::size_t g = pick(rng), h = pick(rng);
    std::size_t c = tab.multiply(tab.multiply(h, g), tab.inverse(h));
    CHECK(tab.element(c).trace() == tab.element(g).trace());
    CHECK(group()->classes.class_of[c] == group()->classes.class_of[g]);
  }
}

TEST_CASE("heisenberg isotypic dimensions") {
  auto iso = h_isotypic_dims(traces().t_X);
  CHECK(iso.total == 300);
  REQUIRE(iso.dims.size() == 16);
  for (const auto& [w, d] : iso.dims) CHECK(d == (w == std::array<int, 4>{0, 0, 0, 0} ? 30 : 18));
}
