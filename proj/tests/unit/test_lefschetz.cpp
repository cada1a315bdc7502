#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "maschke/lefschetz/lefschetz.hpp"

using namespace maschke::lefschetz;
using maschke::counting::VarietyId;
using maschke::ffield::build_ext;

namespace {

CountMap counts_for(std::vector<VarietyId> ids, std::uint32_t p, unsigned k = 1) {
  CountMap m;
  auto f = build_ext(p, k);
  for (auto id : ids) m[id] = maschke::counting::count_points(id, f).count;
  return m;
}

const Tables& tables() {
  static const Tables t = load_tables(default_fixture_dir());
  return t;
}

}  // namespace

TEST_CASE("quadratic characters") {
  CHECK(sigma(kSigma010, 17) == -1);
  CHECK(sigma(kSigma100, 17) == 1);
  CHECK(sigma(kSigma001, 17) == -1);
  CHECK(sigma(kSigma101, 17) == -1);
  CHECK(sigma(kTrivial, 11) == 1);
  // at q = p^2 every character is trivial
  CHECK(sigma(kSigma101, 13, 2) == 1);
  CHECK(all_signatures().size() == 8);
}

TEST_CASE("traces from counts") {
  CHECK(extract_trace(Target::aW, 17, 1, counts_for({VarietyId::W}, 17)).value == 14);
  CHECK(extract_trace(Target::bS, 7, 1, counts_for({VarietyId::S, VarietyId::W}, 7)).value == -7);
  CHECK(extract_trace(Target::bS, 11, 1, counts_for({VarietyId::S, VarietyId::W}, 11)).value == -13);
  CHECK(extract_trace(Target::trYhat, 7, 1, counts_for({VarietyId::Y}, 7)).value == 0);
  CHECK(extract_trace(Target::trYhat, 11, 1, counts_for({VarietyId::Y}, 11)).value == 180);
  CHECK_THROWS_AS(extract_trace(Target::bS, 7, 1, counts_for({VarietyId::S}, 7)), MissingCount);
}

TEST_CASE("node corrections") {
  // +12p only when p = 1 mod 3
  CHECK(resolved_W(100, 7, 1) == 100 + 12 * 7);
  CHECK(resolved_W(100, 17, 1) == 100);
  CHECK(resolved_U(100, 7, 1) == 100 + 30 * 7);
}

TEST_CASE("weil bounds") {
  CHECK(within_weil_bound(Target::aW, 17, 34));
  CHECK_FALSE(within_weil_bound(Target::aW, 17, 35));
  CHECK(within_weil_bound(Target::bS, 11, 33));
  CHECK_FALSE(within_weil_bound(Target::bS, 11, 34));
}

TEST_CASE("epsilon and the characteristic polynomial") {
  auto r = epsilon_and_charpoly(5, 195, 17);
  CHECK(r.epsilon == -1);
  CHECK_FALSE(r.from_sigma);
  CHECK(r.charpoly == charpoly_from(5, -1, 17));
  // zero trace falls back to the character
  auto z = epsilon_and_charpoly(0, 0, 47);
  CHECK(z.from_sigma);
  CHECK(z.epsilon == sigma(kSigma101, 47));
  CHECK_THROWS_AS(epsilon_and_charpoly(5, 196, 17), InconsistentCounts);
}

TEST_CASE("CM exclusion") {
  auto v = cm_exclusion({{13, -11, sigma(kSigma101, 13)}, {17, 5, -1}, {29, -21, 1}});
  CHECK(v.excluded);
  bool saw17 = false;
  for (const auto& [p, sf] : v.squarefree)
    if (p == 17) saw17 = sf == -42;
  CHECK(saw17);
}

TEST_CASE("sextic split") {
  auto s17 = infer_sextic_split(-2, -58, 17);
  REQUIRE(s17.unique());
  CHECK(s17.candidates[0].m == std::array<std::int64_t, 3>{-6, 2, 2});
  auto s29 = infer_sextic_split(2, -130, 29);
  REQUIRE(s29.unique());
  CHECK(s29.candidates[0].m == std::array<std::int64_t, 3>{-2, -2, 6});
}

TEST_CASE("fixture tables") {
  CHECK(tables()["bS"].require(11) == -13);
  CHECK(tables()["heckeW"].require(17) == 14);
  CHECK(tables()["trYhat"].require(361) == -122970);
  CHECK_FALSE(tables()["f24B"].at(37).has_value());
  CHECK_THROWS_AS(tables()["f24B"].require(37), FixtureError);
}

TEST_CASE("curve models reproduce the printed weight 2 tables") {
  for (const auto& m : curve_models()) {
    CAPTURE(m.label);
    for (const auto& [p, v] : tables()[m.label].coeff) CHECK(curve_ap(m.label, p) == v);
  }
  CHECK(coefficient(tables(), "f24B", 37) == 6);
  CHECK(coefficient(tables(), "f15C", 41) == 10);
  CHECK(coefficient(tables(), "f120E", 17) == -6);
}

TEST_CASE("corrupted fixture names file and row") {
  auto dir = std::filesystem::temp_directory_path() / "maschke_bad_fixtures";
  std::filesystem::create_directories(dir);
  for (const auto& e : std::filesystem::directory_iterator(default_fixture_dir()))
    std::filesystem::copy_file(e.path(), dir / e.path().filename(), std::filesystem::copy_options::overwrite_existing);
  {
    std::ofstream out(dir / "f24B.csv");
    out << "# broken\np,coeff\n7,0\n11,four\n";
  }
  try {
    load_tables(dir.string());
    FAIL("expected a fixture error");
  } catch (const FixtureError& e) {
    std::string what = e.what();
    CHECK(what.find("f24B.csv") != std::string::npos);
    CHECK(what.find("row 4") != std::string::npos);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("conjectured identities at small primes") {
  auto at = [](Identity id, std::uint32_t p) {
    return check_identity(id, p, counts_for(identity_inputs(id), p), tables());
  };
  CHECK(at(Identity::XPrinted, 7).pass);
  CHECK(at(Identity::XPrinted, 13).pass);
  // the printed coefficients fail at p = 3 mod 4; the composed ones hold
  CHECK_FALSE(at(Identity::XPrinted, 11).pass);
  CHECK(at(Identity::XComposed, 11).pass);
  CHECK(at(Identity::XComposed, 19).pass);
  CHECK(at(Identity::YhatForms, 13).pass);
  CHECK(at(Identity::Prym, 19).pass);
  CHECK(at(Identity::CplusForms, 23).pass);
  CHECK(at(Identity::C3Forms, 29).pass);
  CHECK(at(Identity::Div45, 13).pass);
}
