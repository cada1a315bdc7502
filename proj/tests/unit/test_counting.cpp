#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "maschke/counting/counting.hpp"

using namespace maschke::counting;
using maschke::ffield::build_ext;

namespace {

std::int64_t count(VarietyId id, std::uint32_t p, unsigned k = 1, Kernel kernel = Kernel::structured) {
  return count_points(id, build_ext(p, k), kernel).count;
}

std::string temp_path(const char* name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("frozen point counts") {
  CHECK(count(VarietyId::S, 7) == 64);
  CHECK(count(VarietyId::X, 7) == 400);
  CHECK(count(VarietyId::X, 11) == 1680);
  CHECK(count(VarietyId::Y, 7) == 400);
  CHECK(count(VarietyId::W, 17) == 304);
}

TEST_CASE("curve pair differences") {
  auto [c19, t19] = count_curve_pair(19);
  CHECK(t19 - c19 == 32);
  auto [c11, t11] = count_curve_pair(11);
  CHECK(t11 == c11);
  auto [c13, t13] = count_curve_pair(13);
  CHECK(t13 == c13);
}

TEST_CASE("kernels agree") {
  for (auto [p, k] : {std::pair{7u, 1u}, std::pair{11u, 1u}, std::pair{7u, 2u}}) {
    auto f = build_ext(p, k);
    CHECK(structured_kernel_S(f).count == count_points(VarietyId::S, f, Kernel::naive).count);
  }
  for (VarietyId id : {VarietyId::X, VarietyId::W, VarietyId::Sbar, VarietyId::U, VarietyId::Y})
    CHECK(count(id, 11, 1, Kernel::naive) == count(id, 11, 1, Kernel::structured));
}

TEST_CASE("weighted projective oracle for X") {
  for (std::uint32_t p : {7u, 11u}) CHECK(count_X_weighted_oracle(build_ext(p, 1)) == count(VarietyId::X, p));
}

TEST_CASE("counts fit in the ambient space") {
  CHECK(projective_size(7, 3) == 1 + 7 + 49 + 343);
  for (std::uint32_t p : {7u, 11u, 13u}) {
    CHECK(count(VarietyId::S, p) <= static_cast<std::int64_t>(projective_size(p, 3)));
    CHECK(count(VarietyId::X, p) <= 2 * static_cast<std::int64_t>(projective_size(p, 3)));
  }
}

TEST_CASE("bad primes and resolved models are rejected") {
  CHECK_THROWS_AS(count_points(VarietyId::S, maschke::ffield::build_ext_unchecked(5, 1)), std::invalid_argument);
  CHECK_THROWS_AS(count(VarietyId::Utilde, 7), std::invalid_argument);
  CHECK(parse_variety("S") == VarietyId::S);
  CHECK_FALSE(parse_variety("Q").has_value());
  CHECK(parse_kernel("naive") == Kernel::naive);
}

TEST_CASE("workers do not change counts") {
  auto f = build_ext(13, 1);
  CHECK(count_points(VarietyId::S, f, Kernel::naive, 1).count == count_points(VarietyId::S, f, Kernel::naive, 3).count);
}

TEST_CASE("sweep resumes from a checkpoint") {
  std::string path = temp_path("maschke_sweep_test.json");
  std::filesystem::remove(path);
  std::vector<SweepTask> tasks{{VarietyId::S, 7, 1}, {VarietyId::W, 11, 1}, {VarietyId::X, 13, 1}};
  auto fresh = run_sweep(tasks, {});

  // a partial run, then the full run against the warm checkpoint
  run_sweep({tasks[0]}, {Kernel::structured, 1, path});
  auto resumed = run_sweep(tasks, {Kernel::structured, 2, path});
  REQUIRE(resumed.size() == fresh.size());
  std::ostringstream a, b;
  write_counts_csv(a, fresh, false);
  write_counts_csv(b, resumed, false);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("variety,p,k,q,count,kernel,ms\n", 0) == 0);

  std::ofstream(path) << "{ not json";
  CHECK_THROWS_AS(run_sweep(tasks, {Kernel::structured, 1, path}), CheckpointError);
  std::filesystem::remove(path);
}
