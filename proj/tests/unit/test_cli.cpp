#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maschke/cli/report.hpp"
#include "maschke/cli/run.hpp"
#include "maschke/lefschetz/lefschetz.hpp"

using namespace maschke::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int s = run(args, out, err);
  return {s, out.str(), err.str()};
}

fs::path scratch(const char* name) {
  fs::path p = fs::temp_directory_path() / name;
  fs::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("count writes one csv row per prime") {
  auto r = call({"count", "--variety", "S", "--primes", "7..23", "--no-timing"});
  REQUIRE(r.status == 0);
  // the timing column stays in the header and is left empty
  CHECK(r.out.rfind("variety,p,k,q,count,kernel,ms\nS,7,1,7,64,structured,\nS,11,", 0) == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1 + 6);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(call({"count", "--bogus"}).status == 2);
  CHECK(call({}).status == 2);
  CHECK(call({"count", "--variety", "S", "--primes", "5..11"}).status == 2);
  CHECK(call({"count", "--variety", "S", "--primes", "13..11"}).status == 2);
  CHECK(call({"count", "--variety", "S", "--primes", "7-11"}).status == 2);
  CHECK(call({"count", "--variety", "Q", "--primes", "7..11"}).status == 2);
  CHECK(call({"count", "--variety", "S", "--workers", "0"}).status == 2);
  CHECK(call({"hecke", "--format", "xml"}).status == 2);
  CHECK(call({"report", "--criteria", "13"}).status == 2);
  auto r = call({"count", "--bogus"});
  CHECK(r.err.find("usage error") != std::string::npos);
}

TEST_CASE("corrupted fixture is a configuration error naming the file and row") {
  fs::path dir = scratch("maschke_cli_fixtures");
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(maschke::lefschetz::default_fixture_dir()))
    fs::copy_file(e.path(), dir / e.path().filename());
  std::ofstream(dir / "f24B.csv") << "p,coeff\n7,0\n11,x\n";
  auto r = call({"report", "--criteria", "1", "--fixtures", dir.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("fixture error") != std::string::npos);
  CHECK(r.err.find("f24B.csv") != std::string::npos);
  CHECK(r.err.find("row 3") != std::string::npos);
  fs::remove_all(dir);
}

TEST_CASE("unreadable checkpoint is a configuration error") {
  fs::path ck = scratch("maschke_cli_checkpoint.json");
  std::ofstream(ck) << "[1, 2";
  auto r = call({"count", "--variety", "W", "--primes", "7..11", "--checkpoint", ck.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("checkpoint error") != std::string::npos);
  fs::remove(ck);
}

TEST_CASE("warm checkpoint gives byte-identical payloads") {
  fs::path ck = scratch("maschke_cli_warm.json");
  std::vector<std::string> args{"traces", "--target", "aW,bS", "--primes", "7..31", "--checkpoint", ck.string()};
  auto cold = call(args), warm = call(args);
  REQUIRE(cold.status == 0);
  CHECK(cold.out == warm.out);
  CHECK(cold.out.find("aW,17,1,17,14") != std::string::npos);
  CHECK(cold.out.find("bS,11,1,11,-13") != std::string::npos);

  std::vector<std::string> rep{"report", "--criteria", "4,5", "--primes", "7..31", "--no-timing", "--checkpoint",
                               ck.string()};
  auto a = call(rep), b = call(rep);
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  fs::remove(ck);
}

TEST_CASE("report json") {
  auto r = call({"report", "--criteria", "1,11", "--no-timing"});
  CHECK(r.status == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["tool"] == "maschke");
  CHECK(doc["pass"] == true);
  REQUIRE(doc["criteria"].size() == 2);
  CHECK(doc["criteria"][0]["criterion"] == 1);
  CHECK_FALSE(doc["criteria"][0].contains("seconds"));
}

TEST_CASE("hecke, tangent, lines and group subcommands") {
  auto h = call({"hecke", "--primes", "17..19"});
  CHECK(h.status == 0);
  CHECK(h.out.find("p,type,a,b,ap\n") == 0);
  CHECK(h.out.find(",14\n") != std::string::npos);

  auto t = call({"tangent", "--check", "ABC,QUOT"});
  CHECK(t.status == 0);
  auto doc = nlohmann::json::parse(t.out);
  CHECK(doc["checks"].size() == 2);
  CHECK(doc["checks"][0]["verdict"] == "pass");
  CHECK(call({"tangent", "--check", "NOPE"}).status == 2);

  auto l = call({"lines", "--p", "13"});
  CHECK(l.status == 0);
  CHECK(nlohmann::json::parse(l.out)["lines"] == 160);

  auto g = call({"group"});
  CHECK(g.status == 0);
  auto gd = nlohmann::json::parse(g.out);
  CHECK(gd["order"] == 46080);
  CHECK(gd["inner_products"]["t_X,t_X"] == "28");
}

TEST_CASE("the installed tool reports exit codes") {
  std::string cli = MASCHKE_CLI_PATH;
  CHECK(WEXITSTATUS(std::system((cli + " hecke --primes 7..11 > /dev/null").c_str())) == 0);
  CHECK(WEXITSTATUS(std::system((cli + " hecke --nope 2> /dev/null").c_str())) == 2);
}
