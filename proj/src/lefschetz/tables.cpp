#include <algorithm>
#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "maschke/lefschetz/lefschetz.hpp"

namespace maschke::lefschetz {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_int(const std::string& s, std::int64_t* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  errno = 0;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (errno != 0 || *end != '\0') return false;
  *out = v;
  return true;
}

int weight_of(const std::string& label) {
  if (label == "f120") return 4;
  if (label == "heckeW" || label == "trYhat") return 3;
  return 2;
}

}  // namespace

std::optional<std::int64_t> CoefficientTable::at(std::uint64_t p) const {
  auto it = coeff.find(p);
  if (it == coeff.end()) return std::nullopt;
  return it->second;
}

std::int64_t CoefficientTable::require(std::uint64_t p) const {
  auto v = at(p);
  if (!v) throw FixtureError("table " + label + " has no entry for " + std::to_string(p));
  return *v;
}

const std::vector<std::string>& table_labels() {
  static const std::vector<std::string> labels = {"f120", "f24B", "f120E", "f15C", "f210",
                                                  "f840", "f1680", "heckeW", "bS", "trYhat"};
  return labels;
}

CoefficientTable load_table(const std::string& dir, const std::string& label) {
  const std::string path = dir + "/" + label + ".csv";
  std::ifstream in(path);
  if (!in) throw FixtureError(path + ": cannot open fixture");
  CoefficientTable t;
  t.label = label;
  t.weight = weight_of(label);
  std::string line;
  int row = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++row;
    const std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    auto fail = [&](const std::string& why) {
      return FixtureError(path + ": row " + std::to_string(row) + ": " + why + " (\"" + s + "\")");
    };
    if (!header) {
      if (s != "p,coeff" && s != "q,coeff") throw fail("expected header p,coeff");
      header = true;
      continue;
    }
    const auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) throw fail("expected two fields");
    std::int64_t key = 0, val = 0;
    if (!parse_int(trim(s.substr(0, comma)), &key) || key <= 0) throw fail("bad prime or field size");
    if (!parse_int(trim(s.substr(comma + 1)), &val)) throw fail("bad coefficient");
    if (!t.coeff.emplace(static_cast<std::uint64_t>(key), val).second) throw fail("duplicate entry");
  }
  if (!header) throw FixtureError(path + ": missing header p,coeff");
  if (t.coeff.empty()) throw FixtureError(path + ": no rows");
  return t;
}

const CoefficientTable& Tables::operator[](const std::string& label) const {
  auto it = by_label.find(label);
  if (it == by_label.end()) throw FixtureError("table " + label + " not loaded");
  return it->second;
}

Tables load_tables(const std::string& dir) {
  Tables t;
  for (const auto& label : table_labels()) t.by_label.emplace(label, load_table(dir, label));
  return t;
}

const std::vector<CurveModel>& curve_models() {
  static const std::vector<CurveModel> models{
      {"f24B", {0, -1, 0, -24, -36}}, {"f15C", {0, -1, 0, 0, 12}}, {"f120E", {0, 1, 0, -20, 0}}};
  return models;
}

std::optional<std::int64_t> curve_ap(const std::string& label, std::uint64_t p) {
  auto it = std::find_if(curve_models().begin(), curve_models().end(),
                         [&](const CurveModel& m) { return m.label == label; });
  if (it == curve_models().end() || p <= 5) return std::nullopt;
  const auto P = static_cast<std::int64_t>(p);
  auto md = [P](std::int64_t v) { return ((v % P) + P) % P; };
  const auto& [a1, a2, a3, a4, a6] = it->a;
  // y^2 + (a1 x + a3) y = r(x) has 1 + legendre(disc) solutions in y
  std::vector<int> chi(p, -1);
  chi[0] = 0;
  for (std::int64_t y = 1; y < P; ++y) chi[static_cast<std::size_t>(y * y % P)] = 1;
  std::int64_t affine = 0;
  for (std::int64_t x = 0; x < P; ++x) {
    std::int64_t b = md(a1 * x + a3), r = md(md(md(x * x) * x) + md(a2 * md(x * x)) + md(a4 * x) + a6);
    affine += 1 + chi[static_cast<std::size_t>(md(b * b + 4 * r))];
  }
  return P - affine;
}

std::int64_t coefficient(const Tables& tables, const std::string& label, std::uint64_t p) {
  if (auto v = tables[label].at(p)) return *v;
  if (auto v = curve_ap(label, p)) return *v;
  return tables[label].require(p);
}

std::string default_fixture_dir() {
  if (const char* env = std::getenv("MASCHKE_FIXTURES")) return env;
#ifdef MASCHKE_FIXTURE_DIR
  return MASCHKE_FIXTURE_DIR;
#else
  return "fixtures";
#endif
}

}  // namespace maschke::lefschetz
