// one line per acceptance criterion, default ranges, cold counts
#include <cstdio>
#include <iostream>
#include <string>
#include <thread>

#include "maschke/cli/report.hpp"

using namespace maschke::cli;

namespace {

// wall-clock budget per criterion, seconds
constexpr double kBudget[13] = {0, 60, 120, 120, 300, 600, 1200, 600, 1800, 600, 600, 60, 300};

// the printed #X formula does not hold at p = 3 mod 4 (see README); those
// findings are expected failures, anything else failing is a regression
bool documented_defect(int criterion, const Finding& f) {
  if (criterion != 8) return false;
  unsigned long p = 0;
  if (std::sscanf(f.check.c_str(), "#X formula, p = %lu", &p) != 1) return false;
  return f.check.find("(18, 14, 9)") == std::string::npos && p % 4 == 3;
}

}  // namespace

int main() {
  ReportOptions opt;
  opt.workers = std::max(1u, std::thread::hardware_concurrency());
  int unexpected = 0;
  for (int n = 1; n <= 12; ++n) {
    opt.criteria = {n};
    Report r = build_report(opt);
    const CriterionResult& c = r.criteria.front();
    bool in_time = c.seconds <= kBudget[n];
    std::size_t documented = 0, other = 0;
    for (const auto& f : c.findings) {
      if (f.pass || f.informational) continue;
      (documented_defect(n, f) ? documented : other)++;
    }
    bool pass = c.pass && in_time;
    std::printf("criterion %2d %-30s %s  checks=%zu failing=%zu  %.1fs (budget %.0fs)", n, c.title.c_str(),
                pass ? "PASS" : "FAIL", c.decisive(), c.failures(), c.seconds, kBudget[n]);
    if (!pass && other == 0 && in_time && documented > 0)
      std::printf("  [documented defect: %zu printed-formula failures at p = 3 mod 4]", documented);
    std::printf("\n");
    for (const auto& f : c.findings)
      if (!f.pass && !f.informational && !documented_defect(n, f))
        std::printf("    %s: %s\n", f.check.c_str(), f.detail.c_str());
    if (other > 0 || !in_time || c.decisive() == 0) ++unexpected;
  }
  std::fflush(stdout);
  return unexpected == 0 ? 0 : 1;
}
