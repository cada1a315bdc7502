#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace maschke::cli {

struct PrimeRange {
  std::uint64_t lo = 7, hi = 100;
  std::vector<std::uint64_t> primes() const;  // primes p > 5 in [lo, hi]
};

// ranges per family; a single --primes on the command line sets all three
struct ReportOptions {
  PrimeRange surfaces{7, 200};  // W, Sbar, U
  PrimeRange threefold{7, 100};  // S, X, Y
  PrimeRange curves{7, 1000};
  unsigned workers = 1;
  std::string fixtures;    // empty: the default fixture directory
  std::string checkpoint;  // empty: counts are not persisted
  std::vector<int> criteria;  // empty: all of 1..12
};

struct Finding {
  std::string check;
  bool pass = false;
  std::string detail;
  // informational findings are reported but do not decide the criterion
  bool informational = false;
};

struct CriterionResult {
  int number = 0;
  std::string title;
  bool pass = false;
  std::vector<Finding> findings;
  double seconds = 0;
  std::size_t failures() const;
  std::size_t decisive() const;  // non-informational findings
};

struct Report {
  ReportOptions options;
  std::vector<CriterionResult> criteria;
  bool pass() const;
};

const std::string& tool_version();
const std::string& criterion_title(int number);

// evaluates the selected criteria in order; throws lefschetz::FixtureError
// for unusable fixtures and counting::CheckpointError for a bad checkpoint
Report build_report(const ReportOptions& opt);

// deterministic for a fixed configuration when timing is left out
std::string report_json(const Report& r, bool with_timing);

}  // namespace maschke::cli
