#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maschke::cli {

enum ExitStatus : int { kAllPass = 0, kVerificationFailure = 1, kUsageError = 2 };

// parses argv and dispatches one subcommand; payloads go to out, diagnostics to err
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace maschke::cli
