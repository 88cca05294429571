#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sgp::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kBudget = 3 };

/// Largest accepted product of the smallest and largest generator.
inline constexpr long long kMaxGeneratorProduct = 1'000'000;

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sgp::cli
