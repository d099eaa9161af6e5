#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dunkl::cli {

enum ExitCode : int { kPass = 0, kCertificationFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Tables go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dunkl::cli
