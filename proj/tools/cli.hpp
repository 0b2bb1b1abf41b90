#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyknot::cli {

/// Exit statuses beyond the verdict codes 0 / 1 / 2.
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInconclusive = 2,
  kCertificationFailed = 3,
  kUsage = 64,
  kDataError = 65,
  kNoInput = 66,
};

/// Runs one command line (args[0] is the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polyknot::cli
