#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dung::cli {

/// Exit status contract of the command-line tool.
enum Exit : int {
  kOk = 0,  ///< success, or YES for decision tasks
  kNo = 1,
  kUsage = 2,
  kInput = 3,
  kResource = 4,  ///< argument cap or timeout
};

/// Runs the tool on `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dung::cli
