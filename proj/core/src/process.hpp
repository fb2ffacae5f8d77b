#pragma once

#include <string>

#include "dung/deadline.hpp"

namespace dung::detail {

struct ProcessResult {
  int exit_code = -1;  ///< -1 when the process did not exit normally
  bool timed_out = false;
  std::string out;
  std::string err;
};

/// Runs `command` through /bin/sh in its own process group with stdin from
/// /dev/null, capturing stdout and stderr. On deadline expiry the whole group
/// is killed and `timed_out` is set.
ProcessResult run_shell(const std::string& command, const Deadline& deadline);

/// Single-quotes `s` for /bin/sh.
std::string shell_quote(const std::string& s);

}  // namespace dung::detail
