#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cohq::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_violation = 1,  // a tested theorem failed on some state
  exit_io = 2,
  exit_usage = 64,
  exit_invalid_state = 65,
};

/// Runs one subcommand. `args` excludes the program name. Data goes to
/// `out` (or files named by flags); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cohq::cli
