#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plk::cli {

// Exit codes of the plk tool.
enum ExitCode : int {
  kSimple = 0,
  kNotSimple = 1,
  kInputError = 2,
  kInvariantViolation = 3,
};

// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace plk::cli
