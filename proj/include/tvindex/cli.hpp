#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace tvi::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kValidationFailure = 2,
  kParseFailure = 3,
};

/// Runs one command. args[0] is the program name. JSON goes to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tvi::cli
