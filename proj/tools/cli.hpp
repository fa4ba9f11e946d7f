#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace covrough::cli {

// Stable across every subcommand.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,
  kSemanticError = 2,
  kLawFailure = 3,
};

// `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace covrough::cli
