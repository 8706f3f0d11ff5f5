#pragma once

// Command dispatcher behind the fpalg tool.
//
// Exit status: 0 success, 1 parse or usage error, 2 semantic error,
// 3 verdict undecided at the requested degree bound.

#include <iosfwd>
#include <string>
#include <vector>

namespace fpalg {

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 1,
  kExitSemantic = 2,
  kExitUndecided = 3,
};

/// Runs one command. `args` excludes the program name. Presentation input is
/// the positional argument: a file path, "-" for `in`, or inline text.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace fpalg
