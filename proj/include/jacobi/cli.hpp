#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jacobi::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kDomainError = 2,
  kFlagged = 3,
  kInternal = 4,
};

/// Runs one command.  args excludes the program name.  Results go to out (or
/// to the --output file); errors go to err as {"error": code, "message": ..}.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jacobi::cli
