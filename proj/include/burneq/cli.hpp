#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace burneq::cli
{

enum ExitCode : int
{
  kOk = 0,
  kInputError = 1,
  kInfeasible = 2,
  kInternal = 3,
};

/// Runs one `burneq` invocation; args excludes the program name.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

} // namespace burneq::cli
