#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace berge::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalid = 1,
  kPrecondition = 2,
  kParse = 3,
  kAssumption = 4,
};

// Runs the command line `args` (without the program name). Standard input is
// read when an input path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace berge::cli
