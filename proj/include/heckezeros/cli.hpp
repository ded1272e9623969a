#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hz::cli {

enum ExitCode : int { Ok = 0, UserError = 2, InternalError = 3, ContractFailure = 4 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hz::cli
