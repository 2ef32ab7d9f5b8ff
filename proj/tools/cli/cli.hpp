#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qbsim::cli {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;  // bad flags, unknown figure, invalid config
inline constexpr int kExitIo = 3;     // output could not be written

// Entry point behind the qbsim executable. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qbsim::cli
