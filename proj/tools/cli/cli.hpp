#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Returns 0 on success, 1
// when a computation or claim fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
