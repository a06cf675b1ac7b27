#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace modinv::cli {

enum ExitCode : int { kSuccess = 0, kUndefined = 1, kUsage = 2 };

/// Runs one invocation of the modinv tool. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modinv::cli
