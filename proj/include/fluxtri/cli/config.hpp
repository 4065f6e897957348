#pragma once

#include <ostream>

namespace fluxtri::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kNumerical = 3 };

/// Parses arguments (flags override values from --config), runs the subcommand and maps
/// failures to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fluxtri::cli
