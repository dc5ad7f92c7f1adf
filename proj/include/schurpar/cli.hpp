#pragma once

#include <iosfwd>

namespace schurpar {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

// Parses argv (argv[0] is the program name) and runs one subcommand. Errors
// go to `err` as a single line starting with "error:".
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurpar
