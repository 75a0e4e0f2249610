#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hybridcomb/error.hpp"

namespace hybridcomb::cli {

// Stable process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitNumerical = 4;

int exit_code_for(ErrorKind kind) noexcept;

/// Runs the command line `args` (without the program name). Data goes to `out` unless
/// --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hybridcomb::cli
