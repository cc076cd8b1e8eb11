#pragma once

#include <string>
#include <vector>

namespace mcnum {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct CommandResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one `mcnum` subcommand; `args` excludes the program name. Records go
/// to `out` one per line, diagnostics and timing to `err`.
CommandResult execute_command(const std::vector<std::string>& args);

}  // namespace mcnum
