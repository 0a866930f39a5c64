#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace discmat::cli {

inline constexpr std::uint64_t kDefaultSeed = 42;

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  int n = 4;
  std::string formula;
  std::string mode = "symbolic";
  int samples = 50;
  std::uint64_t seed = kDefaultSeed;
  std::string format = "plain";
  std::optional<std::string> coeffs;
  std::optional<std::string> profile;
  int derivative_order = 1;
  int trials = 20;
  std::string out;
};

struct CommandResult {
  int code = kSuccess;
  std::string text;
};

CommandResult cmd_build(const RunConfig& cfg);
CommandResult cmd_verify(const RunConfig& cfg);
CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_probe(const RunConfig& cfg);

/// Parses `args` (without the program name), runs the command and writes
/// its output to `out` or to --out. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace discmat::cli
