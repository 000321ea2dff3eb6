#pragma once

#include <string>
#include <vector>

namespace rpog {

// Exit codes: 0 success / expectations met, 1 runtime failure,
// 2 parse or structural error, 3 guard or precondition violation,
// 4 example expectation mismatch.
enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kBadInput = 2,
  kGuard = 3,
  kMismatch = 4,
};

struct RunConfig {
  std::string command;             // validate | check | example | census
  std::string kind;                // for check
  std::vector<std::string> paths;  // files or built-in names
  unsigned seed = 0;
  int samples = 1000;
  int max_order = 24;
  std::string format = "text";     // text | json
};

struct RunResult {
  int exit_code = kOk;
  std::string output;
};

RunResult run_command(const RunConfig& cfg);

}  // namespace rpog
