#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pellredei::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kPerfectSquare = 3,
  kInconsistent = 4,
};

/// Runs one command line (args[0] is the program name) and returns the exit
/// code. Regular output goes to `out`, diagnostics to `err`.
///
///   solve  --d D [--n N] [--strategy cf|power|redei]
///   cf     --d D [--terms K]
///   redei  --d D --z P[/Q] --n N
///   bench  --d D [--n-max N] [--reps R]
///   verify --d D [--d-max E] [--n N]
///
/// Every subcommand takes --format text|json. JSON output is one object per
/// line with keys command, d, params, result and, for bench, timings_ns;
/// every number is a decimal string.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pellredei::cli
