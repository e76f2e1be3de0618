#pragma once

// Command dispatch: RunConfig -> files. Exit codes: 0 success, 1 I/O failure,
// 2 config error, 3 unstable dynamics, 4 numerical failure.

#include <iosfwd>

#include "spinent/config.hpp"
#include "spinent/output.hpp"

namespace spinent {

enum ExitCode : int { exit_ok = 0, exit_io = 1, exit_config = 2, exit_unstable = 3, exit_numerical = 4 };

struct CommandOutput {
  OutputBatch files;
  int status = exit_ok;   // exit_unstable when a point/pair/wigner state is unstable
};

/// Computes every output file of a command without touching the disk.
CommandOutput produce(const RunConfig& cfg);

/// produce() + commit into cfg.out_dir. Errors are reported on `err` and mapped to
/// an exit code; nothing is written on failure.
int run(const RunConfig& cfg, std::ostream& err);

/// Exit code for the exception currently being handled.
int exit_code_for_current_exception(std::ostream& err);

}  // namespace spinent
