#pragma once

#include "runner/config.hpp"

#include "burgers/grid.hpp"
#include "burgers/problems.hpp"
#include "burgers/stepper.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace burgers::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailed = 1, // diverged solve, or unsatisfied stability check
  kExitConfig = 2,
  kExitIo = 3,
};

/// The concrete grid a config describes for `solve`. Throws ConfigError if
/// the config lists more than one spacing.
GridSpec resolve_grid(const RunConfig& cfg);

struct Snapshot {
  int step = 0;
  State state;
};

struct SolveResult {
  GridSpec grid;
  int substeps = 1;
  StepOutcome outcome;
  int steps_completed = 0;
  std::vector<Snapshot> snapshots; // requested times snapped to the nearest t^n
  State final_state;
  std::optional<double> max_error_u; // at the last completed level, if exact is known
  std::optional<double> max_error_v;
};

/// Step indices for the requested snapshot times (default: the final time),
/// each snapped to the nearest t^n, sorted and deduplicated.
std::vector<int> snapshot_steps(const RunConfig& cfg, const GridSpec& g);

/// Runs the time loop without touching the filesystem.
SolveResult run_solve(const RunConfig& cfg, const ProblemSpec& problem);

/// Path for the snapshot at `step`: `out` itself when only one snapshot is
/// written, otherwise `<stem>_n<step><ext>`.
std::string snapshot_path(const std::string& out, int step, bool single);

int cmd_solve(const RunConfig& cfg, const ProblemSpec& problem, std::ostream& out,
              std::ostream& err);
int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);

int cmd_check_stability(const RunConfig& cfg, std::ostream& out);

int cmd_converge(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command.
int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace burgers::cli
