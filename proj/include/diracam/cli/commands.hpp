#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "diracam/cli/config.hpp"
#include "diracam/exec.hpp"

namespace diracam::cli {

/// Fault injection for exercising the verify exit status.
struct VerifyHooks {
  bool corrupt_gamma = false;       // flips one entry of γ¹
  bool break_conservation = false;  // offsets ΔL₃ by 0.1 %
};

struct CheckResult {
  std::string name;
  double measured;
  double threshold;
  bool passed;
};

/// Runs the invariant suites for one configuration. Returns every check in
/// order; informational lines are written to `out` as they are produced.
std::vector<CheckResult> run_verify_checks(const RunConfig& config, std::ostream& out, const VerifyHooks& hooks = {});

/// Exit status 0 when every check passes, 1 otherwise, 2 on config errors.
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err, const VerifyHooks& hooks = {});

/// Ultrarelativistic ⟨ΔS₃⟩ under both charge conventions, compared with the
/// reference coefficient. CSV goes to config.output_path, or `out` if unset.
int cmd_estimate(const RunConfig& config, std::ostream& out, std::ostream& err);

struct SweepSpec {
  std::string axis;  // field_tesla | apparatus_m | relative_phase | amplitude_split | grid_n
  double min = 0.0;
  double max = 0.0;
  int steps = 1;
};

const std::vector<std::string>& sweep_axes();

/// Swept values: `steps` points from min to max inclusive.
std::vector<double> sweep_points(const SweepSpec& spec);

/// The CSV body for a sweep. Throws ConfigError on a bad axis or point.
std::string sweep_csv(const RunConfig& config, const SweepSpec& spec, Exec exec = Exec::parallel);

int cmd_sweep(const RunConfig& config, const SweepSpec& spec, std::ostream& out, std::ostream& err);

/// %.16e, with negative zero printed as zero.
std::string format_value(double v);

}  // namespace diracam::cli
