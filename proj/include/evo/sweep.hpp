#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "evo/component.hpp"

namespace evo {

struct GridSpec {
  int points = 256;        // uniform samples per evolution
  double horizon = 100.0;  // cap for infinite durations
  double dur_tol = 1e-9;   // allowed finite-duration disagreement
};

/// Outcome of comparing two components on one input.
struct InputOutcome {
  enum class Kind { Checked, Skipped };
  Kind kind = Kind::Checked;
  double deviation = 0.0;  // worst pointwise metric, inf on shape mismatch
  double worst_t = 0.0;
  std::string note;  // skip reason
};

/// Worst case over a batch of inputs.
struct SweepResult {
  double worst_deviation = 0.0;
  int worst_input = -1;  // index into the input batch, -1 if none checked
  double worst_t = 0.0;
  size_t checked = 0;
  size_t skipped = 0;
  std::string skip_note;
};

/// Evaluation grid for a pair of durations: uniform points over
/// [0, min(max(d1,d2), horizon)] plus 0 and the finite durations.
std::vector<double> comparison_grid(Duration d1, Duration d2,
                                    const GridSpec& grid);

/// Compare c1 and c2 at one input over the grid. A compatibility_error from
/// either side marks the input as skipped (the comparison assumes both
/// sides are defined); any other failure is an infinite deviation.
InputOutcome compare_on_input(const Component& c1, const Component& c2,
                              const Value& x, const GridSpec& grid);

// The input loop is data-parallel: components are pure and evolutions are
// immutable. sweep_serial is the reference implementation; sweep_parallel
// distributes inputs across OpenMP threads and reduces deterministically
// (ties broken by lowest input index), so both return identical results.
SweepResult sweep_serial(const Component& c1, const Component& c2,
                         std::span<const Value> inputs, const GridSpec& grid);
SweepResult sweep_parallel(const Component& c1, const Component& c2,
                           std::span<const Value> inputs,
                           const GridSpec& grid);

/// Dispatches to sweep_parallel when built with OpenMP, else sweep_serial.
SweepResult sweep(const Component& c1, const Component& c2,
                  std::span<const Value> inputs, const GridSpec& grid);

/// Same comparison for two already-built evolutions.
double evolution_deviation(const Evo& a, const Evo& b, const GridSpec& grid,
                           double* worst_t = nullptr);

/// Optional spot check for continuity: flags adjacent grid samples whose
/// change rate exceeds the given bound. Trajectories are only sampled, so
/// this is a diagnostic, not a proof.
struct Jump {
  double t_before = 0.0;
  double t_after = 0.0;
  double rate = 0.0;  // metric distance divided by the sample gap
};
std::vector<Jump> continuity_jumps(const Evo& ev, const GridSpec& grid,
                                   double rate_bound);

}  // namespace evo
