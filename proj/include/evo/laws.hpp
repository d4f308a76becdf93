#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "evo/sweep.hpp"

namespace evo {

/// Sampling parameters for approximate component equality.
struct EqConfig {
  int input_samples = 64;
  int time_grid = 256;
  double horizon = 100.0;
  double tol = 1e-9;
  std::uint64_t seed = 42;

  void validate() const;
  GridSpec grid() const { return GridSpec{time_grid, horizon, tol}; }
};

struct LawReport {
  enum class Status { Pass, Fail, Skipped };

  std::string law_id;
  Status status = Status::Pass;
  std::string reason;  // skip reason or failure note
  double worst_deviation = 0.0;
  bool has_witness = false;
  Value witness_input;
  double witness_time = 0.0;
  size_t samples_checked = 0;
  size_t samples_skipped = 0;

  bool passed() const { return status == Status::Pass; }
  std::string line() const;
  std::string json_str() const;
};

std::string law_reports_json(std::span<const LawReport> reports);

/// Approximate equality of two components: durations must agree (infinite
/// exactly, finite within tol) and trajectories must agree within tol on
/// the sampling grid, for every sampled input.
LawReport component_approx_eq(const Component& c1, const Component& c2,
                              const EqConfig& cfg,
                              const std::string& law_id = "component_eq");

/// All law identifiers, in report order.
std::vector<std::string> law_suite_ids();

/// Run every law whose id starts with `only` (all when empty). One report
/// per law; deterministic for a given seed, independent of filtering and
/// of evaluation threading. The strength.noncommutative case passes when
/// the two interleaving orders visibly differ.
std::vector<LawReport> run_law_suite(const EqConfig& cfg,
                                     const std::string& only = "");

}  // namespace evo
