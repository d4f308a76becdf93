#include "evo/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "evo/combinators.hpp"

namespace evo {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> comparison_grid(Duration d1, Duration d2,
                                    const GridSpec& grid) {
  const double span =
      std::min(dur_max(d1, d2).value(), grid.horizon);
  std::vector<double> ts;
  ts.reserve(static_cast<size_t>(grid.points) + 3);
  ts.push_back(0.0);
  const int n = std::max(grid.points, 2);
  for (int i = 1; i < n; ++i)
    ts.push_back(span * static_cast<double>(i) / (n - 1));
  ts.push_back(span);
  if (d1.is_finite() && d1.value() <= grid.horizon) ts.push_back(d1.value());
  if (d2.is_finite() && d2.value() <= grid.horizon) ts.push_back(d2.value());
  return ts;
}

InputOutcome compare_on_input(const Component& c1, const Component& c2,
                              const Value& x, const GridSpec& grid) {
  InputOutcome out;
  std::optional<Evo> a, b;
  std::string note;
  bool skip = false;
  try {
    a = c1(x);
  } catch (const compatibility_error& e) {
    skip = true;
    note = e.what();
  } catch (const std::exception& e) {
    note = e.what();
  }
  try {
    b = c2(x);
  } catch (const compatibility_error& e) {
    skip = true;
    note = e.what();
  } catch (const std::exception& e) {
    note = e.what();
  }
  if (skip) {
    // One side undefined: the comparison assumes both sides exist.
    out.kind = InputOutcome::Kind::Skipped;
    out.note = note;
    return out;
  }
  if (!a || !b) {
    out.deviation = kInf;
    out.note = note;
    return out;
  }

  const Duration d1 = a->duration(), d2 = b->duration();
  if (d1.is_infinite() != d2.is_infinite()) {
    out.deviation = kInf;
    out.worst_t = std::min(d1, d2).value();
    return out;
  }
  if (d1.is_finite()) {
    const double dd = std::fabs(d1.value() - d2.value());
    if (dd > grid.dur_tol) {
      out.deviation = dd;
      out.worst_t = d1.value();
      return out;
    }
  }
  try {
    for (double t : comparison_grid(d1, d2, grid)) {
      const double dev = metric(a->at(t), b->at(t));
      if (dev > out.deviation) {
        out.deviation = dev;
        out.worst_t = t;
      }
    }
  } catch (const std::exception& e) {
    out.deviation = kInf;
    out.note = e.what();
  }
  return out;
}

namespace {

SweepResult reduce_outcomes(const std::vector<InputOutcome>& outcomes) {
  SweepResult result;
  for (size_t i = 0; i < outcomes.size(); ++i) {
    const InputOutcome& oc = outcomes[i];
    if (oc.kind == InputOutcome::Kind::Skipped) {
      ++result.skipped;
      if (result.skip_note.empty()) result.skip_note = oc.note;
      continue;
    }
    ++result.checked;
    if (result.worst_input < 0 || oc.deviation > result.worst_deviation) {
      result.worst_deviation = oc.deviation;
      result.worst_input = static_cast<int>(i);
      result.worst_t = oc.worst_t;
    }
  }
  return result;
}

}  // namespace

SweepResult sweep_serial(const Component& c1, const Component& c2,
                         std::span<const Value> inputs, const GridSpec& grid) {
  std::vector<InputOutcome> outcomes(inputs.size());
  for (size_t i = 0; i < inputs.size(); ++i)
    outcomes[i] = compare_on_input(c1, c2, inputs[i], grid);
  return reduce_outcomes(outcomes);
}

SweepResult sweep_parallel(const Component& c1, const Component& c2,
                           std::span<const Value> inputs,
                           const GridSpec& grid) {
  std::vector<InputOutcome> outcomes(inputs.size());
  const auto n = static_cast<std::ptrdiff_t>(inputs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    outcomes[i] = compare_on_input(c1, c2, inputs[i], grid);
  return reduce_outcomes(outcomes);
}

SweepResult sweep(const Component& c1, const Component& c2,
                  std::span<const Value> inputs, const GridSpec& grid) {
#ifdef _OPENMP
  return sweep_parallel(c1, c2, inputs, grid);
#else
  return sweep_serial(c1, c2, inputs, grid);
#endif
}

std::vector<Jump> continuity_jumps(const Evo& ev, const GridSpec& grid,
                                   double rate_bound) {
  std::vector<Jump> jumps;
  const double span =
      std::min(ev.duration().value(), grid.horizon);
  const int n = std::max(grid.points, 2);
  double prev_t = 0.0;
  Value prev = ev.at(0.0);
  for (int i = 1; i < n; ++i) {
    const double t = span * static_cast<double>(i) / (n - 1);
    Value cur = ev.at(t);
    const double gap = t - prev_t;
    if (gap > 0.0) {
      const double rate = metric(prev, cur) / gap;
      if (rate > rate_bound) jumps.push_back({prev_t, t, rate});
    }
    prev_t = t;
    prev = std::move(cur);
  }
  return jumps;
}

double evolution_deviation(const Evo& a, const Evo& b, const GridSpec& grid,
                           double* worst_t) {
  const Duration d1 = a.duration(), d2 = b.duration();
  if (d1.is_infinite() != d2.is_infinite()) {
    if (worst_t) *worst_t = std::min(d1, d2).value();
    return kInf;
  }
  double worst = 0.0, at = 0.0;
  if (d1.is_finite()) {
    const double dd = std::fabs(d1.value() - d2.value());
    if (dd > grid.dur_tol) {
      worst = dd;
      at = d1.value();
    }
  }
  for (double t : comparison_grid(d1, d2, grid)) {
    const double dev = metric(a.at(t), b.at(t));
    if (dev > worst) {
      worst = dev;
      at = t;
    }
  }
  if (worst_t) *worst_t = at;
  return worst;
}

}  // namespace evo
