#pragma once

#include <string>

#include "evo/component.hpp"

namespace evo {

/// Raised by strict parallel composition when the two operands disagree on
/// the duration they produce for some input.
struct compatibility_error : error {
  compatibility_error(Value input, Duration d1, Duration d2);
  Value input;
  Duration d1, d2;
};

/// Raised by feedback evaluation when the iteration budget runs out before
/// the requested instant is reached.
struct nonconvergent_error : error {
  nonconvergent_error(std::string what, double partial_sum, int iterations);
  double partial_sum;
  int iterations;
};

/// second after first: run `first`, then hand its endpoint to `second`.
/// Durations add when the first stage is finite; an infinite first stage
/// keeps control forever (a pre-dynamical `second` then never shows).
Component kleisli_compose(const Component& second, const Component& first);

/// Identity component: outputs its input with duration zero.
Component copy(Space s = Space::any());

/// Like copy but holds its output for duration d.
Component copy_delay(Duration d, Space s = Space::any());

/// Lift a plain function to a component with trivial (zero-duration)
/// evolutions.
Component lift(std::function<Value(const Value&)> f, Space in, Space out);

// Common wiring, all lifted plain maps.
Component lift_fst(Space a, Space b);
Component lift_snd(Space a, Space b);
Component lift_swap(Space a, Space b);
Component lift_dup(Space a);
Component lift_assoc(Space a, Space b, Space c);  // (A x B) x C -> A x (B x C)
Component lift_inl(Space a, Space b);
Component lift_inr(Space a, Space b);

/// Case analysis on a tagged input: left goes to c1, right to c2.
Component choice(const Component& c1, const Component& c2);

/// Tagged sum: left inputs run c1 and re-tag left, right inputs run c2 and
/// re-tag right.
Component sum(const Component& c1, const Component& c2);

/// Pair two equally-timed runs of the operands on a shared input. The two
/// durations must agree (both infinite, or finite within eps_dur; the
/// result carries c1's); otherwise compatibility_error.
Component strict_pair(const Component& c1, const Component& c2,
                      double eps_dur = 1e-9);

/// Product-input variant of strict_pair.
Component strict_product(const Component& c1, const Component& c2,
                         double eps_dur = 1e-9);

/// Pair two evolutions, stalling the shorter at its final value until the
/// longer one finishes; the duration is the maximum.
Evo sync_evolutions(const Evo& a, const Evo& b);

/// Synchronised parallel on a shared input: never fails, the earlier
/// finisher stalls.
Component sync_pair(const Component& c1, const Component& c2);

/// Product-input synchronised parallel.
Component sync_product(const Component& c1, const Component& c2);

/// n-fold sequential self-composition of an endo component; n = 0 is copy.
Component iterate(const Component& c, int n);

struct FeedbackConfig {
  double eps_dur = 1e-9;  // duration-increment threshold for convergence
  double eps_val = 1e-6;  // sup-metric threshold between successive iterates
  int max_iter = 10000;
  int window = 3;  // consecutive small increments required
  // Feedback normally requires a pre-dynamical component (checked on
  // sampled inputs at construction). Setting this waives the check; the
  // iterate-distance test then gates convergence on its own.
  bool allow_non_predynamical = false;
};

/// Unbounded iteration. The duration is the limit of the partial duration
/// sums when they converge (detected by cfg.window consecutive increments
/// below eps_dur, confirmed by the iterate distance falling below eps_val)
/// and infinite otherwise. Evaluation at t composes the component with
/// itself just far enough to reach t and reads the composite there; past a
/// detected limit it reads the last computed iterate. Throws
/// nonconvergent_error if max_iter runs out with t still unreached.
Component feedback(const Component& c, FeedbackConfig cfg = {});

}  // namespace evo
