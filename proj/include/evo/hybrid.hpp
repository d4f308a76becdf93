#pragma once

#include <utility>

#include "evo/combinators.hpp"

namespace evo {

/// Pair a constant value alongside an evolution (right tensorial strength):
/// the first coordinate stays x, the second follows ev, duration unchanged.
Evo strength_right(const Value& x, const Evo& ev);

/// Mirror image: the first coordinate follows ev, the second stays x.
Evo strength_left(const Evo& ev, const Value& x);

/// A stateful system with discrete internal state and continuous output:
/// one step maps (state, input) to (next state, evolution).
struct HybridComponent {
  std::function<std::pair<Value, Evo>(const Value& state, const Value& input)>
      step;
  Space state_space;
  Space input_space;
  Space output_space;
  Value initial_state;
};

/// Turn a hybrid step into a component on the product space (S x I): the
/// produced evolution pairs the constant next state with the output
/// evolution, so iterating the lifted component threads the state through
/// each sequential hand-off.
Component lift_hybrid(const HybridComponent& h);

/// Drop the state coordinate of a lifted hybrid component's output; handy
/// for plotting just the observable part.
Component strip_state(const Component& lifted);

/// The two orders of interleaving a shared-input pair of components: first
/// the left operand runs while the right stalls at its start, then the
/// roles swap -- and vice versa. The two results generally differ.
std::pair<Evo, Evo> sequencing_counterexample(const Component& c1,
                                              const Component& c2,
                                              const Value& x);

// Closed-form ballistics used by the bouncing-ball systems.
double ballistic_position(double accel, double v, double p, double t);
double ballistic_velocity(double accel, double v, double t);

/// Time for a body at height p with upward velocity v to reach the ground
/// under constant downward acceleration. Requires accel > 0 and p >= 0.
double time_to_ground(double accel, double v, double p);

}  // namespace evo
