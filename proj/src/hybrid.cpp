#include "evo/hybrid.hpp"

#include <cmath>

namespace evo {

Evo strength_right(const Value& x, const Evo& ev) {
  return Evo([x, ev](double t) { return Value::pair(x, ev.at(t)); },
             ev.duration());
}

Evo strength_left(const Evo& ev, const Value& x) {
  return Evo([x, ev](double t) { return Value::pair(ev.at(t), x); },
             ev.duration());
}

Component lift_hybrid(const HybridComponent& h) {
  Space in = Space::prod(h.state_space, h.input_space);
  Space out = Space::prod(h.state_space, h.output_space);
  auto step = h.step;
  return Component(
      [step](const Value& v) {
        auto [next_state, ev] = step(v.first(), v.second());
        return strength_right(next_state, ev);
      },
      in, out);
}

Component strip_state(const Component& lifted) {
  const Space& out = lifted.output_space();
  if (out.kind() != Space::Kind::Prod)
    throw space_error("strip_state: output is not a state/output pair: " +
                      out.str());
  return kleisli_compose(lift_snd(out.first(), out.second()), lifted);
}

std::pair<Evo, Evo> sequencing_counterexample(const Component& c1,
                                              const Component& c2,
                                              const Value& x) {
  Evo ev1 = c1(x);
  Evo ev2 = c2(x);
  Evolution<Evo> left_first(
      [ev1, ev2](double t) { return strength_right(ev1.at(t), ev2); },
      ev1.duration());
  Evolution<Evo> right_first(
      [ev1, ev2](double t) { return strength_left(ev1, ev2.at(t)); },
      ev2.duration());
  return {join(left_first), join(right_first)};
}

double ballistic_position(double accel, double v, double p, double t) {
  return p + v * t - 0.5 * accel * t * t;
}

double ballistic_velocity(double accel, double v, double t) {
  return v - accel * t;
}

double time_to_ground(double accel, double v, double p) {
  if (accel <= 0.0) throw error("time_to_ground: acceleration must be > 0");
  if (p < 0.0) throw error("time_to_ground: height must be >= 0");
  const double disc = 2.0 * accel * p + v * v;
  if (disc < 0.0) throw error("time_to_ground: negative discriminant");
  return (std::sqrt(disc) + v) / accel;
}

}  // namespace evo
