#pragma once

#include <algorithm>
#include <functional>
#include <utility>

#include "evo/time_core.hpp"

namespace evo {

/// A timed trajectory: a total map from time to values together with a
/// duration. Construction clamps the evaluation instant to [0, duration],
/// so every evolution is constant past its own duration no matter how it
/// was produced. Trajectory callables must be pure and re-entrant; an
/// Evolution can then be evaluated from any number of threads.
template <class X>
class Evolution {
 public:
  Evolution(std::function<X(double)> traj, Duration dur)
      : dur_(dur),
        traj_([f = std::move(traj), dur](double t) {
          return f(time_min(std::max(t, 0.0), dur));
        }) {}

  /// Value at time t (t clamped to [0, duration]).
  X at(double t) const { return traj_(t); }

  Duration duration() const { return dur_; }

  /// Value at the end of a finite evolution; the hand-off point for
  /// sequential composition.
  X end_value() const {
    if (dur_.is_infinite())
      throw error("Evolution: end_value of an infinite evolution");
    return traj_(dur_.value());
  }

 private:
  Duration dur_;
  std::function<X(double)> traj_;
};

/// Trivial evolution: constant at x with duration zero.
template <class X>
Evolution<X> unit(X x) {
  return Evolution<X>([x = std::move(x)](double) { return x; },
                      Duration::zero());
}

/// The value an evolution starts from.
template <class X>
X initial(const Evolution<X>& e) {
  return e.at(0.0);
}

/// Apply a function to every value of an evolution; duration unchanged.
template <class F, class X>
auto fmap(F g, const Evolution<X>& e)
    -> Evolution<std::decay_t<decltype(g(e.at(0.0)))>> {
  using Y = std::decay_t<decltype(g(e.at(0.0)))>;
  return Evolution<Y>(
      [g = std::move(g), e](double t) { return g(e.at(t)); }, e.duration());
}

/// Run a after it, b shifted to start where a ends. Durations add; the
/// first operand must be finite (an infinite first stage never hands off).
template <class X>
Evolution<X> concat(const Evolution<X>& a, const Evolution<X>& b) {
  if (a.duration().is_infinite())
    throw error("concat: first evolution has infinite duration");
  const double d = a.duration().value();
  return Evolution<X>(
      [a, b, d](double t) { return t <= d ? a.at(t) : b.at(t - d); },
      a.duration() + b.duration());
}

/// Flatten a nested evolution. For a finite outer duration d the result
/// follows the initial values of the inner evolutions on [0, d] and then
/// continues with the inner evolution reached at d; for an infinite outer
/// duration it follows the initial values forever.
template <class X>
Evolution<X> join(const Evolution<Evolution<X>>& nested) {
  if (nested.duration().is_infinite()) {
    return Evolution<X>([nested](double t) { return initial(nested.at(t)); },
                        Duration::infinite());
  }
  const double d = nested.duration().value();
  Evolution<X> head(
      [nested](double t) { return initial(nested.at(t)); }, nested.duration());
  Evolution<X> tail = nested.at(d);
  return concat(head, tail);
}

}  // namespace evo
