#pragma once

#include <cmath>
#include <limits>

#include "evo/errors.hpp"

namespace evo {

/// A duration in [0, inf]. Addition and max treat inf as absorbing; NaN and
/// negative values are rejected at construction and can never circulate.
class Duration {
 public:
  Duration() : d_(0.0) {}

  explicit Duration(double d) : d_(d) {
    if (std::isnan(d)) throw error("Duration: NaN is not a duration");
    if (d < 0.0) throw error("Duration: negative value " + std::to_string(d));
  }

  static Duration zero() { return Duration(0.0); }
  static Duration infinite() {
    return Duration(std::numeric_limits<double>::infinity());
  }

  double value() const { return d_; }
  bool is_infinite() const { return std::isinf(d_); }
  bool is_finite() const { return !std::isinf(d_); }

  friend Duration operator+(Duration a, Duration b) {
    return Duration(a.d_ + b.d_);
  }
  friend bool operator==(Duration a, Duration b) { return a.d_ == b.d_; }
  friend bool operator!=(Duration a, Duration b) { return a.d_ != b.d_; }
  friend bool operator<(Duration a, Duration b) { return a.d_ < b.d_; }
  friend bool operator<=(Duration a, Duration b) { return a.d_ <= b.d_; }
  friend bool operator>(Duration a, Duration b) { return a.d_ > b.d_; }
  friend bool operator>=(Duration a, Duration b) { return a.d_ >= b.d_; }

 private:
  double d_;
};

inline Duration dur_add(Duration a, Duration b) { return a + b; }

inline Duration dur_max(Duration a, Duration b) { return a >= b ? a : b; }

/// Clamp a time instant to a duration: t when t <= d, otherwise d.
/// The result is always finite because t is.
inline double time_min(double t, Duration d) {
  return t <= d.value() ? t : d.value();
}

/// Subtraction clamped at zero: a - b when a > b, otherwise 0.
/// Works on plain reals; also covers time-against-duration via the overload.
inline double trunc_sub(double a, double b) { return a > b ? a - b : 0.0; }

inline double trunc_sub(double t, Duration d) { return trunc_sub(t, d.value()); }

}  // namespace evo
