#pragma once

#include <functional>
#include <span>
#include <vector>

#include "evo/evolution.hpp"
#include "evo/space.hpp"
#include "evo/value.hpp"

namespace evo {

/// Evolutions over the runtime value universe; what components produce.
using Evo = Evolution<Value>;

/// A continuous system: a total, pure map from input values to evolutions,
/// together with descriptors of its input and output spaces. Components are
/// immutable composition trees over pure functions and may be applied, and
/// their evolutions evaluated, concurrently.
class Component {
 public:
  Component() = default;
  Component(std::function<Evo(const Value&)> apply, Space in, Space out)
      : apply_(std::move(apply)), in_(std::move(in)), out_(std::move(out)) {}

  Evo operator()(const Value& x) const {
    if (!apply_) throw error("Component: empty component applied");
    return apply_(x);
  }

  const Space& input_space() const { return in_; }
  const Space& output_space() const { return out_; }
  explicit operator bool() const { return static_cast<bool>(apply_); }

 private:
  std::function<Evo(const Value&)> apply_;
  Space in_ = Space::any();
  Space out_ = Space::any();
};

struct PredynamicalReport {
  struct Violation {
    Value input;
    double deviation;
  };
  bool pre_dynamical = true;
  std::vector<Violation> violations;
};

/// A component is pre-dynamical when every evolution starts at its input.
/// Checked pointwise on the given inputs within tol.
PredynamicalReport is_predynamical(const Component& c,
                                   std::span<const Value> inputs, double tol);

}  // namespace evo
