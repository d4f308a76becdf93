#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "evo/hybrid.hpp"

namespace evo {

/// A named, parameterisable component the DSL and CLI can instantiate.
struct Primitive {
  std::string name;
  std::string params;   // printable defaults, e.g. "g=9.8 damping=0.5"
  std::string summary;
  size_t min_args = 0;
  size_t max_args = 0;
  std::function<Component(const std::vector<double>&)> make;
};

/// A named plain function usable with lift(...) in the DSL.
struct NamedFunction {
  std::string name;
  std::string summary;
  Space in;
  Space out;
  std::function<Value(const Value&)> fn;
};

/// The built-in example systems, constructible by name.
class Catalog {
 public:
  static const Catalog& instance();

  const Primitive* find(const std::string& name) const;
  const NamedFunction* find_function(const std::string& name) const;
  Component make(const std::string& name,
                 const std::vector<double>& args = {}) const;
  const std::vector<Primitive>& primitives() const { return prims_; }
  const std::vector<NamedFunction>& functions() const { return fns_; }

 private:
  Catalog();
  std::vector<Primitive> prims_;
  std::vector<NamedFunction> fns_;
};

// Direct constructors for the example systems (the catalog wraps these).
Component make_signal_generator(double freq, Duration dur);
Component make_thermostat();
Component make_maintainer();
Component make_supervisor(double cap = 20.5);
Component make_amplifier(double gain = 2.0);
Component make_bouncing_ball(double gravity, double damping = 0.5);
Component make_water_pump();
Component make_water_outflow();
Component make_water_combiner();

Space ball_space();
Space water_pump_space();

}  // namespace evo
