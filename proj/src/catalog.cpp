#include "evo/catalog.hpp"

#include <cmath>

namespace evo {

namespace {

Space temp_space() { return Space::real(-10.0, 25.0, "temp"); }
Space signal_space() { return Space::real(-5.0, 5.0, "y"); }

double arg_or(const std::vector<double>& args, size_t i, double def) {
  return i < args.size() ? args[i] : def;
}

}  // namespace

Space ball_space() {
  return Space::prod(Space::real_with_default(0.0, -8.0, 8.0, "vel"),
                     Space::real(0.0, 8.0, "pos"));
}

Space water_pump_space() {
  return Space::prod(Space::tags({"up", "down"}, "state"),
                     Space::prod(Space::real(0.0, 20.0, "tank1"),
                                 Space::real(0.0, 20.0, "tank2")));
}

Component make_signal_generator(double freq, Duration dur) {
  return Component(
      [freq, dur](const Value& v) {
        const double x = v.as_real();
        return Evo([x, freq](double t) { return Value::real(x + std::sin(freq * t)); },
                   dur);
      },
      signal_space(), signal_space());
}

Component make_thermostat() {
  return Component(
      [](const Value& v) {
        const double x = v.as_real();
        return Evo([x](double t) { return Value::real(x + t); },
                   Duration(trunc_sub(20.0, x)));
      },
      temp_space(), temp_space());
}

Component make_maintainer() {
  return Component(
      [](const Value& v) {
        const double x = v.as_real();
        return Evo([x](double t) { return Value::real(x + std::sin(t)); },
                   Duration::infinite());
      },
      temp_space(), temp_space());
}

Component make_supervisor(double cap) {
  return Component(
      [cap](const Value& v) {
        const double y = std::min(v.as_real(), cap);
        return unit(Value::real(y));
      },
      temp_space(), temp_space());
}

Component make_amplifier(double gain) {
  return Component(
      [gain](const Value& v) { return unit(Value::real(gain * v.as_real())); },
      signal_space(), signal_space());
}

Component make_bouncing_ball(double gravity, double damping) {
  HybridComponent ball;
  ball.state_space = Space::real_with_default(0.0, -8.0, 8.0, "vel");
  ball.input_space = Space::real(0.0, 8.0, "pos");
  ball.output_space = ball.input_space;
  ball.initial_state = Value::real(0.0);
  ball.step = [gravity, damping](const Value& state, const Value& input) {
    const double v = state.as_real();
    const double p = input.as_real();
    const double flight = time_to_ground(gravity, v, p);
    const double v_next = -damping * ballistic_velocity(gravity, v, flight);
    // rounding at the arc endpoint can dip a hair below ground
    Evo arc([gravity, v, p](double t) {
      return Value::real(std::max(0.0, ballistic_position(gravity, v, p, t)));
    },
            Duration(flight));
    return std::make_pair(Value::real(v_next), std::move(arc));
  };
  return lift_hybrid(ball);
}

Component make_water_pump() {
  HybridComponent pump;
  pump.state_space = Space::tags({"up", "down"}, "state");
  pump.input_space = Space::prod(Space::real(0.0, 20.0, "tank1"),
                                 Space::real(0.0, 20.0, "tank2"));
  pump.output_space = pump.input_space;
  pump.initial_state = Value::tag("up");
  pump.step = [](const Value& state, const Value& levels) {
    const bool filling_first = state.tag_label() == "up";
    const double l1 = levels.first().as_real();
    const double l2 = levels.second().as_real();
    Value next = Value::tag(filling_first ? "down" : "up");
    Evo fill(
        [filling_first, l1, l2](double t) {
          return filling_first ? Value::pair(Value::real(l1 + t), Value::real(l2))
                               : Value::pair(Value::real(l1), Value::real(l2 + t));
        },
        Duration(10.0));
    return std::make_pair(std::move(next), std::move(fill));
  };
  return lift_hybrid(pump);
}

Component make_water_outflow() {
  HybridComponent drain;
  drain.state_space = Space::unit("z");
  drain.input_space = Space::unit("zin");
  drain.output_space = Space::prod(Space::real(0.0, 20.0, "out1"),
                                   Space::real(0.0, 20.0, "out2"));
  drain.initial_state = Value::star();
  drain.step = [](const Value&, const Value&) {
    Evo clock(
        [](double t) {
          return Value::pair(Value::real(t / 2.0), Value::real(t / 2.0));
        },
        Duration(10.0));
    return std::make_pair(Value::star(), std::move(clock));
  };
  return lift_hybrid(drain);
}

Component make_water_combiner() {
  Space pump = water_pump_space();
  Space drain_in = Space::prod(Space::unit("z"), Space::unit("zin"));
  Space drain_out = Space::prod(Space::unit("z"),
                                Space::prod(Space::real(0.0, 20.0, "out1"),
                                            Space::real(0.0, 20.0, "out2")));
  return lift(
      [](const Value& v) {
        const Value& pump_side = v.first();
        const Value& drain_side = v.second();
        const Value& levels = pump_side.second();
        const Value& rates = drain_side.second();
        const double l1 =
            trunc_sub(levels.first().as_real(), rates.first().as_real());
        const double l2 =
            trunc_sub(levels.second().as_real(), rates.second().as_real());
        return Value::pair(
            Value::pair(pump_side.first(),
                        Value::pair(Value::real(l1), Value::real(l2))),
            Value::pair(Value::star(), Value::star()));
      },
      Space::prod(pump, drain_out),
      Space::prod(pump, drain_in));
}

const Catalog& Catalog::instance() {
  static const Catalog catalog;
  return catalog;
}

Catalog::Catalog() {
  prims_ = {
      {"sig", "freq=1 dur=20", "signal generator x + sin(freq*t)", 0, 2,
       [](const std::vector<double>& a) {
         return make_signal_generator(arg_or(a, 0, 1.0),
                                      Duration(arg_or(a, 1, 20.0)));
       }},
      {"fm1", "dur=3pi", "signal generator x + sin(t), one modulation slot", 0,
       0,
       [](const std::vector<double>&) {
         return make_signal_generator(1.0, Duration(3.0 * M_PI));
       }},
      {"fm2", "dur=3pi", "signal generator x + sin(3t), one modulation slot",
       0, 0,
       [](const std::vector<double>&) {
         return make_signal_generator(3.0, Duration(3.0 * M_PI));
       }},
      {"thermostat", "target=20", "raises the temperature linearly to 20", 0,
       0, [](const std::vector<double>&) { return make_thermostat(); }},
      {"maintainer", "", "holds a temperature with a small ripple, forever", 0,
       0, [](const std::vector<double>&) { return make_maintainer(); }},
      {"supervisor", "cap=20.5", "instantaneously caps its input", 0, 1,
       [](const std::vector<double>& a) {
         return make_supervisor(arg_or(a, 0, 20.5));
       }},
      {"amplifier", "gain=2", "instantaneously scales its input", 0, 1,
       [](const std::vector<double>& a) {
         return make_amplifier(arg_or(a, 0, 2.0));
       }},
      {"ball_earth", "g=9.8 damping=0.5",
       "bouncing ball, one arc per application; state is the take-off "
       "velocity",
       0, 0,
       [](const std::vector<double>&) { return make_bouncing_ball(9.8); }},
      {"ball_moon", "g=1.622 damping=0.5",
       "bouncing ball under Moon gravity", 0, 0,
       [](const std::vector<double>&) { return make_bouncing_ball(1.622); }},
      {"water", "cycle=10",
       "alternating pump; fills one tank for ten seconds, then the other", 0,
       0, [](const std::vector<double>&) { return make_water_pump(); }},
      {"water_z", "cycle=10", "outflow clock running at half speed", 0, 0,
       [](const std::vector<double>&) { return make_water_outflow(); }},
      {"water_h", "",
       "subtracts the outflow from the tank levels, clamped at zero", 0, 0,
       [](const std::vector<double>&) { return make_water_combiner(); }},
      {"copy", "", "outputs its input with duration zero", 0, 0,
       [](const std::vector<double>&) { return copy(); }},
      {"delay", "d", "outputs its input, held for duration d", 1, 1,
       [](const std::vector<double>& a) { return copy_delay(Duration(a[0])); }},
  };

  Space r = Space::real();
  Space rr = Space::prod(r, r);
  fns_ = {
      {"add", "sum of a pair", rr, r,
       [](const Value& v) {
         return Value::real(v.first().as_real() + v.second().as_real());
       }},
      {"sub", "clamped difference of a pair", rr, r,
       [](const Value& v) {
         return Value::real(
             trunc_sub(v.first().as_real(), v.second().as_real()));
       }},
      {"double", "scale by 2", r, r,
       [](const Value& v) { return Value::real(2.0 * v.as_real()); }},
      {"half", "scale by 1/2", r, r,
       [](const Value& v) { return Value::real(0.5 * v.as_real()); }},
      {"negate", "negation", r, r,
       [](const Value& v) { return Value::real(-v.as_real()); }},
      {"dup", "duplicate into a pair", r, rr,
       [](const Value& v) { return Value::pair(v, v); }},
      {"swap", "swap a pair", rr, rr,
       [](const Value& v) { return Value::pair(v.second(), v.first()); }},
      {"fst", "first of a pair", rr, r,
       [](const Value& v) { return v.first(); }},
      {"snd", "second of a pair", rr, r,
       [](const Value& v) { return v.second(); }},
  };
}

const Primitive* Catalog::find(const std::string& name) const {
  for (const auto& p : prims_)
    if (p.name == name) return &p;
  return nullptr;
}

const NamedFunction* Catalog::find_function(const std::string& name) const {
  for (const auto& f : fns_)
    if (f.name == name) return &f;
  return nullptr;
}

Component Catalog::make(const std::string& name,
                        const std::vector<double>& args) const {
  const Primitive* p = find(name);
  if (!p) throw error("catalog: unknown primitive '" + name + "'");
  if (args.size() < p->min_args || args.size() > p->max_args) {
    throw error("catalog: '" + name + "' takes " +
                std::to_string(p->min_args) + ".." +
                std::to_string(p->max_args) + " arguments, got " +
                std::to_string(args.size()));
  }
  return p->make(args);
}

}  // namespace evo
