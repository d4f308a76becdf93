#include "evo/combinators.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace evo {

namespace {

std::string dur_str(Duration d) {
  return d.is_infinite() ? "inf" : std::to_string(d.value());
}

void require_match(const Space& a, const Space& b, const char* where) {
  if (!a.matches(b)) {
    throw space_error(std::string(where) + ": space mismatch, " + a.str() +
                      " vs " + b.str());
  }
}

}  // namespace

compatibility_error::compatibility_error(Value input_, Duration d1_,
                                         Duration d2_)
    : error("incompatible durations " + dur_str(d1_) + " vs " + dur_str(d2_) +
            " at input " + input_.str()),
      input(std::move(input_)),
      d1(d1_),
      d2(d2_) {}

nonconvergent_error::nonconvergent_error(std::string what, double partial_sum_,
                                         int iterations_)
    : error(std::move(what)),
      partial_sum(partial_sum_),
      iterations(iterations_) {}

Component kleisli_compose(const Component& second, const Component& first) {
  require_match(first.output_space(), second.input_space(), "kleisli_compose");
  Space in = first.input_space().resolve(second.input_space());
  Space out = second.output_space().resolve(first.output_space());
  return Component(
      [second, first](const Value& x) { return join(fmap(second, first(x))); },
      in, out);
}

Component copy(Space s) {
  return Component([](const Value& x) { return unit(x); }, s, s);
}

Component copy_delay(Duration d, Space s) {
  return Component(
      [d](const Value& x) {
        return Evo([x](double) { return x; }, d);
      },
      s, s);
}

Component lift(std::function<Value(const Value&)> f, Space in, Space out) {
  return Component(
      [f = std::move(f)](const Value& x) { return unit(f(x)); },
      std::move(in), std::move(out));
}

Component lift_fst(Space a, Space b) {
  return lift([](const Value& v) { return v.first(); },
              Space::prod(a, std::move(b)), a);
}

Component lift_snd(Space a, Space b) {
  return lift([](const Value& v) { return v.second(); },
              Space::prod(std::move(a), b), b);
}

Component lift_swap(Space a, Space b) {
  return lift([](const Value& v) { return Value::pair(v.second(), v.first()); },
              Space::prod(a, b), Space::prod(b, a));
}

Component lift_dup(Space a) {
  return lift([](const Value& v) { return Value::pair(v, v); }, a,
              Space::prod(a, a));
}

Component lift_assoc(Space a, Space b, Space c) {
  return lift(
      [](const Value& v) {
        return Value::pair(v.first().first(),
                           Value::pair(v.first().second(), v.second()));
      },
      Space::prod(Space::prod(a, b), c), Space::prod(a, Space::prod(b, c)));
}

Component lift_inl(Space a, Space b) {
  return lift([](const Value& v) { return Value::left(v); }, a,
              Space::sum(a, std::move(b)));
}

Component lift_inr(Space a, Space b) {
  return lift([](const Value& v) { return Value::right(v); }, b,
              Space::sum(std::move(a), b));
}

Component choice(const Component& c1, const Component& c2) {
  require_match(c1.output_space(), c2.output_space(), "choice");
  Space in = Space::sum(c1.input_space(), c2.input_space());
  Space out = c1.output_space().resolve(c2.output_space());
  return Component(
      [c1, c2](const Value& x) {
        return x.is_left() ? c1(x.payload()) : c2(x.payload());
      },
      in, out);
}

Component sum(const Component& c1, const Component& c2) {
  Component inl = lift_inl(c1.output_space(), c2.output_space());
  Component inr = lift_inr(c1.output_space(), c2.output_space());
  return choice(kleisli_compose(inl, c1), kleisli_compose(inr, c2));
}

Component strict_pair(const Component& c1, const Component& c2,
                      double eps_dur) {
  require_match(c1.input_space(), c2.input_space(), "strict_pair");
  Space in = c1.input_space().resolve(c2.input_space());
  Space out = Space::prod(c1.output_space(), c2.output_space());
  return Component(
      [c1, c2, eps_dur](const Value& x) {
        Evo a = c1(x);
        Evo b = c2(x);
        const Duration da = a.duration(), db = b.duration();
        const bool ok = (da.is_infinite() && db.is_infinite()) ||
                        (da.is_finite() && db.is_finite() &&
                         std::fabs(da.value() - db.value()) <= eps_dur);
        if (!ok) throw compatibility_error(x, da, db);
        return Evo([a, b](double t) { return Value::pair(a.at(t), b.at(t)); },
                   da);
      },
      in, out);
}

Component strict_product(const Component& c1, const Component& c2,
                         double eps_dur) {
  Component p1 = kleisli_compose(
      c1, lift_fst(c1.input_space(), c2.input_space()));
  Component p2 = kleisli_compose(
      c2, lift_snd(c1.input_space(), c2.input_space()));
  return strict_pair(p1, p2, eps_dur);
}

Evo sync_evolutions(const Evo& a, const Evo& b) {
  return Evo([a, b](double t) { return Value::pair(a.at(t), b.at(t)); },
             dur_max(a.duration(), b.duration()));
}

Component sync_pair(const Component& c1, const Component& c2) {
  require_match(c1.input_space(), c2.input_space(), "sync_pair");
  Space in = c1.input_space().resolve(c2.input_space());
  Space out = Space::prod(c1.output_space(), c2.output_space());
  return Component(
      [c1, c2](const Value& x) { return sync_evolutions(c1(x), c2(x)); }, in,
      out);
}

Component sync_product(const Component& c1, const Component& c2) {
  Component p1 = kleisli_compose(
      c1, lift_fst(c1.input_space(), c2.input_space()));
  Component p2 = kleisli_compose(
      c2, lift_snd(c1.input_space(), c2.input_space()));
  return sync_pair(p1, p2);
}

Component iterate(const Component& c, int n) {
  if (n < 0) throw error("iterate: negative count");
  require_match(c.input_space(), c.output_space(), "iterate (endo required)");
  Space s = c.input_space().resolve(c.output_space());
  Component acc = copy(s);
  for (int i = 0; i < n; ++i) acc = kleisli_compose(acc, c);
  return acc;
}

namespace {

/// The k-th self-composite applied to x, built by folding one stage at a
/// time. Stops as soon as the composite's duration reaches `target` (or is
/// infinite). Throws nonconvergent_error when max_iter stages are not
/// enough.
Evo compose_until(const Component& c, const Value& x, double target,
                  const FeedbackConfig& cfg) {
  if (target <= 0.0) return unit(x);  // zeroth composite
  Evo e = c(x);
  int k = 1;
  while (e.duration().is_finite() &&
         e.duration().value() + 1e-12 < target) {
    if (k >= cfg.max_iter) {
      std::ostringstream msg;
      msg << "feedback: " << cfg.max_iter
          << " iterations reached " << e.duration().value()
          << " which is short of t=" << target;
      throw nonconvergent_error(msg.str(), e.duration().value(), k);
    }
    e = join(fmap(c, e));
    ++k;
  }
  return e;
}

/// Sup distance between two evolutions over a small grid on [0, span].
double iterate_distance(const Evo& a, const Evo& b, double span) {
  constexpr int kPoints = 33;
  double worst = 0.0;
  for (int i = 0; i <= kPoints; ++i) {
    const double t = span * static_cast<double>(i) / kPoints;
    worst = std::max(worst, metric(a.at(t), b.at(t)));
  }
  return worst;
}

struct LimitScan {
  Duration duration = Duration::infinite();
  bool values_converged = false;  // meaningful only with a finite duration
};

/// Walk the hand-off chain accumulating durations. A run of cfg.window
/// increments below eps_dur is a convergence candidate; it is accepted once
/// successive composites are eps_val-close on the grid.
LimitScan scan_duration(const Component& c, const Value& x,
                        const FeedbackConfig& cfg) {
  LimitScan scan;
  double s = 0.0;
  Value y = x;
  int small_run = 0;
  for (int i = 1; i <= cfg.max_iter; ++i) {
    Evo ev = c(y);
    if (ev.duration().is_infinite()) return scan;  // genuinely infinite
    const double d = ev.duration().value();
    s += d;
    y = ev.end_value();
    small_run = d < cfg.eps_dur ? small_run + 1 : 0;
    if (small_run >= cfg.window) {
      Evo prev = compose_until(c, x, s, cfg);
      Evo next = join(fmap(c, prev));
      scan.duration = Duration(s);
      scan.values_converged =
          iterate_distance(prev, next, s) < cfg.eps_val;
      if (scan.values_converged) return scan;
      small_run = 0;  // keep searching for a settled tail
    }
  }
  return scan;  // budget exhausted: treated as a diverging series
}

}  // namespace

Component feedback(const Component& c, FeedbackConfig cfg) {
  require_match(c.input_space(), c.output_space(), "feedback (endo required)");
  if (!cfg.allow_non_predynamical && c.input_space().sampleable()) {
    std::mt19937_64 rng(0x5eedULL);
    std::vector<Value> probes;
    for (int i = 0; i < 16; ++i)
      probes.push_back(c.input_space().sample_value(rng));
    const auto report = is_predynamical(c, probes, 1e-9);
    if (!report.pre_dynamical) {
      throw error(
          "feedback: component is not pre-dynamical (first violation at " +
          report.violations.front().input.str() +
          "); set allow_non_predynamical to waive");
    }
  }
  Space s = c.input_space().resolve(c.output_space());
  return Component(
      [c, cfg](const Value& x) {
        const LimitScan scan = scan_duration(c, x, cfg);
        const Duration dur = scan.duration;
        const bool stuck =
            dur.is_finite() && !scan.values_converged;
        return Evo(
            [c, cfg, x, dur, stuck](double t) {
              if (stuck) {
                throw nonconvergent_error(
                    "feedback: duration series converged but iterates do not",
                    dur.value(), cfg.max_iter);
              }
              return compose_until(c, x, t, cfg).at(t);
            },
            dur);
      },
      s, s);
}

}  // namespace evo
