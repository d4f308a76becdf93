#include "evo/laws.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "evo/catalog.hpp"
#include "evo/hybrid.hpp"
#include "json.hpp"

namespace evo {

void EqConfig::validate() const {
  if (input_samples <= 0) throw error("EqConfig: input_samples must be > 0");
  if (time_grid <= 1) throw error("EqConfig: time_grid must be > 1");
  if (!(horizon > 0.0) || std::isinf(horizon))
    throw error("EqConfig: horizon must be positive and finite");
  if (!(tol > 0.0))
    throw error(
        "EqConfig: tolerance must be > 0; exact floating-point equality is "
        "not a usable notion of trajectory equality");
}

std::string LawReport::line() const {
  std::ostringstream os;
  switch (status) {
    case Status::Pass:
      os << "[PASS] ";
      break;
    case Status::Fail:
      os << "[FAIL] ";
      break;
    case Status::Skipped:
      os << "[SKIP] ";
      break;
  }
  os << law_id << " worst=" << worst_deviation
     << " checked=" << samples_checked << " skipped=" << samples_skipped;
  if (has_witness && status == Status::Fail)
    os << " witness input=" << witness_input.str() << " t=" << witness_time;
  if (!reason.empty()) os << " (" << reason << ")";
  return os.str();
}

namespace {

nlohmann::ordered_json report_json(const LawReport& r) {
  nlohmann::ordered_json j;
  j["law_id"] = r.law_id;
  switch (r.status) {
    case LawReport::Status::Pass:
      j["status"] = "pass";
      break;
    case LawReport::Status::Fail:
      j["status"] = "fail";
      break;
    case LawReport::Status::Skipped:
      j["status"] = "skipped";
      break;
  }
  if (!r.reason.empty()) j["reason"] = r.reason;
  j["worst_deviation"] = r.worst_deviation;
  if (r.has_witness) {
    j["witness"] = {{"input", r.witness_input.str()}, {"time", r.witness_time}};
  }
  j["samples_checked"] = r.samples_checked;
  j["samples_skipped"] = r.samples_skipped;
  return j;
}

}  // namespace

std::string LawReport::json_str() const { return report_json(*this).dump(); }

std::string law_reports_json(std::span<const LawReport> reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  return arr.dump(2);
}

namespace {

std::uint64_t law_seed(std::uint64_t base, const std::string& id) {
  std::uint64_t h = 14695981039346656037ULL ^ base;
  for (char c : id) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ULL;
  }
  return h;
}

std::mt19937_64 law_rng(const EqConfig& cfg, const std::string& id) {
  return std::mt19937_64(law_seed(cfg.seed, id));
}

// ---------------------------------------------------------------------------
// Report accumulation

class Acc {
 public:
  Acc(std::string id) { rep_.law_id = std::move(id); }

  void checked(double dev, const Value& input, double t) {
    ++rep_.samples_checked;
    if (!rep_.has_witness || dev > rep_.worst_deviation) {
      rep_.worst_deviation = dev;
      rep_.witness_input = input;
      rep_.witness_time = t;
      rep_.has_witness = true;
    }
  }

  void skipped(const std::string& note) {
    ++rep_.samples_skipped;
    if (skip_note_.empty()) skip_note_ = note;
  }

  void merge(const SweepResult& r, std::span<const Value> inputs) {
    rep_.samples_checked += r.checked;
    rep_.samples_skipped += r.skipped;
    if (skip_note_.empty()) skip_note_ = r.skip_note;
    if (r.worst_input >= 0 &&
        (!rep_.has_witness || r.worst_deviation > rep_.worst_deviation)) {
      rep_.worst_deviation = r.worst_deviation;
      rep_.witness_input = inputs[static_cast<size_t>(r.worst_input)];
      rep_.witness_time = r.worst_t;
      rep_.has_witness = true;
    }
  }

  LawReport finish(double tol) {
    if (rep_.samples_checked == 0) {
      rep_.status = LawReport::Status::Skipped;
      rep_.reason = skip_note_.empty() ? "no checkable samples" : skip_note_;
    } else if (rep_.worst_deviation <= tol) {
      rep_.status = LawReport::Status::Pass;
      if (rep_.samples_skipped > 0)
        rep_.reason = std::to_string(rep_.samples_skipped) +
                      " incompatible samples skipped";
    } else {
      rep_.status = LawReport::Status::Fail;
    }
    return rep_;
  }

  /// For the non-commutativity case: the equation is expected to break.
  LawReport finish_expecting_deviation(double min_dev) {
    if (rep_.samples_checked == 0) {
      rep_.status = LawReport::Status::Skipped;
      rep_.reason = "no checkable samples";
    } else if (rep_.worst_deviation > min_dev) {
      rep_.status = LawReport::Status::Pass;
      rep_.reason = "expected inequality observed";
    } else {
      rep_.status = LawReport::Status::Fail;
      rep_.reason = "sides unexpectedly agree";
    }
    return rep_;
  }

 private:
  LawReport rep_;
  std::string skip_note_;
};

// ---------------------------------------------------------------------------
// Sampling material

Space lawR() { return Space::real(-5.0, 5.0); }

std::vector<Component> real_pool() {
  return {
      make_thermostat(),
      make_maintainer(),
      make_supervisor(),
      make_amplifier(),
      make_signal_generator(1.0, Duration(20.0)),
      make_signal_generator(3.0, Duration(20.0)),
      make_signal_generator(1.0, Duration(3.0 * M_PI)),
      copy_delay(Duration(2.5), lawR()),
      copy(lawR()),
  };
}

/// Components with only finite durations; cheap enough for deep iteration.
std::vector<Component> finite_endo_pool() {
  return {
      make_thermostat(),
      make_signal_generator(1.0, Duration(20.0)),
      make_signal_generator(2.0, Duration(5.0)),
      copy_delay(Duration(2.5), lawR()),
      make_supervisor(),
  };
}

/// Ramps like the thermostat but never takes longer than from zero; its
/// durations agree with the thermostat's exactly on non-negative inputs.
Component make_floored_thermostat() {
  return Component(
      [](const Value& v) {
        const double x = v.as_real();
        return Evo([x](double t) { return Value::real(x + t); },
                   Duration(trunc_sub(20.0, std::max(x, 0.0))));
      },
      Space::real(-10.0, 25.0, "temp"), Space::real(-10.0, 25.0, "temp"));
}

/// Pairs producing equal durations on every shared input, usable under the
/// strict product. The thermostat/floored pair is compatible only on part
/// of the input space and exercises the skip path.
std::vector<std::pair<Component, Component>> compatible_pairs() {
  return {
      {make_signal_generator(1.0, Duration(20.0)),
       make_signal_generator(3.0, Duration(20.0))},
      {make_supervisor(), make_amplifier()},
      {copy_delay(Duration(2.5), lawR()), copy_delay(Duration(2.5), lawR())},
      {make_thermostat(), make_floored_thermostat()},
  };
}

/// Zero-duration post-processors preserve duration equality.
std::vector<std::pair<Component, Component>> instant_pairs() {
  return {
      {make_supervisor(), make_amplifier()},
      {make_amplifier(), make_amplifier()},
      {copy(lawR()), make_supervisor()},
  };
}

struct RealFn {
  std::string name;
  std::function<double(double)> f;
};

std::vector<RealFn> fn_pool() {
  return {
      {"affine2x+1", [](double x) { return 2.0 * x + 1.0; }},
      {"affine-x/2+3", [](double x) { return -0.5 * x + 3.0; }},
      {"sin", [](double x) { return std::sin(x); }},
      {"clamp5", [](double x) { return std::min(x, 5.0); }},
  };
}

Component lift_real(const RealFn& fn) {
  auto f = fn.f;
  return lift([f](const Value& v) { return Value::real(f(v.as_real())); },
              lawR(), lawR());
}

Component lift_fn_prod(const RealFn& fa, const RealFn& fb) {
  auto f = fa.f;
  auto g = fb.f;
  return lift(
      [f, g](const Value& v) {
        return Value::pair(Value::real(f(v.first().as_real())),
                           Value::real(g(v.second().as_real())));
      },
      Space::prod(lawR(), lawR()), Space::prod(lawR(), lawR()));
}

Component lift_fn_sum(const RealFn& fa, const RealFn& fb) {
  auto f = fa.f;
  auto g = fb.f;
  return lift(
      [f, g](const Value& v) {
        return v.is_left() ? Value::left(Value::real(f(v.payload().as_real())))
                           : Value::right(Value::real(g(v.payload().as_real())));
      },
      Space::sum(lawR(), lawR()), Space::sum(lawR(), lawR()));
}

template <class T>
const T& pick(const std::vector<T>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<size_t> dist(0, pool.size() - 1);
  return pool[dist(rng)];
}

int pick_int(int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng);
}

// ---------------------------------------------------------------------------
// Law drivers

using SidesFn = std::function<std::vector<std::pair<Component, Component>>(
    std::mt19937_64&)>;

/// Compare law sides pointwise over sampled inputs.
LawReport eq_law(const std::string& id, const EqConfig& cfg,
                 const SidesFn& make_sides) {
  auto rng = law_rng(cfg, id);
  auto sides = make_sides(rng);
  Acc acc(id);
  const size_t per =
      std::max<size_t>(1, static_cast<size_t>(cfg.input_samples) /
                              std::max<size_t>(1, sides.size()));
  for (const auto& [lhs, rhs] : sides) {
    Space in = lhs.input_space().resolve(rhs.input_space());
    if (!in.sampleable()) {
      acc.skipped("unsampleable input space");
      continue;
    }
    std::vector<Value> inputs;
    inputs.reserve(per);
    for (size_t i = 0; i < per; ++i) inputs.push_back(in.sample_value(rng));
    acc.merge(sweep(lhs, rhs, inputs, cfg.grid()), inputs);
  }
  return acc.finish(cfg.tol);
}

using SampleFn = std::function<void(std::mt19937_64&, Acc&, const GridSpec&)>;

/// Per-sample law (evolution- or value-level equations).
LawReport sample_law(const std::string& id, const EqConfig& cfg,
                     const SampleFn& one_sample) {
  auto rng = law_rng(cfg, id);
  Acc acc(id);
  const GridSpec grid = cfg.grid();
  for (int i = 0; i < cfg.input_samples; ++i) one_sample(rng, acc, grid);
  return acc.finish(cfg.tol);
}

std::pair<Value, Evo> sample_evolution(const std::vector<Component>& pool,
                                       std::mt19937_64& rng) {
  const Component& c = pick(pool, rng);
  Value x = c.input_space().sample_value(rng);
  return {x, c(x)};
}

// ---------------------------------------------------------------------------
// The suite

struct LawDef {
  std::string id;
  std::function<LawReport(const EqConfig&)> run;
};

const std::vector<LawDef>& law_table();

}  // namespace

LawReport component_approx_eq(const Component& c1, const Component& c2,
                              const EqConfig& cfg, const std::string& law_id) {
  cfg.validate();
  Acc acc(law_id);
  if (!c1.input_space().matches(c2.input_space()) ||
      !c1.output_space().matches(c2.output_space())) {
    LawReport rep = acc.finish(cfg.tol);
    rep.status = LawReport::Status::Fail;
    rep.reason = "space mismatch: " + c1.input_space().str() + "->" +
                 c1.output_space().str() + " vs " + c2.input_space().str() +
                 "->" + c2.output_space().str();
    return rep;
  }
  Space in = c1.input_space().resolve(c2.input_space());
  if (!in.sampleable()) {
    LawReport rep = acc.finish(cfg.tol);
    rep.status = LawReport::Status::Skipped;
    rep.reason = "unsampleable input space";
    return rep;
  }
  auto rng = law_rng(cfg, law_id);
  std::vector<Value> inputs;
  inputs.reserve(static_cast<size_t>(cfg.input_samples));
  for (int i = 0; i < cfg.input_samples; ++i)
    inputs.push_back(in.sample_value(rng));
  acc.merge(sweep(c1, c2, inputs, cfg.grid()), inputs);
  return acc.finish(cfg.tol);
}

std::vector<std::string> law_suite_ids() {
  std::vector<std::string> ids;
  for (const auto& def : law_table()) ids.push_back(def.id);
  return ids;
}

std::vector<LawReport> run_law_suite(const EqConfig& cfg,
                                     const std::string& only) {
  cfg.validate();
  std::vector<LawReport> reports;
  for (const auto& def : law_table()) {
    if (!only.empty() && def.id.rfind(only, 0) != 0) continue;
    reports.push_back(def.run(cfg));
  }
  return reports;
}

namespace {

const std::vector<LawDef>& law_table() {
  static const std::vector<LawDef> table = [] {
    std::vector<LawDef> laws;
    auto add = [&laws](std::string id,
                       std::function<LawReport(const EqConfig&)> run) {
      laws.push_back({std::move(id), std::move(run)});
    };

    // --- monad structure -------------------------------------------------
    add("monad.left_unit", [](const EqConfig& cfg) {
      return sample_law("monad.left_unit", cfg,
                        [pool = real_pool()](std::mt19937_64& rng, Acc& acc,
                                             const GridSpec& grid) {
                          auto [x, ev] = sample_evolution(pool, rng);
                          double t = 0;
                          double dev =
                              evolution_deviation(join(unit(ev)), ev, grid, &t);
                          acc.checked(dev, x, t);
                        });
    });
    add("monad.right_unit", [](const EqConfig& cfg) {
      return sample_law(
          "monad.right_unit", cfg,
          [pool = real_pool()](std::mt19937_64& rng, Acc& acc,
                               const GridSpec& grid) {
            auto [x, ev] = sample_evolution(pool, rng);
            auto nested = fmap([](const Value& v) { return unit(v); }, ev);
            double t = 0;
            double dev = evolution_deviation(join(nested), ev, grid, &t);
            acc.checked(dev, x, t);
          });
    });
    add("monad.assoc", [](const EqConfig& cfg) {
      return sample_law(
          "monad.assoc", cfg,
          [pool = real_pool()](std::mt19937_64& rng, Acc& acc,
                               const GridSpec& grid) {
            const Component& c1 = pick(pool, rng);
            const Component& c2 = pick(pool, rng);
            const Component& c3 = pick(pool, rng);
            Value x = c1.input_space().sample_value(rng);
            auto nested3 = fmap(
                [c2, c3](const Value& y) { return fmap(c3, c2(y)); }, c1(x));
            Evo lhs = join(join(nested3));
            Evo rhs = join(fmap(
                [](const Evolution<Evo>& inner) { return join(inner); },
                nested3));
            double t = 0;
            double dev = evolution_deviation(lhs, rhs, grid, &t);
            acc.checked(dev, x, t);
          });
    });

    // --- evaluation-at-zero algebra --------------------------------------
    add("em.unit", [](const EqConfig& cfg) {
      return sample_law("em.unit", cfg,
                        [](std::mt19937_64& rng, Acc& acc, const GridSpec&) {
                          Space s = Space::prod(lawR(), lawR());
                          Value v = s.sample_value(rng);
                          acc.checked(metric(initial(unit(v)), v), v, 0.0);
                        });
    });
    add("em.mult", [](const EqConfig& cfg) {
      return sample_law(
          "em.mult", cfg,
          [pool = real_pool()](std::mt19937_64& rng, Acc& acc,
                               const GridSpec&) {
            const Component& c1 = pick(pool, rng);
            const Component& c2 = pick(pool, rng);
            Value x = c1.input_space().sample_value(rng);
            auto nested = fmap(c2, c1(x));
            Value lhs = initial(join(nested));
            Value rhs = initial(
                fmap([](const Evo& e) { return initial(e); }, nested));
            acc.checked(metric(lhs, rhs), x, 0.0);
          });
    });

    // --- sequential composition ------------------------------------------
    add("kleisli.left_unit", [](const EqConfig& cfg) {
      return eq_law("kleisli.left_unit", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          sides.push_back({kleisli_compose(copy(c.output_space()), c), c});
        }
        return sides;
      });
    });
    add("kleisli.right_unit", [](const EqConfig& cfg) {
      return eq_law("kleisli.right_unit", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          sides.push_back({kleisli_compose(c, copy(c.input_space())), c});
        }
        return sides;
      });
    });
    add("kleisli.assoc", [](const EqConfig& cfg) {
      return eq_law("kleisli.assoc", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& c3 = pick(pool, rng);
          sides.push_back(
              {kleisli_compose(kleisli_compose(c3, c2), c1),
               kleisli_compose(c3, kleisli_compose(c2, c1))});
        }
        return sides;
      });
    });

    // --- choice and sum ---------------------------------------------------
    add("coprod.fusion", [](const EqConfig& cfg) {
      return eq_law("coprod.fusion", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& c3 = pick(pool, rng);
          sides.push_back({kleisli_compose(c3, choice(c1, c2)),
                           choice(kleisli_compose(c3, c1),
                                  kleisli_compose(c3, c2))});
        }
        return sides;
      });
    });
    add("coprod.sum_inj1", [](const EqConfig& cfg) {
      return eq_law("coprod.sum_inj1", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          Component inl_in = lift_inl(c1.input_space(), c2.input_space());
          Component inl_out = lift_inl(c1.output_space(), c2.output_space());
          sides.push_back({kleisli_compose(sum(c1, c2), inl_in),
                           kleisli_compose(inl_out, c1)});
        }
        return sides;
      });
    });
    add("coprod.sum_inj2", [](const EqConfig& cfg) {
      return eq_law("coprod.sum_inj2", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          Component inr_in = lift_inr(c1.input_space(), c2.input_space());
          Component inr_out = lift_inr(c1.output_space(), c2.output_space());
          sides.push_back({kleisli_compose(sum(c1, c2), inr_in),
                           kleisli_compose(inr_out, c2)});
        }
        return sides;
      });
    });
    add("coprod.copy_sum", [](const EqConfig& cfg) {
      return eq_law("coprod.copy_sum", cfg, [](std::mt19937_64&) {
        std::vector<std::pair<Component, Component>> sides;
        sides.push_back({sum(copy(lawR()), copy(lawR())),
                         copy(Space::sum(lawR(), lawR()))});
        return sides;
      });
    });
    add("coprod.sum_functor", [](const EqConfig& cfg) {
      return eq_law("coprod.sum_functor", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& d1 = pick(pool, rng);
          const Component& d2 = pick(pool, rng);
          sides.push_back({kleisli_compose(sum(d1, d2), sum(c1, c2)),
                           sum(kleisli_compose(d1, c1),
                               kleisli_compose(d2, c2))});
        }
        return sides;
      });
    });
    add("coprod.choice_sum", [](const EqConfig& cfg) {
      return eq_law("coprod.choice_sum", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& d1 = pick(pool, rng);
          const Component& d2 = pick(pool, rng);
          sides.push_back({kleisli_compose(choice(d1, d2), sum(c1, c2)),
                           choice(kleisli_compose(d1, c1),
                                  kleisli_compose(d2, c2))});
        }
        return sides;
      });
    });
    add("coprod.lift_sum", [](const EqConfig& cfg) {
      return eq_law("coprod.lift_sum", cfg, [](std::mt19937_64& rng) {
        auto fns = fn_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const RealFn& f = pick(fns, rng);
          const RealFn& g = pick(fns, rng);
          sides.push_back(
              {sum(lift_real(f), lift_real(g)), lift_fn_sum(f, g)});
        }
        return sides;
      });
    });

    // --- lifting is functorial --------------------------------------------
    add("lift.id", [](const EqConfig& cfg) {
      return eq_law("lift.id", cfg, [](std::mt19937_64&) {
        std::vector<std::pair<Component, Component>> sides;
        sides.push_back(
            {lift([](const Value& v) { return v; }, lawR(), lawR()),
             copy(lawR())});
        return sides;
      });
    });
    add("lift.comp", [](const EqConfig& cfg) {
      return eq_law("lift.comp", cfg, [](std::mt19937_64& rng) {
        auto fns = fn_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const RealFn& f = pick(fns, rng);
          const RealFn& g = pick(fns, rng);
          RealFn gf{"compose", [ff = f.f, gg = g.f](double x) {
                      return gg(ff(x));
                    }};
          sides.push_back(
              {kleisli_compose(lift_real(g), lift_real(f)), lift_real(gf)});
        }
        return sides;
      });
    });

    // --- strict parallel (pullback) ---------------------------------------
    add("prod.pair_fusion", [](const EqConfig& cfg) {
      return eq_law("prod.pair_fusion", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          const Component& d = pick(pool, rng);
          sides.push_back({kleisli_compose(strict_pair(c1, c2), d),
                           strict_pair(kleisli_compose(c1, d),
                                       kleisli_compose(c2, d))});
        }
        return sides;
      });
    });
    add("prod.proj1", [](const EqConfig& cfg) {
      return eq_law("prod.proj1", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          Component prod = strict_product(c1, c2);
          sides.push_back(
              {kleisli_compose(
                   lift_fst(c1.output_space(), c2.output_space()), prod),
               kleisli_compose(
                   c1, lift_fst(c1.input_space(), c2.input_space()))});
        }
        return sides;
      });
    });
    add("prod.proj2", [](const EqConfig& cfg) {
      return eq_law("prod.proj2", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          Component prod = strict_product(c1, c2);
          sides.push_back(
              {kleisli_compose(
                   lift_snd(c1.output_space(), c2.output_space()), prod),
               kleisli_compose(
                   c2, lift_snd(c1.input_space(), c2.input_space()))});
        }
        return sides;
      });
    });
    add("prod.pair_diag", [](const EqConfig& cfg) {
      return eq_law("prod.pair_diag", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          Space in = c1.input_space().resolve(c2.input_space());
          sides.push_back(
              {strict_pair(c1, c2),
               kleisli_compose(strict_product(c1, c2), lift_dup(in))});
        }
        return sides;
      });
    });
    add("prod.copy_prod", [](const EqConfig& cfg) {
      return eq_law("prod.copy_prod", cfg, [](std::mt19937_64&) {
        std::vector<std::pair<Component, Component>> sides;
        sides.push_back({strict_product(copy(lawR()), copy(lawR())),
                         copy(Space::prod(lawR(), lawR()))});
        return sides;
      });
    });
    add("prod.prod_functor", [](const EqConfig& cfg) {
      return eq_law("prod.prod_functor", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        auto posts = instant_pairs();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          const auto& [d1, d2] = pick(posts, rng);
          sides.push_back(
              {kleisli_compose(strict_product(d1, d2),
                               strict_product(c1, c2)),
               strict_product(kleisli_compose(d1, c1),
                              kleisli_compose(d2, c2))});
        }
        return sides;
      });
    });
    add("prod.prod_pair", [](const EqConfig& cfg) {
      return eq_law("prod.prod_pair", cfg, [](std::mt19937_64& rng) {
        auto pairs = compatible_pairs();
        auto posts = instant_pairs();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c1, c2] = pick(pairs, rng);
          const auto& [d1, d2] = pick(posts, rng);
          sides.push_back(
              {kleisli_compose(strict_product(d1, d2), strict_pair(c1, c2)),
               strict_pair(kleisli_compose(d1, c1),
                           kleisli_compose(d2, c2))});
        }
        return sides;
      });
    });
    add("prod.lift_prod", [](const EqConfig& cfg) {
      return eq_law("prod.lift_prod", cfg, [](std::mt19937_64& rng) {
        auto fns = fn_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const RealFn& f = pick(fns, rng);
          const RealFn& g = pick(fns, rng);
          sides.push_back({strict_product(lift_real(f), lift_real(g)),
                           lift_fn_prod(f, g)});
        }
        return sides;
      });
    });

    // --- synchronised parallel --------------------------------------------
    add("sync.map_pair", [](const EqConfig& cfg) {
      return eq_law("sync.map_pair", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        auto fns = fn_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const RealFn& f = pick(fns, rng);
          const RealFn& g = pick(fns, rng);
          sides.push_back(
              {kleisli_compose(lift_fn_prod(f, g), sync_pair(c1, c2)),
               sync_pair(kleisli_compose(lift_real(f), c1),
                         kleisli_compose(lift_real(g), c2))});
        }
        return sides;
      });
    });
    add("sync.assoc", [](const EqConfig& cfg) {
      return eq_law("sync.assoc", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& c3 = pick(pool, rng);
          Component assoc = lift_assoc(c1.output_space(), c2.output_space(),
                                       c3.output_space());
          sides.push_back(
              {kleisli_compose(assoc, sync_pair(sync_pair(c1, c2), c3)),
               sync_pair(c1, sync_pair(c2, c3))});
        }
        return sides;
      });
    });
    add("sync.unit1", [](const EqConfig& cfg) {
      return eq_law("sync.unit1", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          sides.push_back(
              {kleisli_compose(
                   lift_fst(c.output_space(), c.input_space()),
                   sync_pair(c, copy(c.input_space()))),
               c});
        }
        return sides;
      });
    });
    add("sync.unit2", [](const EqConfig& cfg) {
      return eq_law("sync.unit2", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          sides.push_back(
              {kleisli_compose(
                   lift_snd(c.input_space(), c.output_space()),
                   sync_pair(copy(c.input_space()), c)),
               c});
        }
        return sides;
      });
    });
    add("syncprod.swap", [](const EqConfig& cfg) {
      return eq_law("syncprod.swap", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          sides.push_back(
              {kleisli_compose(
                   lift_swap(c2.output_space(), c1.output_space()),
                   sync_product(c2, c1)),
               kleisli_compose(
                   sync_product(c1, c2),
                   lift_swap(c2.input_space(), c1.input_space()))});
        }
        return sides;
      });
    });
    add("syncprod.assoc", [](const EqConfig& cfg) {
      return eq_law("syncprod.assoc", cfg, [](std::mt19937_64& rng) {
        auto pool = real_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(pool, rng);
          const Component& c2 = pick(pool, rng);
          const Component& c3 = pick(pool, rng);
          sides.push_back(
              {kleisli_compose(
                   lift_assoc(c1.output_space(), c2.output_space(),
                              c3.output_space()),
                   sync_product(sync_product(c1, c2), c3)),
               kleisli_compose(
                   sync_product(c1, sync_product(c2, c3)),
                   lift_assoc(c1.input_space(), c2.input_space(),
                              c3.input_space()))});
        }
        return sides;
      });
    });
    add("syncprod.copy", [](const EqConfig& cfg) {
      return eq_law("syncprod.copy", cfg, [](std::mt19937_64&) {
        std::vector<std::pair<Component, Component>> sides;
        sides.push_back({sync_product(copy(lawR()), copy(lawR())),
                         copy(Space::prod(lawR(), lawR()))});
        return sides;
      });
    });
    add("syncprod.lift", [](const EqConfig& cfg) {
      return eq_law("syncprod.lift", cfg, [](std::mt19937_64& rng) {
        auto fns = fn_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const RealFn& f = pick(fns, rng);
          const RealFn& g = pick(fns, rng);
          sides.push_back({sync_product(lift_real(f), lift_real(g)),
                           lift_fn_prod(f, g)});
        }
        return sides;
      });
    });

    // --- iteration ----------------------------------------------------------
    add("iter.copy", [](const EqConfig& cfg) {
      return eq_law("iter.copy", cfg, [](std::mt19937_64& rng) {
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          int n = pick_int(0, 3, rng);
          sides.push_back({iterate(copy(lawR()), n), copy(lawR())});
        }
        return sides;
      });
    });
    add("iter.one", [](const EqConfig& cfg) {
      return eq_law("iter.one", cfg, [](std::mt19937_64& rng) {
        auto pool = finite_endo_pool();
        pool.push_back(make_bouncing_ball(9.8));
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          sides.push_back({iterate(c, 1), c});
        }
        return sides;
      });
    });
    add("iter.power", [](const EqConfig& cfg) {
      return eq_law("iter.power", cfg, [](std::mt19937_64& rng) {
        auto pool = finite_endo_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          int n = pick_int(0, 3, rng);
          int m = pick_int(0, 3, rng);
          sides.push_back({iterate(iterate(c, n), m), iterate(c, n * m)});
        }
        return sides;
      });
    });
    add("iter.add", [](const EqConfig& cfg) {
      return eq_law("iter.add", cfg, [](std::mt19937_64& rng) {
        auto pool = finite_endo_pool();
        pool.push_back(make_bouncing_ball(9.8));
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          int n = pick_int(0, 3, rng);
          int m = pick_int(0, 3, rng);
          sides.push_back({kleisli_compose(iterate(c, n), iterate(c, m)),
                           iterate(c, n + m)});
        }
        return sides;
      });
    });
    add("iter.sum", [](const EqConfig& cfg) {
      return eq_law("iter.sum", cfg, [](std::mt19937_64& rng) {
        auto pool = finite_endo_pool();
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c = pick(pool, rng);
          const Component& d = pick(pool, rng);
          int n = pick_int(0, 3, rng);
          sides.push_back({iterate(sum(c, d), n),
                           sum(iterate(c, n), iterate(d, n))});
        }
        return sides;
      });
    });
    add("iter.prod", [](const EqConfig& cfg) {
      return eq_law("iter.prod", cfg, [](std::mt19937_64& rng) {
        auto pairs = std::vector<std::pair<Component, Component>>{
            {make_signal_generator(1.0, Duration(20.0)),
             make_signal_generator(3.0, Duration(20.0))},
            {copy_delay(Duration(2.5), lawR()),
             copy_delay(Duration(2.5), lawR())},
            {make_supervisor(), make_amplifier()},
        };
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const auto& [c, d] = pick(pairs, rng);
          int n = pick_int(0, 3, rng);
          sides.push_back({iterate(strict_product(c, d), n),
                           strict_product(iterate(c, n), iterate(d, n))});
        }
        return sides;
      });
    });

    // --- infinite first stage absorbs --------------------------------------
    add("kleisli.absorption", [](const EqConfig& cfg) {
      return eq_law("kleisli.absorption", cfg, [](std::mt19937_64& rng) {
        std::vector<Component> infinite = {
            make_maintainer(),
            make_signal_generator(1.0, Duration::infinite())};
        std::vector<Component> predyn = {
            make_thermostat(), make_signal_generator(1.0, Duration(20.0)),
            copy(lawR())};
        std::vector<std::pair<Component, Component>> sides;
        for (int i = 0; i < 4; ++i) {
          const Component& c1 = pick(infinite, rng);
          const Component& c2 = pick(predyn, rng);
          sides.push_back({kleisli_compose(c2, c1), c1});
        }
        return sides;
      });
    });

    // --- tensorial strength -------------------------------------------------
    add("strength.coherence", [](const EqConfig& cfg) {
      return sample_law(
          "strength.coherence", cfg,
          [pool = real_pool()](std::mt19937_64& rng, Acc& acc,
                               const GridSpec& grid) {
            auto [x0, ev] = sample_evolution(pool, rng);
            Value x = lawR().sample_value(rng);
            double worst = 0.0, worst_t = 0.0;

            // second coordinate of the strengthened pair is the evolution
            double t = 0;
            double dev = evolution_deviation(
                fmap([](const Value& v) { return v.second(); },
                     strength_right(x, ev)),
                ev, grid, &t);
            if (dev > worst) worst = dev, worst_t = t;

            // strengthening a trivial evolution pairs the values
            Value y = lawR().sample_value(rng);
            dev = evolution_deviation(strength_right(x, unit(y)),
                                      unit(Value::pair(x, y)), grid, &t);
            if (dev > worst) worst = dev, worst_t = t;

            // strength commutes with flattening
            const Component& c2 = pick(pool, rng);
            auto nested = fmap(c2, ev);
            Evo lhs = join(fmap(
                [x](const Evo& inner) { return strength_right(x, inner); },
                nested));
            Evo rhs = strength_right(x, join(nested));
            dev = evolution_deviation(lhs, rhs, grid, &t);
            if (dev > worst) worst = dev, worst_t = t;

            // left strength is the swapped right strength
            dev = evolution_deviation(
                fmap([](const Value& v) {
                  return Value::pair(v.second(), v.first());
                },
                     strength_left(ev, x)),
                strength_right(x, ev), grid, &t);
            if (dev > worst) worst = dev, worst_t = t;

            acc.checked(worst, x0, worst_t);
          });
    });
    add("strength.noncommutative", [](const EqConfig& cfg) {
      auto rng = law_rng(cfg, "strength.noncommutative");
      Component c1 = make_signal_generator(1.0, Duration(20.0));
      Component c2 = make_signal_generator(3.0, Duration(20.0));
      Acc acc("strength.noncommutative");
      const GridSpec grid = cfg.grid();
      for (int i = 0; i < cfg.input_samples; ++i) {
        Value x = c1.input_space().sample_value(rng);
        auto [left_first, right_first] = sequencing_counterexample(c1, c2, x);
        double t = 0;
        double dev = evolution_deviation(left_first, right_first, grid, &t);
        acc.checked(dev, x, t);
      }
      return acc.finish_expecting_deviation(0.5);
    });

    return laws;
  }();
  return table;
}

}  // namespace

}  // namespace evo
