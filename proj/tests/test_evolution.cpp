#include <cmath>
#include <random>

#include "doctest.h"
#include "evo/evolution.hpp"
#include "evo/value.hpp"

using namespace evo;

namespace {

using REvo = Evolution<double>;

REvo ramp(double start, double dur) {
  return REvo([start](double t) { return start + t; }, Duration(dur));
}

}  // namespace

TEST_CASE("construction clamps evaluation to the duration") {
  REvo e = ramp(10.0, 10.0);
  CHECK(e.at(25.0) == 20.0);
  CHECK(e.at(5.0) == 15.0);
  CHECK(e.at(10.0) == 20.0);
  CHECK(e.at(1000.0) == 20.0);
}

TEST_CASE("zero duration evolutions are constant") {
  REvo e([](double t) { return 3.0 * t + 1.0; }, Duration::zero());
  for (double t : {0.0, 0.1, 7.0, 1e6}) CHECK(e.at(t) == 1.0);
}

TEST_CASE("infinite duration leaves the trajectory untouched") {
  REvo e([](double t) { return std::sin(t); }, Duration::infinite());
  CHECK(e.at(M_PI_2) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.duration().is_infinite());
}

TEST_CASE("negative times are read at zero") {
  REvo e = ramp(4.0, 2.0);
  CHECK(e.at(-3.0) == 4.0);
}

TEST_CASE("truncation invariant holds for randomized probes") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dur_dist(0.0, 20.0);
  std::uniform_real_distribution<double> past(0.0, 100.0);
  for (int i = 0; i < 200; ++i) {
    const double d = dur_dist(rng);
    REvo e([](double t) { return t * t - 3.0 * t; }, Duration(d));
    const double beyond = d + past(rng);
    CHECK(e.at(beyond) == e.at(d));
  }
}

TEST_CASE("unit wraps a value with duration zero") {
  auto e = unit(7.0);
  CHECK(e.duration() == Duration::zero());
  CHECK(e.at(3.2) == 7.0);
  CHECK(initial(e) == 7.0);
}

TEST_CASE("initial reads the start of a trajectory") {
  CHECK(initial(ramp(10.0, 10.0)) == 10.0);
  auto g = [](double v) { return 2.0 * v + 1.0; };
  REvo e = ramp(3.0, 5.0);
  CHECK(initial(fmap(g, e)) == g(initial(e)));
}

TEST_CASE("fmap applies pointwise and keeps the duration") {
  REvo e = ramp(10.0, 10.0);
  auto doubled = fmap([](double v) { return 2.0 * v; }, e);
  CHECK(doubled.at(5.0) == 30.0);
  CHECK(doubled.duration().value() == 10.0);

  auto same = fmap([](double v) { return v; }, e);
  for (double t : {0.0, 3.0, 9.9, 30.0}) CHECK(same.at(t) == e.at(t));

  auto g = [](double v) { return v - 1.0; };
  auto h = [](double v) { return v * v; };
  auto composed = fmap([&](double v) { return h(g(v)); }, e);
  auto staged = fmap(h, fmap(g, e));
  for (double t : {0.0, 2.0, 10.0, 15.0}) CHECK(composed.at(t) == staged.at(t));
}

TEST_CASE("concat runs one evolution after the other") {
  REvo a([](double t) { return t; }, Duration(2.0));
  REvo b([](double t) { return 100.0 + t; }, Duration(3.0));
  auto ab = concat(a, b);
  CHECK(ab.duration().value() == 5.0);
  CHECK(ab.at(1.0) == 1.0);
  CHECK(ab.at(4.0) == 102.0);
  CHECK(ab.at(2.0) == 2.0);   // boundary belongs to the first stage
  CHECK(ab.at(50.0) == 103.0);
}

TEST_CASE("concat with zero-duration stages") {
  REvo a([](double) { return 42.0; }, Duration::zero());
  REvo b([](double t) { return 10.0 + t; }, Duration(3.0));
  auto ab = concat(a, b);
  CHECK(ab.duration().value() == 3.0);
  CHECK(ab.at(0.0) == 42.0);
  for (double t : {0.5, 1.0, 2.9}) CHECK(ab.at(t) == 10.0 + t);

  auto ba = concat(b, a);
  CHECK(ba.duration().value() == 3.0);
  for (double t : {0.0, 1.0, 3.0}) CHECK(ba.at(t) == b.at(t));
}

TEST_CASE("concat refuses an infinite first stage") {
  REvo inf([](double t) { return t; }, Duration::infinite());
  REvo b([](double) { return 0.0; }, Duration(1.0));
  CHECK_THROWS_AS(concat(inf, b), error);
}

TEST_CASE("join flattens the two-phase nesting") {
  // outer runs for 2 following f, the inner evolution reached at 2 is (g, 3)
  auto f = [](double t) { return std::sin(t) + t; };
  auto g = [](double t) { return 100.0 - t; };
  Evolution<REvo> nested(
      [&](double t) {
        if (t < 2.0) return unit(f(t));
        return REvo(g, Duration(3.0));
      },
      Duration(2.0));
  REvo flat = join(nested);
  CHECK(flat.duration().value() == 5.0);
  CHECK(flat.at(1.0) == f(1.0));
  CHECK(flat.at(4.0) == g(2.0));
}

TEST_CASE("join left and right unit") {
  REvo e = ramp(1.5, 4.0);
  REvo left = join(unit(e));
  REvo right = join(fmap([](double v) { return unit(v); }, e));
  for (double t : {0.0, 0.5, 2.0, 4.0, 9.0}) {
    CHECK(left.at(t) == doctest::Approx(e.at(t)).epsilon(1e-15));
    CHECK(right.at(t) == doctest::Approx(e.at(t)).epsilon(1e-15));
  }
  CHECK(left.duration().value() == 4.0);
  CHECK(right.duration().value() == 4.0);
}

TEST_CASE("join on an infinite outer duration follows initial values") {
  Evolution<REvo> nested(
      [](double t) { return unit(t * 2.0); }, Duration::infinite());
  REvo flat = join(nested);
  CHECK(flat.duration().is_infinite());
  CHECK(flat.at(21.0) == 42.0);
}

TEST_CASE("join associativity on a nested sample") {
  auto inner = [](double s) {
    return REvo([s](double t) { return s + t; }, Duration(1.0));
  };
  Evolution<REvo> mid([&](double t) { return inner(t); }, Duration(2.0));
  Evolution<Evolution<REvo>> nested3(
      [&](double t) {
        return Evolution<REvo>([&, t](double u) { return inner(t + u); },
                               Duration(2.0 - time_min(t, Duration(2.0))));
      },
      Duration(1.0));
  REvo a = join(join(nested3));
  REvo b = join(
      fmap([](const Evolution<REvo>& n) { return join(n); }, nested3));
  CHECK(a.duration().value() == doctest::Approx(b.duration().value()));
  for (double t : {0.0, 0.4, 1.0, 1.7, 2.5, 3.1, 10.0})
    CHECK(a.at(t) == doctest::Approx(b.at(t)).epsilon(1e-12));
}

TEST_CASE("naturality: fmap commutes with unit, initial and join") {
  auto g = [](double v) { return -3.0 * v + 0.25; };
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  for (int i = 0; i < 50; ++i) {
    const double x = dist(rng);
    // unit
    auto lhs = fmap(g, unit(x));
    auto rhs = unit(g(x));
    CHECK(lhs.at(0.3) == rhs.at(0.3));
    // initial
    REvo e = ramp(x, 3.0);
    CHECK(initial(fmap(g, e)) == g(initial(e)));
    // join
    Evolution<REvo> nested([e](double t) { return fmap([t](double v) { return v + t; }, e); },
                           Duration(2.0));
    REvo jl = fmap(g, join(nested));
    REvo jr = join(fmap([&](const REvo& in) { return fmap(g, in); }, nested));
    for (double t : {0.0, 1.0, 2.0, 4.0})
      CHECK(jl.at(t) == doctest::Approx(jr.at(t)).epsilon(1e-12));
  }
}

TEST_CASE("evaluation-at-zero is an algebra for the flattening") {
  REvo e = ramp(2.0, 3.0);
  Evolution<REvo> nested(
      [e](double t) { return fmap([t](double v) { return v * (1.0 + t); }, e); },
      Duration(1.5));
  CHECK(initial(join(nested)) ==
        doctest::Approx(initial(fmap([](const REvo& in) { return initial(in); },
                                     nested))));
  CHECK(initial(unit(9.75)) == 9.75);
}

TEST_CASE("value metric and approx_eq") {
  Value a = Value::pair(Value::real(1.0), Value::tag("up"));
  Value b = Value::pair(Value::real(1.0 + 1e-12), Value::tag("up"));
  Value c = Value::pair(Value::real(1.0), Value::tag("down"));
  CHECK(approx_eq(a, b, 1e-9));
  CHECK_FALSE(approx_eq(a, c, 1e-9));
  CHECK(metric(a, c) == 1.0);
  CHECK(metric(Value::left(Value::real(1)), Value::right(Value::real(1))) ==
        1.0);
  CHECK(std::isinf(metric(Value::real(1), Value::star())));
}
