// Compares the serial reference sweep against the OpenMP one on a
// realistically heavy comparison workload, and checks they agree.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "evo/catalog.hpp"
#include "evo/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace evo;

namespace {

double run_ms(SweepResult (*fn)(const Component&, const Component&,
                                std::span<const Value>, const GridSpec&),
              const Component& c1, const Component& c2,
              std::span<const Value> inputs, const GridSpec& grid,
              SweepResult* out) {
  const auto start = std::chrono::steady_clock::now();
  *out = fn(c1, c2, inputs, grid);
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main() {
  Component ball = make_bouncing_ball(9.8);
  Component lhs = kleisli_compose(iterate(ball, 2), iterate(ball, 2));
  Component rhs = iterate(ball, 4);

  std::mt19937_64 rng(7);
  std::vector<Value> inputs;
  for (int i = 0; i < 128; ++i)
    inputs.push_back(ball.input_space().sample_value(rng));

  GridSpec grid{512, 100.0, 1e-9};

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  SweepResult serial_result, parallel_result;
  const double serial_ms =
      run_ms(sweep_serial, lhs, rhs, inputs, grid, &serial_result);
  const double parallel_ms =
      run_ms(sweep_parallel, lhs, rhs, inputs, grid, &parallel_result);

  const bool agree =
      serial_result.worst_deviation == parallel_result.worst_deviation &&
      serial_result.worst_input == parallel_result.worst_input &&
      serial_result.worst_t == parallel_result.worst_t &&
      serial_result.checked == parallel_result.checked &&
      serial_result.skipped == parallel_result.skipped;

  std::printf("serial:   %8.2f ms  worst=%g at input %d\n", serial_ms,
              serial_result.worst_deviation, serial_result.worst_input);
  std::printf("parallel: %8.2f ms  worst=%g at input %d\n", parallel_ms,
              parallel_result.worst_deviation, parallel_result.worst_input);
  std::printf("speedup:  %.2fx\n", serial_ms / parallel_ms);
  std::printf("results %s\n", agree ? "agree" : "DISAGREE");
  return agree ? 0 : 1;
}
