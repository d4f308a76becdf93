#include "evo/component.hpp"

namespace evo {

PredynamicalReport is_predynamical(const Component& c,
                                   std::span<const Value> inputs, double tol) {
  PredynamicalReport report;
  for (const Value& x : inputs) {
    const double dev = metric(initial(c(x)), x);
    if (!(dev <= tol)) {
      report.pre_dynamical = false;
      report.violations.push_back({x, dev});
    }
  }
  return report;
}

}  // namespace evo
