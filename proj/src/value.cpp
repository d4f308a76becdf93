#include "evo/value.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

namespace evo {

namespace {

std::string format_real(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, x);
  return buf;
}

std::string render(const Value& v, bool csv, int precision) {
  switch (v.kind()) {
    case Value::Kind::Real:
      return csv ? format_real(v.as_real(), precision)
                 : format_real(v.as_real(), 6);
    case Value::Kind::Star:
      return "*";
    case Value::Kind::Tag:
      return v.tag_label();
    case Value::Kind::Pair: {
      const char* sep = csv ? ";" : ",";
      return "(" + render(v.first(), csv, precision) + sep +
             render(v.second(), csv, precision) + ")";
    }
    case Value::Kind::Tagged:
      return std::string(v.is_left() ? "left:" : "right:") +
             render(v.payload(), csv, precision);
  }
  return "?";
}

}  // namespace

std::string Value::str() const { return render(*this, false, 6); }

std::string Value::csv_token(int precision) const {
  return render(*this, true, precision);
}

double metric(const Value& a, const Value& b) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (a.kind() != b.kind()) return kInf;
  switch (a.kind()) {
    case Value::Kind::Real: {
      const double d = std::fabs(a.as_real() - b.as_real());
      return std::isnan(d) ? kInf : d;
    }
    case Value::Kind::Star:
      return 0.0;
    case Value::Kind::Tag:
      return a.tag_label() == b.tag_label() ? 0.0 : 1.0;
    case Value::Kind::Pair:
      return std::max(metric(a.first(), b.first()),
                      metric(a.second(), b.second()));
    case Value::Kind::Tagged:
      if (a.is_left() != b.is_left()) return 1.0;
      return metric(a.payload(), b.payload());
  }
  return kInf;
}

bool approx_eq(const Value& a, const Value& b, double tol) {
  return metric(a, b) <= tol;
}

}  // namespace evo
