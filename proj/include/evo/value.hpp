#pragma once

#include <memory>
#include <string>

#include "evo/errors.hpp"

namespace evo {

/// Runtime value: a real number, the singleton element, a finite state
/// label, a pair, or a left/right-tagged payload. Values are immutable.
class Value {
 public:
  enum class Kind { Real, Star, Tag, Pair, Tagged };

  Value() : kind_(Kind::Star) {}

  static Value real(double x) {
    Value v;
    v.kind_ = Kind::Real;
    v.real_ = x;
    return v;
  }
  static Value star() { return Value(); }
  static Value tag(std::string label) {
    Value v;
    v.kind_ = Kind::Tag;
    v.label_ = std::move(label);
    return v;
  }
  static Value pair(Value a, Value b) {
    Value v;
    v.kind_ = Kind::Pair;
    v.a_ = std::make_shared<Value>(std::move(a));
    v.b_ = std::make_shared<Value>(std::move(b));
    return v;
  }
  static Value left(Value payload) {
    Value v;
    v.kind_ = Kind::Tagged;
    v.left_ = true;
    v.a_ = std::make_shared<Value>(std::move(payload));
    return v;
  }
  static Value right(Value payload) {
    Value v;
    v.kind_ = Kind::Tagged;
    v.left_ = false;
    v.a_ = std::make_shared<Value>(std::move(payload));
    return v;
  }

  Kind kind() const { return kind_; }

  double as_real() const {
    require(Kind::Real, "real");
    return real_;
  }
  const std::string& tag_label() const {
    require(Kind::Tag, "tag");
    return label_;
  }
  const Value& first() const {
    require(Kind::Pair, "pair");
    return *a_;
  }
  const Value& second() const {
    require(Kind::Pair, "pair");
    return *b_;
  }
  bool is_left() const {
    require(Kind::Tagged, "tagged");
    return left_;
  }
  const Value& payload() const {
    require(Kind::Tagged, "tagged");
    return *a_;
  }

  /// Human-readable rendering, e.g. "(0.5,(up,*))" or "left:3".
  std::string str() const;

  /// Rendering safe for one CSV cell: composite separators become ';'.
  std::string csv_token(int precision) const;

 private:
  void require(Kind k, const char* what) const {
    if (kind_ != k)
      throw error(std::string("Value: expected ") + what + ", got " + str());
  }

  Kind kind_;
  double real_ = 0.0;
  bool left_ = true;
  std::string label_;
  std::shared_ptr<const Value> a_, b_;
};

/// Sup metric over the value structure: |a-b| on reals, discrete (0/1) on
/// labels and on mismatched sides, max over pair coordinates, +inf when the
/// shapes disagree.
double metric(const Value& a, const Value& b);

/// metric(a, b) <= tol; discrete coordinates must match exactly.
bool approx_eq(const Value& a, const Value& b, double tol);

}  // namespace evo
