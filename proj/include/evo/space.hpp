#pragma once

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "evo/value.hpp"

namespace evo {

struct space_error : error {
  explicit space_error(const std::string& what) : error(what) {}
};

/// Descriptor of a value space: reals (with sampling bounds), the singleton
/// space, a finite label set, and binary products and sums of spaces. `any`
/// is the wildcard used by duration-polymorphic primitives such as delay;
/// it matches every space. Labels name CSV columns; a default element, when
/// present, lets the CLI complete partial input literals (state coordinates
/// in particular).
class Space {
 public:
  enum class Kind { Real, Unit, Tags, Prod, Sum, Any };

  Space() : kind_(Kind::Any) {}

  static Space real(double lo = -10.0, double hi = 10.0,
                    std::string label = "");
  static Space real_with_default(double def, double lo, double hi,
                                 std::string label);
  static Space unit(std::string label = "");
  static Space tags(std::vector<std::string> labels, std::string label = "");
  static Space prod(Space a, Space b);
  static Space sum(Space a, Space b);
  static Space any() { return Space(); }

  Kind kind() const { return kind_; }
  bool is_any() const { return kind_ == Kind::Any; }
  const Space& first() const;
  const Space& second() const;
  const std::vector<std::string>& labels() const { return tag_labels_; }

  /// Structural compatibility; `any` matches everything, real bounds are
  /// sampling hints and do not participate.
  bool matches(const Space& other) const;

  /// Pick the more concrete of two matching spaces.
  const Space& resolve(const Space& other) const {
    return is_any() ? other : *this;
  }

  bool contains(const Value& v) const;

  /// Uniform sample; throws for `any`.
  Value sample_value(std::mt19937_64& rng) const;
  bool sampleable() const { return kind_ != Kind::Any; }

  /// Canonical element used to complete partial input literals, when one
  /// exists (tags: first label; unit: *; reals only if declared).
  std::optional<Value> default_value() const;

  /// Complete a literal against this space, inserting leading defaults
  /// where coordinates were omitted. Throws space_error when impossible.
  Value complete(const Value& literal) const;

  /// Flattened coordinate names for CSV headers.
  std::vector<std::string> coord_names() const;

  std::string str() const;

 private:
  Kind kind_;
  double lo_ = -10.0, hi_ = 10.0;
  std::optional<double> real_default_;
  std::string label_;
  std::vector<std::string> tag_labels_;
  std::shared_ptr<const Space> a_, b_;
};

}  // namespace evo
