#include "evo/space.hpp"

#include <algorithm>
#include <cmath>

namespace evo {

Space Space::real(double lo, double hi, std::string label) {
  Space s;
  s.kind_ = Kind::Real;
  s.lo_ = lo;
  s.hi_ = hi;
  s.label_ = std::move(label);
  return s;
}

Space Space::real_with_default(double def, double lo, double hi,
                               std::string label) {
  Space s = real(lo, hi, std::move(label));
  s.real_default_ = def;
  return s;
}

Space Space::unit(std::string label) {
  Space s;
  s.kind_ = Kind::Unit;
  s.label_ = std::move(label);
  return s;
}

Space Space::tags(std::vector<std::string> labels, std::string label) {
  if (labels.empty()) throw space_error("Space::tags: empty label set");
  Space s;
  s.kind_ = Kind::Tags;
  s.tag_labels_ = std::move(labels);
  s.label_ = std::move(label);
  return s;
}

Space Space::prod(Space a, Space b) {
  Space s;
  s.kind_ = Kind::Prod;
  s.a_ = std::make_shared<Space>(std::move(a));
  s.b_ = std::make_shared<Space>(std::move(b));
  return s;
}

Space Space::sum(Space a, Space b) {
  Space s;
  s.kind_ = Kind::Sum;
  s.a_ = std::make_shared<Space>(std::move(a));
  s.b_ = std::make_shared<Space>(std::move(b));
  return s;
}

const Space& Space::first() const {
  if (!a_) throw space_error("Space: no left component in " + str());
  return *a_;
}

const Space& Space::second() const {
  if (!b_) throw space_error("Space: no right component in " + str());
  return *b_;
}

bool Space::matches(const Space& other) const {
  if (is_any() || other.is_any()) return true;
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Real:
    case Kind::Unit:
      return true;
    case Kind::Tags:
      return tag_labels_ == other.tag_labels_;
    case Kind::Prod:
    case Kind::Sum:
      return first().matches(other.first()) && second().matches(other.second());
    case Kind::Any:
      return true;
  }
  return false;
}

bool Space::contains(const Value& v) const {
  switch (kind_) {
    case Kind::Any:
      return true;
    case Kind::Real:
      return v.kind() == Value::Kind::Real && !std::isnan(v.as_real());
    case Kind::Unit:
      return v.kind() == Value::Kind::Star;
    case Kind::Tags:
      return v.kind() == Value::Kind::Tag &&
             std::find(tag_labels_.begin(), tag_labels_.end(), v.tag_label()) !=
                 tag_labels_.end();
    case Kind::Prod:
      return v.kind() == Value::Kind::Pair && first().contains(v.first()) &&
             second().contains(v.second());
    case Kind::Sum:
      if (v.kind() != Value::Kind::Tagged) return false;
      return v.is_left() ? first().contains(v.payload())
                         : second().contains(v.payload());
  }
  return false;
}

Value Space::sample_value(std::mt19937_64& rng) const {
  switch (kind_) {
    case Kind::Real: {
      std::uniform_real_distribution<double> dist(lo_, hi_);
      return Value::real(dist(rng));
    }
    case Kind::Unit:
      return Value::star();
    case Kind::Tags: {
      std::uniform_int_distribution<size_t> dist(0, tag_labels_.size() - 1);
      return Value::tag(tag_labels_[dist(rng)]);
    }
    case Kind::Prod: {
      Value a = first().sample_value(rng);
      Value b = second().sample_value(rng);
      return Value::pair(std::move(a), std::move(b));
    }
    case Kind::Sum: {
      std::uniform_int_distribution<int> coin(0, 1);
      return coin(rng) == 0 ? Value::left(first().sample_value(rng))
                            : Value::right(second().sample_value(rng));
    }
    case Kind::Any:
      throw space_error("Space: cannot sample the wildcard space");
  }
  throw space_error("Space: unreachable");
}

std::optional<Value> Space::default_value() const {
  switch (kind_) {
    case Kind::Real:
      if (real_default_) return Value::real(*real_default_);
      return std::nullopt;
    case Kind::Unit:
      return Value::star();
    case Kind::Tags:
      return Value::tag(tag_labels_.front());
    case Kind::Prod: {
      auto a = first().default_value();
      auto b = second().default_value();
      if (a && b) return Value::pair(*a, *b);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Value Space::complete(const Value& literal) const {
  if (contains(literal)) return literal;
  if (kind_ == Kind::Any) return literal;
  if (kind_ == Kind::Prod) {
    // Elementwise first, then try inserting a leading default coordinate
    // (the usual case: a state component omitted from the input).
    if (literal.kind() == Value::Kind::Pair) {
      try {
        return Value::pair(first().complete(literal.first()),
                           second().complete(literal.second()));
      } catch (const space_error&) {
      }
    }
    if (auto def = first().default_value()) {
      return Value::pair(*def, second().complete(literal));
    }
  }
  throw space_error("input literal " + literal.str() +
                    " does not fit space " + str());
}

std::vector<std::string> Space::coord_names() const {
  switch (kind_) {
    case Kind::Real:
      return {label_.empty() ? "y" : label_};
    case Kind::Unit:
      return {label_.empty() ? "unit" : label_};
    case Kind::Tags:
      return {label_.empty() ? "state" : label_};
    case Kind::Sum:
      return {label_.empty() ? "choice" : label_};
    case Kind::Prod: {
      auto names = first().coord_names();
      auto rest = second().coord_names();
      names.insert(names.end(), rest.begin(), rest.end());
      return names;
    }
    case Kind::Any:
      return {"y"};
  }
  return {};
}

std::string Space::str() const {
  switch (kind_) {
    case Kind::Real:
      return "R";
    case Kind::Unit:
      return "1";
    case Kind::Tags: {
      std::string s = "{";
      for (size_t i = 0; i < tag_labels_.size(); ++i) {
        if (i) s += ",";
        s += tag_labels_[i];
      }
      return s + "}";
    }
    case Kind::Prod:
      return "(" + first().str() + " x " + second().str() + ")";
    case Kind::Sum:
      return "(" + first().str() + " + " + second().str() + ")";
    case Kind::Any:
      return "_";
  }
  return "?";
}

}  // namespace evo
