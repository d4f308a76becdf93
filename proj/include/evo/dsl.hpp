#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "evo/combinators.hpp"

namespace evo::dsl {

struct SourceSpan {
  int line = 1;
  int col = 1;
  size_t begin = 0;
  size_t end = 0;
};

struct Node;
using AstPtr = std::shared_ptr<const Node>;

/// Wiring expression tree. `a . b` sequences b first, then a, mirroring
/// composition order; [s] and [x] are the synchronised and strict products.
struct Node {
  enum class Kind {
    Prim,        // name(args...)
    Seq,         // a . b
    Choice,      // choice(a, b)
    Sum,         // sum(a, b)
    StrictPair,  // pair<<a, b>>
    StrictProd,  // a [x] b
    SyncPair,    // sync(a, b)
    SyncProd,    // a [s] b
    Lift,        // lift(fn)
    Iterate,     // iterate(a, n)
    Feedback,    // feedback(a)
    Delay,       // delay(d)
  };

  Kind kind{};
  SourceSpan span;
  std::string name;          // Prim, Lift
  std::vector<double> args;  // Prim (may contain inf)
  AstPtr a, b;
  long count = 0;      // Iterate
  double delay = 0.0;  // Delay (may be inf)
};

struct Program {
  struct Def {
    std::string name;
    AstPtr body;
    SourceSpan span;
  };
  std::vector<Def> defs;
  AstPtr main;
};

struct parse_error : error {
  parse_error(const std::string& msg, SourceSpan span,
              std::vector<std::string> expected = {});
  SourceSpan span;
  std::vector<std::string> expected;
};

struct elaborate_error : error {
  elaborate_error(const std::string& msg, SourceSpan span,
                  std::optional<SourceSpan> span2 = std::nullopt);
  SourceSpan span;
  std::optional<SourceSpan> span2;
};

/// Parse a wiring program: zero or more `name = expr;` definitions followed
/// by one expression. "--" comments run to end of line.
Program parse(std::string_view source);

/// Canonical formatting; parse(print(parse(s))) == parse(s).
std::string print(const Program& program);
std::string print_expr(const AstPtr& expr);

bool ast_equal(const AstPtr& x, const AstPtr& y);
bool program_equal(const Program& x, const Program& y);

struct ElabConfig {
  FeedbackConfig feedback;
};

/// Resolve names against the catalog (and local definitions) and build the
/// component tree. Space checking is structural; mismatches report the
/// spans of both offending operands.
Component elaborate(const Program& program, const ElabConfig& cfg = {});

}  // namespace evo::dsl
