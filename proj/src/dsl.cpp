#include "evo/dsl.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "evo/catalog.hpp"

namespace evo::dsl {

namespace {

std::string span_str(SourceSpan s) {
  return std::to_string(s.line) + ":" + std::to_string(s.col);
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (size_t i = 0; i < expected.size(); ++i) {
    if (i) out += ", ";
    out += expected[i];
  }
  return out;
}

}  // namespace

parse_error::parse_error(const std::string& msg, SourceSpan span_,
                         std::vector<std::string> expected_)
    : error(span_str(span_) + ": " + msg +
            (expected_.empty() ? ""
                               : " (expected " + join_expected(expected_) + ")")),
      span(span_),
      expected(std::move(expected_)) {}

elaborate_error::elaborate_error(const std::string& msg, SourceSpan span_,
                                 std::optional<SourceSpan> span2_)
    : error(span_str(span_) +
            (span2_ ? " and " + span_str(*span2_) : std::string()) + ": " + msg),
      span(span_),
      span2(span2_) {}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class Tok {
  Ident,
  Number,
  Dot,
  Comma,
  LParen,
  RParen,
  Equals,
  Semi,
  OpenPair,   // <<
  ClosePair,  // >>
  SyncBox,    // [s]
  ProdBox,    // [x]
  End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Dot: return "'.'";
    case Tok::Comma: return "','";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::Semi: return "';'";
    case Tok::OpenPair: return "'<<'";
    case Tok::ClosePair: return "'>>'";
    case Tok::SyncBox: return "'[s]'";
    case Tok::ProdBox: return "'[x]'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  double number = 0.0;
  SourceSpan span;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { tokenize(); }
  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void tokenize() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        advance();
        ++line_;
        col_ = 1;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
        continue;
      }
      if (c == '-' && peek(1) == '-') {  // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      const SourceSpan start = here();
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string ident;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          ident += src_[pos_];
          advance();
        }
        push(Tok::Ident, ident, 0.0, start);
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c)) ||
          (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1)))) ||
          (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        lex_number(start);
        continue;
      }
      switch (c) {
        case '.': advance(); push(Tok::Dot, ".", 0.0, start); continue;
        case ',': advance(); push(Tok::Comma, ",", 0.0, start); continue;
        case '(': advance(); push(Tok::LParen, "(", 0.0, start); continue;
        case ')': advance(); push(Tok::RParen, ")", 0.0, start); continue;
        case '=': advance(); push(Tok::Equals, "=", 0.0, start); continue;
        case ';': advance(); push(Tok::Semi, ";", 0.0, start); continue;
        case '<':
          if (peek(1) == '<') {
            advance(); advance();
            push(Tok::OpenPair, "<<", 0.0, start);
            continue;
          }
          break;
        case '>':
          if (peek(1) == '>') {
            advance(); advance();
            push(Tok::ClosePair, ">>", 0.0, start);
            continue;
          }
          break;
        case '[':
          if ((peek(1) == 's' || peek(1) == 'x') && peek(2) == ']') {
            const bool is_sync = peek(1) == 's';
            advance(); advance(); advance();
            push(is_sync ? Tok::SyncBox : Tok::ProdBox,
                 is_sync ? "[s]" : "[x]", 0.0, start);
            continue;
          }
          break;
        default:
          break;
      }
      throw parse_error(std::string("unknown character '") + c + "'", start);
    }
    push(Tok::End, "", 0.0, here());
  }

  void lex_number(SourceSpan start) {
    std::string text;
    if (src_[pos_] == '-') {
      text += '-';
      advance();
    }
    bool seen_dot = false;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        text += c;
        advance();
      } else if (c == '.' && !seen_dot &&
                 std::isdigit(static_cast<unsigned char>(peek(1)))) {
        seen_dot = true;
        text += c;
        advance();
      } else {
        break;
      }
    }
    double v = 0.0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || p != text.data() + text.size())
      throw parse_error("malformed number '" + text + "'", start);
    Token t{Tok::Number, text, v, start};
    t.span.end = offset_;
    tokens_.push_back(t);
  }

  char peek(size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    ++pos_;
    ++col_;
    ++offset_;
  }
  SourceSpan here() const { return SourceSpan{line_, col_, offset_, offset_}; }
  void push(Tok kind, std::string text, double num, SourceSpan start) {
    start.end = offset_;
    tokens_.push_back(Token{kind, std::move(text), num, start});
  }

  std::string_view src_;
  size_t pos_ = 0;
  size_t offset_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Token> tokens_;
};

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : lexer_(src) {}

  Program parse_program() {
    Program program;
    // def := ident "=" expr ";"   (distinguished by the '=' lookahead)
    while (at(Tok::Ident) && peek(1).kind == Tok::Equals) {
      Token name = eat(Tok::Ident);
      for (const auto& d : program.defs) {
        if (d.name == name.text)
          throw parse_error("duplicate definition of '" + name.text + "'",
                            name.span);
      }
      eat(Tok::Equals);
      AstPtr body = parse_expr();
      eat(Tok::Semi);
      program.defs.push_back({name.text, body, name.span});
    }
    program.main = parse_expr();
    if (!at(Tok::End))
      throw parse_error("trailing input after expression", current().span,
                        {"end of input"});
    return program;
  }

 private:
  AstPtr parse_expr() { return parse_seq(); }

  AstPtr parse_seq() {
    std::vector<AstPtr> parts{parse_par()};
    while (at(Tok::Dot)) {
      eat(Tok::Dot);
      parts.push_back(parse_par());
    }
    // right-assoc: a . b . c == a . (b . c)
    AstPtr expr = parts.back();
    for (size_t i = parts.size() - 1; i-- > 0;) {
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Seq;
      node->span = parts[i]->span;
      node->a = parts[i];
      node->b = expr;
      expr = node;
    }
    return expr;
  }

  AstPtr parse_par() {
    AstPtr expr = parse_atom();
    while (at(Tok::SyncBox) || at(Tok::ProdBox)) {
      const bool is_sync = at(Tok::SyncBox);
      Token op = eat(current().kind);
      AstPtr rhs = parse_atom();
      auto node = std::make_shared<Node>();
      node->kind = is_sync ? Node::Kind::SyncProd : Node::Kind::StrictProd;
      node->span = op.span;
      node->a = expr;
      node->b = rhs;
      expr = node;
    }
    return expr;
  }

  AstPtr parse_atom() {
    if (at(Tok::LParen)) {
      eat(Tok::LParen);
      AstPtr e = parse_expr();
      eat(Tok::RParen);
      return e;
    }
    if (!at(Tok::Ident))
      throw parse_error("expected an expression", current().span,
                        {"identifier", "'('"});
    Token name = eat(Tok::Ident);

    if (name.text == "pair" && at(Tok::OpenPair)) {
      eat(Tok::OpenPair);
      AstPtr a = parse_expr();
      eat(Tok::Comma);
      AstPtr b = parse_expr();
      eat(Tok::ClosePair);
      return binary(Node::Kind::StrictPair, name.span, a, b);
    }
    if (name.text == "sync" && at(Tok::LParen)) {
      eat(Tok::LParen);
      AstPtr a = parse_expr();
      eat(Tok::Comma);
      AstPtr b = parse_expr();
      eat(Tok::RParen);
      return binary(Node::Kind::SyncPair, name.span, a, b);
    }
    if (name.text == "choice" && at(Tok::LParen)) {
      eat(Tok::LParen);
      AstPtr a = parse_expr();
      eat(Tok::Comma);
      AstPtr b = parse_expr();
      eat(Tok::RParen);
      return binary(Node::Kind::Choice, name.span, a, b);
    }
    if (name.text == "sum" && at(Tok::LParen)) {
      eat(Tok::LParen);
      AstPtr a = parse_expr();
      eat(Tok::Comma);
      AstPtr b = parse_expr();
      eat(Tok::RParen);
      return binary(Node::Kind::Sum, name.span, a, b);
    }
    if (name.text == "lift") {
      eat(Tok::LParen);
      Token fn = eat(Tok::Ident);
      eat(Tok::RParen);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Lift;
      node->span = name.span;
      node->name = fn.text;
      return node;
    }
    if (name.text == "iterate") {
      eat(Tok::LParen);
      AstPtr a = parse_expr();
      eat(Tok::Comma);
      Token n = eat(Tok::Number);
      eat(Tok::RParen);
      if (n.number < 0 || n.number != std::floor(n.number))
        throw parse_error("iteration count must be a non-negative integer",
                          n.span);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Iterate;
      node->span = name.span;
      node->a = a;
      node->count = static_cast<long>(n.number);
      return node;
    }
    if (name.text == "feedback") {
      eat(Tok::LParen);
      AstPtr a = parse_expr();
      eat(Tok::RParen);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Feedback;
      node->span = name.span;
      node->a = a;
      return node;
    }
    if (name.text == "delay") {
      eat(Tok::LParen);
      const double d = parse_number_or_inf();
      eat(Tok::RParen);
      if (d < 0)
        throw parse_error("delay must be non-negative", name.span);
      auto node = std::make_shared<Node>();
      node->kind = Node::Kind::Delay;
      node->span = name.span;
      node->delay = d;
      return node;
    }

    auto node = std::make_shared<Node>();
    node->kind = Node::Kind::Prim;
    node->span = name.span;
    node->name = name.text;
    if (at(Tok::LParen)) {
      eat(Tok::LParen);
      node->args.push_back(parse_number_or_inf());
      while (at(Tok::Comma)) {
        eat(Tok::Comma);
        node->args.push_back(parse_number_or_inf());
      }
      eat(Tok::RParen);
    }
    return node;
  }

  double parse_number_or_inf() {
    if (at(Tok::Ident) && current().text == "inf") {
      eat(Tok::Ident);
      return std::numeric_limits<double>::infinity();
    }
    if (!at(Tok::Number))
      throw parse_error("expected a numeric argument", current().span,
                        {"number", "'inf'"});
    return eat(Tok::Number).number;
  }

  static AstPtr binary(Node::Kind kind, SourceSpan span, AstPtr a, AstPtr b) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->span = span;
    node->a = std::move(a);
    node->b = std::move(b);
    return node;
  }

  const Token& current() const { return lexer_.tokens()[index_]; }
  const Token& peek(size_t ahead) const {
    const auto& toks = lexer_.tokens();
    return toks[std::min(index_ + ahead, toks.size() - 1)];
  }
  bool at(Tok kind) const { return current().kind == kind; }
  Token eat(Tok kind) {
    if (!at(kind))
      throw parse_error(std::string("unexpected ") + tok_name(current().kind) +
                            (current().text.empty() ? ""
                                                    : " '" + current().text + "'"),
                        current().span, {tok_name(kind)});
    return lexer_.tokens()[index_++];
  }

  Lexer lexer_;
  size_t index_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

std::string format_number(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

// precedence levels: 0 = seq, 1 = par chain, 2 = atom
int node_level(const Node& n) {
  switch (n.kind) {
    case Node::Kind::Seq:
      return 0;
    case Node::Kind::SyncProd:
    case Node::Kind::StrictProd:
      return 1;
    default:
      return 2;
  }
}

std::string print_node(const AstPtr& e, int min_level) {
  const Node& n = *e;
  std::string out;
  switch (n.kind) {
    case Node::Kind::Prim:
      out = n.name;
      if (!n.args.empty()) {
        out += "(";
        for (size_t i = 0; i < n.args.size(); ++i) {
          if (i) out += ", ";
          out += format_number(n.args[i]);
        }
        out += ")";
      }
      break;
    case Node::Kind::Seq:
      // right operand may itself be a seq chain; a left seq needs parens
      out = print_node(n.a, 1) + " . " + print_node(n.b, 0);
      break;
    case Node::Kind::SyncProd:
      out = print_node(n.a, 1) + " [s] " + print_node(n.b, 2);
      break;
    case Node::Kind::StrictProd:
      out = print_node(n.a, 1) + " [x] " + print_node(n.b, 2);
      break;
    case Node::Kind::Choice:
      out = "choice(" + print_node(n.a, 0) + ", " + print_node(n.b, 0) + ")";
      break;
    case Node::Kind::Sum:
      out = "sum(" + print_node(n.a, 0) + ", " + print_node(n.b, 0) + ")";
      break;
    case Node::Kind::StrictPair:
      out = "pair<<" + print_node(n.a, 0) + ", " + print_node(n.b, 0) + ">>";
      break;
    case Node::Kind::SyncPair:
      out = "sync(" + print_node(n.a, 0) + ", " + print_node(n.b, 0) + ")";
      break;
    case Node::Kind::Lift:
      out = "lift(" + n.name + ")";
      break;
    case Node::Kind::Iterate:
      out = "iterate(" + print_node(n.a, 0) + ", " + std::to_string(n.count) +
            ")";
      break;
    case Node::Kind::Feedback:
      out = "feedback(" + print_node(n.a, 0) + ")";
      break;
    case Node::Kind::Delay:
      out = "delay(" + format_number(n.delay) + ")";
      break;
  }
  if (node_level(n) < min_level) out = "(" + out + ")";
  return out;
}

}  // namespace

Program parse(std::string_view source) {
  return Parser(source).parse_program();
}

std::string print_expr(const AstPtr& expr) { return print_node(expr, 0); }

std::string print(const Program& program) {
  std::string out;
  for (const auto& def : program.defs)
    out += def.name + " = " + print_expr(def.body) + ";\n";
  out += print_expr(program.main) + "\n";
  return out;
}

bool ast_equal(const AstPtr& x, const AstPtr& y) {
  if (!x || !y) return x == y;
  const Node& a = *x;
  const Node& b = *y;
  if (a.kind != b.kind || a.name != b.name || a.args != b.args ||
      a.count != b.count)
    return false;
  if (a.kind == Node::Kind::Delay &&
      !(a.delay == b.delay || (std::isinf(a.delay) && std::isinf(b.delay))))
    return false;
  return ast_equal(a.a, b.a) && ast_equal(a.b, b.b);
}

bool program_equal(const Program& x, const Program& y) {
  if (x.defs.size() != y.defs.size()) return false;
  for (size_t i = 0; i < x.defs.size(); ++i) {
    if (x.defs[i].name != y.defs[i].name ||
        !ast_equal(x.defs[i].body, y.defs[i].body))
      return false;
  }
  return ast_equal(x.main, y.main);
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

struct Env {
  std::map<std::string, Component> defs;
  const ElabConfig* cfg;
};

Component elab(const AstPtr& e, const Env& env);

Component elab_seq(const Node& n, const Env& env) {
  Component after = elab(n.a, env);
  Component first = elab(n.b, env);
  if (!first.output_space().matches(after.input_space())) {
    throw elaborate_error("cannot sequence: left operand expects " +
                              after.input_space().str() +
                              " but right operand outputs " +
                              first.output_space().str(),
                          n.a->span, n.b->span);
  }
  return kleisli_compose(after, first);
}

Component elab(const AstPtr& e, const Env& env) {
  const Node& n = *e;
  switch (n.kind) {
    case Node::Kind::Prim: {
      if (auto it = env.defs.find(n.name); it != env.defs.end()) {
        if (!n.args.empty())
          throw elaborate_error("defined name '" + n.name +
                                    "' takes no arguments",
                                n.span);
        return it->second;
      }
      const Primitive* prim = Catalog::instance().find(n.name);
      if (!prim)
        throw elaborate_error("unknown primitive '" + n.name + "'", n.span);
      try {
        return Catalog::instance().make(n.name, n.args);
      } catch (const error& err) {
        throw elaborate_error(err.what(), n.span);
      }
    }
    case Node::Kind::Seq:
      return elab_seq(n, env);
    case Node::Kind::Choice: {
      Component c1 = elab(n.a, env);
      Component c2 = elab(n.b, env);
      if (!c1.output_space().matches(c2.output_space()))
        throw elaborate_error("choice operands must share an output space: " +
                                  c1.output_space().str() + " vs " +
                                  c2.output_space().str(),
                              n.a->span, n.b->span);
      return choice(c1, c2);
    }
    case Node::Kind::Sum:
      return sum(elab(n.a, env), elab(n.b, env));
    case Node::Kind::StrictPair: {
      Component c1 = elab(n.a, env);
      Component c2 = elab(n.b, env);
      if (!c1.input_space().matches(c2.input_space()))
        throw elaborate_error("pair operands must share an input space: " +
                                  c1.input_space().str() + " vs " +
                                  c2.input_space().str(),
                              n.a->span, n.b->span);
      return strict_pair(c1, c2);
    }
    case Node::Kind::StrictProd:
      return strict_product(elab(n.a, env), elab(n.b, env));
    case Node::Kind::SyncPair: {
      Component c1 = elab(n.a, env);
      Component c2 = elab(n.b, env);
      if (!c1.input_space().matches(c2.input_space()))
        throw elaborate_error("sync operands must share an input space: " +
                                  c1.input_space().str() + " vs " +
                                  c2.input_space().str(),
                              n.a->span, n.b->span);
      return sync_pair(c1, c2);
    }
    case Node::Kind::SyncProd:
      return sync_product(elab(n.a, env), elab(n.b, env));
    case Node::Kind::Lift: {
      const NamedFunction* fn = Catalog::instance().find_function(n.name);
      if (!fn)
        throw elaborate_error("unknown function '" + n.name + "' in lift",
                              n.span);
      return lift(fn->fn, fn->in, fn->out);
    }
    case Node::Kind::Iterate: {
      Component c = elab(n.a, env);
      if (!c.input_space().matches(c.output_space()))
        throw elaborate_error(
            "iterate needs an endo component, got " + c.input_space().str() +
                " -> " + c.output_space().str(),
            n.a->span);
      return iterate(c, static_cast<int>(n.count));
    }
    case Node::Kind::Feedback: {
      Component c = elab(n.a, env);
      if (!c.input_space().matches(c.output_space()))
        throw elaborate_error(
            "feedback needs an endo component, got " + c.input_space().str() +
                " -> " + c.output_space().str(),
            n.a->span);
      try {
        return feedback(c, env.cfg->feedback);
      } catch (const error& err) {
        throw elaborate_error(err.what(), n.span);
      }
    }
    case Node::Kind::Delay:
      return copy_delay(Duration(n.delay));
  }
  throw elaborate_error("unreachable node kind", n.span);
}

}  // namespace

Component elaborate(const Program& program, const ElabConfig& cfg) {
  Env env;
  env.cfg = &cfg;
  for (const auto& def : program.defs)
    env.defs.emplace(def.name, elab(def.body, env));
  return elab(program.main, env);
}

}  // namespace evo::dsl
