#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "evo/catalog.hpp"
#include "evo/dsl.hpp"
#include "evo/laws.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLawFailure = 1;
constexpr int kExitSpecError = 2;
constexpr int kExitRuntimeError = 3;

// ---------------------------------------------------------------------------
// Input literals: number | * | label | left(lit) | right(lit) | (lit, lit, ...)
// n-tuples fold to the right: (a,b,c) reads as (a,(b,c)).

class LiteralParser {
 public:
  explicit LiteralParser(const std::string& text) : text_(text) {}

  evo::Value parse() {
    evo::Value v = parse_lit();
    skip_ws();
    if (pos_ != text_.size())
      throw evo::error("trailing characters in input literal: '" +
                       text_.substr(pos_) + "'");
    return v;
  }

 private:
  evo::Value parse_lit() {
    skip_ws();
    if (pos_ >= text_.size()) throw evo::error("empty input literal");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      std::vector<evo::Value> items{parse_lit()};
      skip_ws();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        items.push_back(parse_lit());
        skip_ws();
      }
      expect(')');
      evo::Value v = items.back();
      for (size_t i = items.size() - 1; i-- > 0;)
        v = evo::Value::pair(items[i], v);
      return v;
    }
    if (c == '*') {
      ++pos_;
      return evo::Value::star();
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' ||
        c == '.') {
      size_t used = 0;
      double v = std::stod(text_.substr(pos_), &used);
      pos_ += used;
      return evo::Value::real(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        word += text_[pos_++];
      }
      if (word == "left" || word == "right") {
        expect('(');
        evo::Value payload = parse_lit();
        skip_ws();
        expect(')');
        return word == "left" ? evo::Value::left(payload)
                              : evo::Value::right(payload);
      }
      if (word == "star") return evo::Value::star();
      return evo::Value::tag(word);
    }
    throw evo::error(std::string("unexpected character '") + c +
                     "' in input literal");
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw evo::error(std::string("expected '") + c + "' in input literal");
    ++pos_;
  }
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw evo::error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void flatten_cells(const evo::Value& v, int precision,
                   std::vector<std::string>& out) {
  if (v.kind() == evo::Value::Kind::Pair) {
    flatten_cells(v.first(), precision, out);
    flatten_cells(v.second(), precision, out);
    return;
  }
  out.push_back(v.csv_token(precision));
}

std::string format_fixed(double v, int precision) {
  if (std::isinf(v)) return "inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", precision, v);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("EVOMONAD_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      std::cerr << "warning: ignoring malformed EVOMONAD_SEED\n";
    }
  }
  return 42;
}

// ---------------------------------------------------------------------------

struct SimulateOptions {
  std::string spec_path;
  std::string input;
  double step = 0.5;
  double horizon = 100.0;
  int precision = 6;
  bool with_duration = false;
  bool waive_predynamic = false;
};

int run_simulate(const SimulateOptions& opt) {
  evo::Component component;
  try {
    evo::dsl::Program program = evo::dsl::parse(read_file(opt.spec_path));
    evo::dsl::ElabConfig cfg;
    cfg.feedback.allow_non_predynamical = opt.waive_predynamic;
    component = evo::dsl::elaborate(program, cfg);
  } catch (const evo::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }

  evo::Value input;
  try {
    evo::Value literal = LiteralParser(opt.input).parse();
    input = component.input_space().complete(literal);
  } catch (const evo::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }

  try {
    evo::Evo ev = component(input);
    const evo::Duration dur = ev.duration();
    const double limit = std::min(
        dur.is_finite() ? dur.value() : opt.horizon, opt.horizon);

    std::ostringstream header;
    header << "t";
    for (const auto& name : component.output_space().coord_names())
      header << "," << name;
    if (opt.with_duration) header << ",duration";
    std::cout << header.str() << "\n";

    const double eps = opt.step * 1e-9;
    std::string dur_cell =
        dur.is_infinite() ? "inf" : format_fixed(dur.value(), opt.precision);
    double last_emitted = -1.0;
    auto emit = [&](double t) {
      std::vector<std::string> cells;
      flatten_cells(ev.at(t), opt.precision, cells);
      std::cout << format_fixed(t, opt.precision);
      for (const auto& cell : cells) std::cout << "," << cell;
      if (opt.with_duration) std::cout << "," << dur_cell;
      std::cout << "\n";
      last_emitted = t;
    };
    for (long k = 0;; ++k) {
      const double t = static_cast<double>(k) * opt.step;
      if (t > limit + eps) break;
      emit(t);
    }
    if (dur.is_finite() && dur.value() <= opt.horizon + eps &&
        dur.value() > last_emitted + eps) {
      emit(dur.value());
    }
    return kExitOk;
  } catch (const evo::compatibility_error& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntimeError;
  } catch (const evo::nonconvergent_error& e) {
    std::cerr << "runtime error: " << e.what()
              << " (partial duration sum " << e.partial_sum << ")\n";
    return kExitRuntimeError;
  } catch (const evo::error& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}

struct CheckOptions {
  std::string only;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  int inputs = 64;
  int grid = 256;
  double horizon = 100.0;
  bool json = false;
};

int run_check(const CheckOptions& opt) {
  evo::EqConfig cfg;
  cfg.seed = opt.seed;
  cfg.tol = opt.tol;
  cfg.input_samples = opt.inputs;
  cfg.time_grid = opt.grid;
  cfg.horizon = opt.horizon;
  std::vector<evo::LawReport> reports;
  try {
    reports = evo::run_law_suite(cfg, opt.only);
  } catch (const evo::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
  bool all_pass = true;
  for (const auto& r : reports) all_pass = all_pass && r.passed();
  if (opt.json) {
    std::cout << evo::law_reports_json(reports) << "\n";
  } else {
    size_t passed = 0;
    for (const auto& r : reports) {
      std::cout << r.line() << "\n";
      if (r.passed()) ++passed;
    }
    std::cout << passed << "/" << reports.size() << " laws passed (seed "
              << opt.seed << ", tol " << opt.tol << ")\n";
  }
  return all_pass ? kExitOk : kExitLawFailure;
}

int run_list() {
  const auto& catalog = evo::Catalog::instance();
  std::cout << "primitives:\n";
  for (const auto& p : catalog.primitives()) {
    std::cout << "  " << p.name;
    if (!p.params.empty()) std::cout << " " << p.params;
    std::cout << " -- " << p.summary << "\n";
  }
  std::cout << "functions (for lift):\n";
  for (const auto& f : catalog.functions()) {
    std::cout << "  " << f.name << " : " << f.in.str() << " -> "
              << f.out.str() << " -- " << f.summary << "\n";
  }
  std::cout << "operators: a . b, a [s] b, a [x] b, pair<<a, b>>, "
               "sync(a, b), choice(a, b), sum(a, b), lift(f), "
               "iterate(a, n), feedback(a), delay(d)\n";
  return kExitOk;
}

int run_parse(const std::string& path) {
  try {
    evo::dsl::Program program = evo::dsl::parse(read_file(path));
    evo::dsl::elaborate(program);
    std::cout << evo::dsl::print(program);
    return kExitOk;
  } catch (const evo::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSpecError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"evomonad: compose and simulate timed-trajectory components"};
  app.require_subcommand(1);

  SimulateOptions sim;
  auto* simulate =
      app.add_subcommand("simulate", "sample a wiring spec as CSV");
  simulate->add_option("spec", sim.spec_path, "wiring file")->required();
  simulate->add_option("--input", sim.input, "input literal")->required();
  simulate->add_option("--step", sim.step, "sample spacing")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--horizon", sim.horizon,
                       "cap for infinite durations")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--precision", sim.precision, "decimal places")
      ->check(CLI::NonNegativeNumber);
  simulate->add_flag("--with-duration", sim.with_duration,
                     "append a duration column");
  simulate->add_flag("--waive-predynamic", sim.waive_predynamic,
                     "allow feedback on non-pre-dynamical components");

  CheckOptions chk;
  chk.seed = default_seed();
  auto* check = app.add_subcommand("check", "run the law suite");
  check->add_option("--only", chk.only, "law id prefix filter");
  check->add_option("--seed", chk.seed, "sampling seed");
  check->add_option("--tol", chk.tol, "tolerance");
  check->add_option("--inputs", chk.inputs, "inputs per law");
  check->add_option("--grid", chk.grid, "time grid points");
  check->add_option("--horizon", chk.horizon, "time horizon");
  check->add_flag("--json", chk.json, "JSON report");

  auto* list = app.add_subcommand("list", "list catalog primitives");

  std::string parse_path;
  auto* parse = app.add_subcommand("parse", "validate a wiring spec");
  parse->add_option("spec", parse_path, "wiring file")->required();

  CLI11_PARSE(app, argc, argv);

  if (simulate->parsed()) return run_simulate(sim);
  if (check->parsed()) return run_check(chk);
  if (list->parsed()) return run_list();
  if (parse->parsed()) return run_parse(parse_path);
  return kExitOk;
}
