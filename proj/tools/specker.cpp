// Command-line front end over the C interface.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "specker/specker.h"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Failure {
  int code;
  std::string message;
};

template <class T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using AlgebraH = std::unique_ptr<specker_algebra, Deleter<specker_algebra, specker_algebra_free>>;
using ElementH = std::unique_ptr<specker_element, Deleter<specker_element, specker_element_free>>;
using ProximityH = std::unique_ptr<specker_proximity, Deleter<specker_proximity, specker_proximity_free>>;
using MorphismH = std::unique_ptr<specker_morphism, Deleter<specker_morphism, specker_morphism_free>>;
using ReportH = std::unique_ptr<specker_report, Deleter<specker_report, specker_report_free>>;

void check(specker_status status) {
  if (status == SPECKER_OK) return;
  // A failed internal cross-check is a verification failure, anything else is bad input.
  int code = status == SPECKER_ERR_INTERNAL ? exit_failed : exit_usage;
  throw Failure{code, std::string(specker_status_name(status)) + ": " + specker_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  specker_string_free(s);
  return out;
}

// A file path if one exists, otherwise the argument itself.
std::string file_or_inline(const std::string& arg) {
  std::ifstream in(arg);
  if (!in) {
    if (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0) {
      throw Failure{exit_usage, "cannot read " + arg};
    }
    return arg;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Options {
  std::string algebra;
  std::string proximity = "leq";
  std::string morphism;
  std::string expr;
  std::string to;
  std::vector<std::string> elements;
  std::size_t samples = 200;
  long coeff_bound = 10;
  std::uint64_t seed = 0;
  bool json = false;

  specker_sample_config config() const { return {samples, coeff_bound, seed}; }
};

AlgebraH load_algebra(const Options& o) {
  if (o.algebra.empty()) throw Failure{exit_usage, "--algebra is required"};
  specker_algebra* a = nullptr;
  check(specker_algebra_from_json(file_or_inline(o.algebra).c_str(), &a));
  return AlgebraH(a);
}

ElementH load_element(const specker_algebra* alg, const std::string& arg) {
  specker_element* e = nullptr;
  check(specker_element_from_json(alg, file_or_inline(arg).c_str(), &e));
  return ElementH(e);
}

ProximityH load_proximity(const specker_algebra* alg, const Options& o) {
  specker_proximity* p = nullptr;
  check(specker_proximity_from_json(alg, file_or_inline(o.proximity).c_str(), &p));
  return ProximityH(p);
}

MorphismH load_morphism(const std::string& arg) {
  specker_morphism* m = nullptr;
  check(specker_morphism_from_json(file_or_inline(arg).c_str(), &m));
  return MorphismH(m);
}

void need_elements(const Options& o, std::size_t n) {
  if (o.elements.size() != n) {
    throw Failure{exit_usage, "expected " + std::to_string(n) + " element argument(s), got " +
                                  std::to_string(o.elements.size())};
  }
}

void print_element(const specker_element* e, bool json) {
  char* s = nullptr;
  check(json ? specker_element_to_json(e, &s) : specker_element_to_text(e, &s));
  std::cout << take(s) << "\n";
}

// Prints a verification report and returns the exit status it implies.
int print_report(const specker_report* r, const Options& o, bool sampled) {
  char* s = nullptr;
  if (o.json) {
    check(specker_report_to_json(r, &s));
    std::cout << take(s) << "\n";
  } else {
    check(specker_report_summary(r, &s));
    std::cout << take(s) << "\n";
    if (sampled) std::cout << "seed " << o.seed << ", " << o.samples << " samples, bound " << o.coeff_bound << "\n";
  }
  return specker_report_passed(r) ? exit_ok : exit_failed;
}

ElementH element_from_args(const specker_algebra* alg, const Options& o) {
  if (!o.expr.empty()) {
    specker_element* e = nullptr;
    check(specker_element_from_expr(alg, o.expr.c_str(), &e));
    return ElementH(e);
  }
  need_elements(o, 1);
  return load_element(alg, o.elements[0]);
}

int cmd_normalize(const Options& o) {
  auto alg = load_algebra(o);
  auto e = element_from_args(alg.get(), o);
  specker_element* perp = nullptr;
  check(specker_element_convert(e.get(), SPECKER_REP_PERP, &perp));
  ElementH out(perp);
  print_element(out.get(), o.json);
  return exit_ok;
}

int cmd_eval(const Options& o) {
  auto alg = load_algebra(o);
  auto e = element_from_args(alg.get(), o);
  char* s = nullptr;
  check(specker_element_pointwise(e.get(), &s));
  std::cout << take(s) << "\n";
  return exit_ok;
}

int cmd_convert(const Options& o) {
  auto alg = load_algebra(o);
  auto e = element_from_args(alg.get(), o);
  specker_rep rep{};
  check(specker_element_rep(e.get(), &rep));
  specker_rep target = rep == SPECKER_REP_PERP ? SPECKER_REP_FLAT : SPECKER_REP_PERP;
  if (o.to == "perp") target = SPECKER_REP_PERP;
  else if (o.to == "flat") target = SPECKER_REP_FLAT;
  else if (!o.to.empty()) throw Failure{exit_usage, "--to must be perp or flat"};
  specker_element* out = nullptr;
  check(specker_element_convert(e.get(), target, &out));
  ElementH h(out);
  print_element(h.get(), o.json);
  return exit_ok;
}

int cmd_order(const Options& o) {
  auto alg = load_algebra(o);
  need_elements(o, 2);
  auto a = load_element(alg.get(), o.elements[0]);
  auto b = load_element(alg.get(), o.elements[1]);
  specker_order order{};
  check(specker_element_compare(a.get(), b.get(), &order));
  static const char* names[] = {"EQUAL", "LEQ", "GEQ", "INCOMPARABLE"};
  std::cout << names[order] << "\n";
  return exit_ok;
}

int cmd_lattice(const Options& o, specker_binop op) {
  auto alg = load_algebra(o);
  need_elements(o, 2);
  auto a = load_element(alg.get(), o.elements[0]);
  auto b = load_element(alg.get(), o.elements[1]);
  specker_element* out = nullptr;
  check(specker_element_binary(op, a.get(), b.get(), &out));
  ElementH h(out);
  print_element(h.get(), o.json);
  return exit_ok;
}

int cmd_check_devries(const Options& o) {
  auto alg = load_algebra(o);
  auto rel = load_proximity(alg.get(), o);
  specker_report* r = nullptr;
  check(specker_proximity_check(rel.get(), &r));
  ReportH h(r);
  return print_report(h.get(), o, false);
}

int cmd_enumerate_devries(const Options& o) {
  auto alg = load_algebra(o);
  std::size_t count = 0;
  char* s = nullptr;
  check(specker_proximity_enumerate(alg.get(), &count, &s));
  std::string json = take(s);
  if (o.json) {
    std::cout << json << "\n";
  } else {
    std::cout << count << " de Vries proximit" << (count == 1 ? "y" : "ies") << "\n" << json << "\n";
  }
  return exit_ok;
}

int cmd_lift(const Options& o) {
  if (!o.morphism.empty()) {
    auto m = load_morphism(o.morphism);
    // Elements are read over the morphism's source algebra.
    specker_algebra* a = nullptr;
    check(specker_morphism_source(m.get(), &a));
    AlgebraH alg(a);
    auto e = element_from_args(alg.get(), o);
    specker_element* out = nullptr;
    check(specker_morphism_apply(m.get(), e.get(), &out));
    ElementH h(out);
    print_element(h.get(), o.json);
    return exit_ok;
  }
  auto alg = load_algebra(o);
  auto rel = load_proximity(alg.get(), o);
  need_elements(o, 2);
  auto s = load_element(alg.get(), o.elements[0]);
  auto t = load_element(alg.get(), o.elements[1]);
  int related = 0;
  check(specker_proximity_lift_check(rel.get(), s.get(), t.get(), &related));
  std::cout << (related ? "RELATED" : "NOT RELATED") << "\n";
  return exit_ok;
}

int cmd_check_prox(const Options& o) {
  auto alg = load_algebra(o);
  auto rel = load_proximity(alg.get(), o);
  specker_report* r = nullptr;
  check(specker_proximity_sample(rel.get(), o.config(), &r));
  ReportH h(r);
  return print_report(h.get(), o, true);
}

int cmd_check_morphism(const Options& o) {
  if (o.morphism.empty()) throw Failure{exit_usage, "--morphism is required"};
  auto m = load_morphism(o.morphism);
  specker_report* r = nullptr;
  check(specker_morphism_check(m.get(), &r));
  ReportH base(r);
  int status = print_report(base.get(), o, false);
  if (status != exit_ok) return status;
  check(specker_morphism_check_lift(m.get(), o.config(), &r));
  ReportH lifted(r);
  return print_report(lifted.get(), o, true);
}

int cmd_compose(const Options& o) {
  if (o.elements.size() != 2) throw Failure{exit_usage, "compose takes two morphism files: FIRST SECOND"};
  auto first = load_morphism(o.elements[0]);
  auto second = load_morphism(o.elements[1]);
  specker_morphism* out = nullptr;
  check(specker_morphism_compose(second.get(), first.get(), &out));
  MorphismH h(out);
  char* s = nullptr;
  check(specker_morphism_to_json(h.get(), &s));
  std::cout << take(s) << "\n";
  return exit_ok;
}

int cmd_equiv_check(const Options& o) {
  if (!o.morphism.empty()) {
    auto m = load_morphism(o.morphism);
    specker_report* r = nullptr;
    check(specker_morphism_naturality(m.get(), o.config(), &r));
    ReportH h(r);
    return print_report(h.get(), o, true);
  }
  auto alg = load_algebra(o);
  auto rel = load_proximity(alg.get(), o);
  specker_report* r = nullptr;
  check(specker_equivalence_check(rel.get(), o.config(), &r));
  ReportH h(r);
  return print_report(h.get(), o, true);
}

int cmd_oracle_diff(const Options& o) {
  auto alg = load_algebra(o);
  int passed = 0;
  char* s = nullptr;
  check(specker_oracle_diff(alg.get(), o.config(), &passed, &s));
  std::string jsonl = take(s);
  if (o.json) {
    std::cout << jsonl;
  } else {
    std::size_t records = 0, failures = 0;
    std::istringstream lines(jsonl);
    std::string first_failure;
    for (std::string line; std::getline(lines, line);) {
      ++records;
      if (line.find("\"status\":\"fail\"") != std::string::npos) {
        if (first_failure.empty()) first_failure = line;
        ++failures;
      }
    }
    if (passed) std::cout << "PASS (" << records << " checks)\n";
    else std::cout << "FAIL (" << failures << " of " << records << " checks)\n" << first_failure << "\n";
    std::cout << "seed " << o.seed << ", " << o.samples << " samples, bound " << o.coeff_bound << "\n";
  }
  return passed ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Boolean powers, proximities and their morphisms"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub, bool algebra, bool elements) {
    if (algebra) sub->add_option("--algebra", o.algebra, "algebra JSON file or inline JSON");
    if (elements) sub->add_option("elements", o.elements, "element JSON files or inline JSON");
    sub->add_flag("--json", o.json, "emit JSON instead of text");
  };
  auto sampled = [&o](CLI::App* sub) {
    sub->add_option("--samples", o.samples, "random cases per property")->capture_default_str();
    sub->add_option("--coeff-bound", o.coeff_bound, "coefficient bound for random elements")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
  };

  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;
  auto add = [&](const char* name, const char* help, std::function<int()> run) {
    CLI::App* sub = app.add_subcommand(name, help);
    commands.emplace_back(sub, std::move(run));
    return sub;
  };

  auto* normalize = add("normalize", "normal form of a term or element", [&] { return cmd_normalize(o); });
  common(normalize, true, true);
  normalize->add_option("--expr", o.expr, "term such as \"x_p*x_p + 3*x_q\"");
  auto* eval = add("eval", "atom values of a term or element", [&] { return cmd_eval(o); });
  common(eval, true, true);
  eval->add_option("--expr", o.expr, "term");
  auto* convert = add("convert", "switch between perp and flat form", [&] { return cmd_convert(o); });
  common(convert, true, true);
  convert->add_option("--expr", o.expr, "term");
  convert->add_option("--to", o.to, "perp or flat (default: the other one)");
  common(add("order", "compare two elements", [&] { return cmd_order(o); }), true, true);
  common(add("meet", "meet of two elements", [&] { return cmd_lattice(o, SPECKER_OP_MEET); }), true, true);
  common(add("join", "join of two elements", [&] { return cmd_lattice(o, SPECKER_OP_JOIN); }), true, true);

  auto* devries = add("check-devries", "exhaustive de Vries axiom check", [&] { return cmd_check_devries(o); });
  common(devries, true, false);
  devries->add_option("--proximity", o.proximity, "proximity JSON file, inline JSON, or leq")->capture_default_str();
  common(add("enumerate-devries", "every de Vries proximity on a small algebra",
             [&] { return cmd_enumerate_devries(o); }),
         true, false);
  auto* lift = add("lift", "lifted proximity check, or lifted morphism action", [&] { return cmd_lift(o); });
  common(lift, true, true);
  lift->add_option("--proximity", o.proximity, "proximity JSON file, inline JSON, or leq")->capture_default_str();
  lift->add_option("--morphism", o.morphism, "morphism JSON file or inline JSON");
  lift->add_option("--expr", o.expr, "term to push through the morphism");
  auto* prox = add("check-prox", "sampled axioms of the lifted proximity", [&] { return cmd_check_prox(o); });
  common(prox, true, false);
  sampled(prox);
  prox->add_option("--proximity", o.proximity, "proximity JSON file, inline JSON, or leq")->capture_default_str();
  auto* morph = add("check-morphism", "morphism axioms, exhaustive and on the lift", [&] { return cmd_check_morphism(o); });
  common(morph, false, false);
  sampled(morph);
  morph->add_option("--morphism", o.morphism, "morphism JSON file or inline JSON");
  auto* compose = add("compose", "star composite SECOND after FIRST", [&] { return cmd_compose(o); });
  compose->add_option("morphisms", o.elements, "FIRST SECOND");
  auto* equiv = add("equiv-check", "functor round trips, or naturality of a morphism", [&] { return cmd_equiv_check(o); });
  common(equiv, true, false);
  sampled(equiv);
  equiv->add_option("--proximity", o.proximity, "proximity JSON file, inline JSON, or leq")->capture_default_str();
  equiv->add_option("--morphism", o.morphism, "check naturality of this morphism instead");
  auto* oracle = add("oracle-diff", "differential test against the pointwise model", [&] { return cmd_oracle_diff(o); });
  common(oracle, true, false);
  sampled(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    for (auto& [sub, run] : commands) {
      if (sub->parsed()) return run();
    }
  } catch (const Failure& f) {
    std::cerr << "specker: " << f.message << "\n";
    return f.code;
  }
  return exit_usage;
}
