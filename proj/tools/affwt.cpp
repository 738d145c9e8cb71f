// affwt: affine weights of Nakajima monomials, Young walls and crystal graph checks.
//
// Exit codes: 0 ok, 1 verification mismatch or internal failure, 2 parse error
// (bad flags, malformed input, index out of range, depth over the cap),
// 3 not in the crystal (including a word that reaches 0), 4 unsupported type.

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "affwt/delta.hpp"
#include "affwt/error.hpp"
#include "affwt/monomial.hpp"
#include "affwt/oracle.hpp"
#include "affwt/youngwall.hpp"

using namespace affwt;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kParse = 2, kNotInCrystal = 3, kUnsupported = 4 };

// Input that parses but is refused (depth caps, missing flags).
struct UsageError : Error {
  using Error::Error;
};

std::vector<int> split_word(const std::string& text) { return parse_word(text); }

json weight_json(const WeightVector& w) {
  return {{"lambda", w.lambda}, {"delta", w.dcoef}, {"text", format_weight(w)}};
}

int depth_cap(const AffineType& t) {
  if (t.family() == Family::A) return t.rank() == 1 ? 10 : (t.rank() <= 4 ? 7 : 6);
  return t.rank() == 3 ? 6 : 5;
}

struct Target {
  std::string type;
  std::string monomial;
  std::string word;
  std::string lambda;
};

struct Resolved {
  CartanDatum datum;
  CrystalVariant variant;
  std::optional<DominantWeight> lambda;
  Monomial m;
};

// Start monomial (given, or 1 / H_lambda) with the word applied.
Resolved resolve(const Target& t) {
  CartanDatum datum(AffineType::parse(t.type));
  std::optional<DominantWeight> lambda;
  if (!t.lambda.empty()) {
    lambda = DominantWeight::parse(t.lambda);
    if (lambda->coefficients().size() != datum.num_nodes()) {
      throw ParseError("--lambda needs " + std::to_string(datum.num_nodes()) + " coefficients");
    }
  }
  const auto variant = lambda ? CrystalVariant::HighestWeight : CrystalVariant::ModifiedInfinity;
  Monomial m = !t.monomial.empty() ? Monomial::parse(t.monomial) : (lambda ? h_lambda(*lambda) : Monomial());
  if (m.max_index() >= static_cast<int>(datum.num_nodes())) datum.check_index(m.max_index());
  if (!t.word.empty()) {
    const auto word = split_word(t.word);
    auto out = apply_word(datum, variant, m, word);
    if (!out) throw NotInCrystalError("f-word " + t.word + " applied to " + m.to_string() + " gives 0");
    m = *out;
  }
  return {datum, variant, lambda, m};
}

void add_target(CLI::App* cmd, Target& t, bool with_lambda = true) {
  cmd->add_option("-t,--type", t.type, "affine type, e.g. A1, A4, B3")->required();
  cmd->add_option("-m,--monomial", t.monomial, "monomial, e.g. \"Y(0,0)^-1 Y(0,1) Y(1,1) Y(1,2)^-1\"");
  cmd->add_option("-w,--word", t.word,
                  "f-word b1,...,bl acting as f_b1 ... f_bl, rightmost first; \"1,0\" is f1 f0 1");
  if (with_lambda) cmd->add_option("-l,--lambda", t.lambda, "dominant weight p0,...,pn; uses M(lambda)");
}

int cmd_weight(const Target& t, bool as_json) {
  auto r = resolve(t);
  const auto w = r.lambda ? wt_lambda(r.datum, r.m, *r.lambda) : wt_affine(r.datum, r.m);
  WeightVector classical = w;
  classical.dcoef = 0;
  if (as_json) {
    std::cout << json{{"type", r.datum.type().name()}, {"monomial", r.m.to_string()}, {"D", w.dcoef},
                      {"weight", weight_json(w)}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << "monomial   " << r.m.to_string() << '\n'
              << "classical  " << format_weight(classical) << '\n'
              << "D          " << w.dcoef << '\n'
              << "weight     " << format_weight(w) << '\n';
  }
  return kOk;
}

int cmd_convert(const Target& t, const std::string& to, bool render_wall, bool as_json) {
  auto r = resolve(t);
  if (r.lambda) throw UsageError("convert works in M(inf); drop --lambda");
  if (to == "a-table") {
    const auto table = a_table(r.datum, r.m);
    if (as_json) {
      json entries = json::array();
      for (const auto& e : table.entries()) entries.push_back({{"i", e.i}, {"k", e.k}, {"a", e.a}});
      std::cout << json{{"type", r.datum.type().name()}, {"monomial", r.m.to_string()}, {"a", entries}}.dump(2)
                << '\n';
    } else if (table.empty()) {
      std::cout << "(empty)\n";
    } else {
      for (const auto& e : table.entries()) std::cout << "a(" << e.i << ',' << e.k << ") = " << e.a << '\n';
    }
    return kOk;
  }
  const auto& type = r.datum.type();
  if (type.family() != Family::A || type.rank() < 2) {
    throw UnsupportedTypeError("--to wall needs type A_n with n >= 2, got " + type.name());
  }
  const auto wall = wall_from_a_table(an_algorithm(r.datum, r.m), type.rank());
  if (as_json) {
    std::cout << json{{"n", type.rank()}, {"rows", wall.rows()}}.dump() << '\n';
  } else {
    std::cout << wall.to_string() << '\n';
    if (render_wall) std::cout << render(wall, type.rank());
  }
  return kOk;
}

int cmd_apply(const Target& t, const std::string& op, const std::string& ops, bool as_json) {
  auto r = resolve(t);
  std::optional<Monomial> cur = r.m;
  const auto word = split_word(ops);
  for (auto it = word.rbegin(); it != word.rend() && cur; ++it) {
    cur = op == "e" ? apply_e(r.datum, r.variant, *cur, *it) : apply_f(r.datum, r.variant, *cur, *it);
  }
  const std::string text = cur ? cur->to_string() : "0";
  if (as_json) {
    std::cout << json{{"type", r.datum.type().name()}, {"result", text}}.dump() << '\n';
  } else {
    std::cout << text << '\n';
  }
  return kOk;
}

int cmd_expand(const Target& t, int depth, const std::string& format, bool force, unsigned jobs) {
  if (!t.monomial.empty() || !t.word.empty()) throw UsageError("expand starts from 1 or H_lambda");
  auto r = resolve(t);
  if (depth < 0) throw UsageError("depth must be nonnegative");
  const int cap = depth_cap(r.datum.type());
  if (depth > cap && !force) {
    throw UsageError("depth " + std::to_string(depth) + " exceeds the cap " + std::to_string(cap) + " for " +
                     r.datum.type().name() + "; pass --force to override");
  }
  const auto graph = bfs_expand(r.datum, r.variant, r.m, depth, {false, jobs});
  auto weight_of = [&](const Monomial& m) {
    return r.lambda ? wt_lambda(r.datum, m, *r.lambda) : wt_affine(r.datum, m);
  };
  if (format == "json") {
    json nodes = json::array();
    for (const auto& n : graph.nodes()) {
      const auto w = weight_of(n.monomial);
      nodes.push_back({{"id", n.id},
                       {"monomial", n.monomial.to_string()},
                       {"depth", n.depth},
                       {"word", format_word(graph.word(n.id))},
                       {"zero_count", n.zero_count},
                       {"D", w.dcoef},
                       {"weight", weight_json(w)}});
    }
    json edges = json::array();
    for (const auto& e : graph.edges()) edges.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
    std::cout << json{{"type", r.datum.type().name()}, {"depth", depth}, {"nodes", nodes}, {"edges", edges}}.dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "digraph crystal {\n";
  for (const auto& n : graph.nodes()) {
    const auto w = weight_of(n.monomial);
    std::cout << "  n" << n.id << " [label=\"" << n.monomial.to_string() << "\", weight=\"" << format_weight(w)
              << "\", D=\"" << w.dcoef << "\"];\n";
  }
  for (const auto& e : graph.edges()) {
    std::cout << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.label << "\"];\n";
  }
  std::cout << "}\n";
  return kOk;
}

int cmd_wall(int n, const std::string& rows, const std::string& ops, bool do_reduce, bool render_wall,
             bool as_json) {
  auto wall = YoungWall::parse(rows);
  if (!is_proper(wall, n)) {
    std::cerr << "warning: wall [" << wall.to_string() << "] is not proper\n";
  }
  const auto word = split_word(ops);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it > n) throw IndexError("color " + std::to_string(*it) + " outside 0.." + std::to_string(n));
    wall = apply_f(wall, n, *it);
  }
  if (do_reduce) wall = reduce(wall, n);
  const auto w = wall_weight(wall, n);
  const auto image = psi(wall, n);
  std::vector<Int> eps_list;
  for (int i = 0; i <= n; ++i) eps_list.push_back(wall_eps(wall, n, i));
  if (as_json) {
    std::cout << json{{"n", n},
                      {"rows", wall.rows()},
                      {"proper", is_proper(wall, n)},
                      {"reduced", is_reduced(wall, n)},
                      {"weight", weight_json(w)},
                      {"psi", image.to_string()},
                      {"eps", eps_list}}
                     .dump(2)
              << '\n';
    return kOk;
  }
  std::cout << "rows     " << wall.to_string() << '\n'
            << "proper   " << (is_proper(wall, n) ? "yes" : "no") << '\n'
            << "reduced  " << (is_reduced(wall, n) ? "yes" : "no") << '\n'
            << "weight   " << format_weight(w) << '\n'
            << "psi      " << image.to_string() << '\n'
            << "eps     ";
  for (auto e : eps_list) std::cout << ' ' << e;
  std::cout << '\n';
  if (render_wall) std::cout << render(wall, n);
  return kOk;
}

struct Run {
  std::string suite;
  std::string type;
  int depth;
};

std::vector<Run> plan(const std::string& suite, const std::string& type, int depth) {
  std::vector<Run> runs;
  auto add = [&](const std::string& s, const std::string& t, int d) {
    if (!type.empty() && AffineType::parse(type) != AffineType::parse(t)) return;
    runs.push_back({s, t, depth >= 0 ? depth : d});
  };
  const bool all = suite == "all";
  if (all || suite == "a1") add("delta", "A1", 10);
  if (all || suite == "an") {
    add("delta", "A2", 7);
    add("delta", "A3", 7);
    add("delta", "A4", 6);
  }
  if (all || suite == "b3") add("delta", "B3", 6);
  if (all || suite == "bn") add("delta", "B4", 5);
  if (all || suite == "walls") {
    add("walls", "A2", 6);
    add("walls", "A3", 5);
  }
  if (all || suite == "b4seq") add("b4seq", "B4", 21);
  // An explicit type outside the default plan is run as requested.
  if (runs.empty() && !type.empty() && !all) {
    const auto t = AffineType::parse(type);
    if (suite == "walls" && t.family() != Family::A) throw UnsupportedTypeError("walls need type A");
    if ((suite == "a1" && !(t.family() == Family::A && t.rank() == 1)) ||
        (suite == "an" && !(t.family() == Family::A && t.rank() >= 2)) ||
        (suite == "b3" && !(t.family() == Family::B && t.rank() == 3)) ||
        (suite == "bn" && t.family() != Family::B) || suite == "b4seq") {
      throw UnsupportedTypeError("suite " + suite + " does not cover type " + t.name());
    }
    const int fallback = suite == "walls" ? (t.rank() <= 2 ? 6 : 5) : depth_cap(t);
    runs.push_back({suite == "walls" ? "walls" : "delta", t.name(), depth >= 0 ? depth : fallback});
  }
  if (runs.empty()) throw UnsupportedTypeError("suite " + suite + " does not cover type " + type);
  return runs;
}

int cmd_verify(const std::string& suite, const std::string& type, int depth, unsigned jobs, bool as_json) {
  json reports = json::array();
  bool ok = true;
  for (const auto& run : plan(suite, type, depth)) {
    Report r;
    if (run.suite == "delta") {
      r = verify_D(CartanDatum(AffineType::parse(run.type)), run.depth, {false, jobs});
    } else if (run.suite == "walls") {
      r = verify_wall_iso(AffineType::parse(run.type).rank(), run.depth, {false, jobs});
    } else {
      r = verify_b4seq(run.depth);
    }
    ok = ok && r.ok();
    if (as_json) {
      reports.push_back(r.to_json());
    } else {
      std::cout << r.table();
    }
  }
  if (as_json) std::cout << reports.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

int cmd_b4seq(int count, bool as_json) {
  const auto seq = b4_coefficients(count);
  const auto check = verify_b4seq(count);
  if (as_json) {
    std::cout << json{{"a", seq.a}, {"b", seq.b}, {"mismatches", check.to_json()["mismatches"]}}.dump() << '\n';
  } else {
    std::cout << "k    a_k  b_k\n";
    for (std::size_t k = 0; k < seq.a.size(); ++k) {
      std::cout << std::left << std::setw(5) << k << std::setw(5) << seq.a[k] << seq.b[k] << '\n';
    }
    if (!check.ok()) std::cout << check.table();
  }
  return check.ok() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine weights of Nakajima monomials in types A_n^(1) and B_n^(1)"};
  app.require_subcommand(1);
  bool as_json = false;

  Target target;

  auto* weight = app.add_subcommand("weight", "classical weight, delta coefficient D and affine weight");
  add_target(weight, target);

  auto* convert = app.add_subcommand("convert", "A-table or reduced proper Young wall of a monomial");
  add_target(convert, target, false);
  std::string to = "a-table";
  bool render_wall = false;
  convert->add_option("--to", to, "a-table | wall")->check(CLI::IsMember({"a-table", "wall"}));
  convert->add_flag("--render", render_wall, "draw the wall");

  auto* apply = app.add_subcommand("apply", "apply Kashiwara operators to a monomial (default start 1 or H_lambda)");
  add_target(apply, target);
  std::string op = "f";
  std::string ops;
  apply->add_option("--op", op, "f | e")->check(CLI::IsMember({"f", "e"}));
  apply->add_option("--ops", ops, "operator word applied after --word, rightmost first")->required();

  auto* expand = app.add_subcommand("expand", "crystal graph ball as DOT or JSON");
  expand->add_option("-t,--type", target.type, "affine type")->required();
  expand->add_option("-l,--lambda", target.lambda, "expand M(lambda) from H_lambda instead of M(inf) from 1");
  int depth = -1;
  std::string format = "dot";
  bool force = false;
  unsigned jobs = 1;
  expand->add_option("-d,--depth", depth, "radius of the ball")->required();
  expand->add_option("--format", format, "dot | json")->check(CLI::IsMember({"dot", "json"}));
  expand->add_flag("--force", force, "ignore the depth cap");
  expand->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* wall = app.add_subcommand("wall", "inspect a type A_n^(1) Young wall");
  int n = 0;
  std::string rows;
  bool do_reduce = false;
  wall->add_option("-n,--rank", n, "rank n of A_n^(1)")->required()->check(CLI::PositiveNumber);
  wall->add_option("-r,--rows", rows, "row lengths bottom-up, e.g. 2,2,2,1,1");
  wall->add_option("-w,--word", ops, "f-word applied to the wall, rightmost first");
  wall->add_flag("--reduce", do_reduce, "remove removable deltas");
  wall->add_flag("--render", render_wall, "draw the wall");

  auto* verify = app.add_subcommand("verify", "oracle suites; exit 0 iff no mismatches");
  std::string suite = "all";
  std::string vtype;
  verify->add_option("-s,--suite", suite, "a1 | an | b3 | bn | walls | b4seq | all")
      ->check(CLI::IsMember({"a1", "an", "b3", "bn", "walls", "b4seq", "all"}));
  verify->add_option("-t,--type", vtype, "restrict to one type");
  verify->add_option("-d,--depth", depth, "override the default depth");
  verify->add_option("-j,--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

  auto* b4seq = app.add_subcommand("b4seq", "coefficient sequences (a_k), (b_k) of type B4");
  int count = 21;
  b4seq->add_option("-c,--count", count, "number of terms")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  try {
    if (*weight) return cmd_weight(target, as_json);
    if (*convert) return cmd_convert(target, to, render_wall, as_json);
    if (*apply) return cmd_apply(target, op, ops, as_json);
    if (*expand) return cmd_expand(target, depth, format, force, jobs);
    if (*wall) return cmd_wall(n, rows, ops, do_reduce, render_wall, as_json);
    if (*verify) return cmd_verify(suite, vtype, depth, jobs, as_json);
    if (*b4seq) return cmd_b4seq(count, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const IndexError& e) {
    std::cerr << "index error: " << e.what() << '\n';
    return kParse;
  } catch (const UsageError& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kParse;
  } catch (const NotInCrystalError& e) {
    std::cerr << "not in crystal: " << e.what() << '\n';
    return kNotInCrystal;
  } catch (const UnsupportedTypeError& e) {
    std::cerr << "unsupported type: " << e.what() << '\n';
    return kUnsupported;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kMismatch;
  }
  return kOk;
}
