// graphdyn: command-line front end for the graph operator library.
//
// Exit status: 0 success, 1 oracle/empirical disagreement in `check`,
// 2 usage or input error, 3 a resource cap tripped in `apply`.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphdyn/graphdyn.hpp"
#include "graphdyn_support/census.hpp"

namespace {

using namespace graphdyn;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t to_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size() || s[0] == '-') throw UsageError("expected a non-negative integer, got '" + s + "'");
  return v;
}

Graph generate(const std::vector<std::string>& spec, bool hat) {
  if (spec.empty()) throw UsageError("missing graph family");
  const std::string& family = spec[0];
  std::vector<std::size_t> p;
  for (std::size_t i = 1; i < spec.size(); ++i) p.push_back(to_count(spec[i]));
  auto need = [&](std::size_t k, const char* usage) {
    if (p.size() != k) throw UsageError(std::string("usage: ") + usage);
  };
  Graph g = [&]() -> Graph {
    if (family == "path") return need(1, "path N"), path(p[0]);
    if (family == "cycle") return need(1, "cycle N"), cycle(p[0]);
    if (family == "complete") return need(1, "complete N"), complete(p[0]);
    if (family == "edgeless") return need(1, "edgeless N"), edgeless(p[0]);
    if (family == "bipartite") return need(2, "bipartite A B"), complete_bipartite(p[0], p[1]);
    if (family == "kqe") return need(1, "kqe Q"), complete_minus_edge(p[0]);
    if (family == "grid") return need(2, "grid M N"), grid(p[0], p[1]);
    if (family == "petersen") return need(0, "petersen"), petersen();
    if (family == "gp") return need(2, "gp N K"), generalized_petersen(p[0], p[1]);
    throw UsageError("unknown family '" + family + "' (path, cycle, complete, edgeless, bipartite, kqe, grid, petersen, gp)");
  }();
  return hat ? add_hat(g) : g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Edgelist files start (after comments) with "n <count>"; anything else is graph6.
Graph parse_any(const std::string& text) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (line.compare(first, 2, "n ") == 0 || line.compare(first, 2, "n\t") == 0) return parse_edgelist(text);
    return parse_graph6(line.substr(first));
  }
  throw UsageError("input is empty");
}

struct InputOptions {
  std::string file;
  std::string g6;
  std::vector<std::string> gen;
  bool hat = false;

  void attach(CLI::App* cmd) {
    auto* in = cmd->add_option("--in", file, "Read an edgelist or graph6 file");
    auto* g = cmd->add_option("--g6", g6, "Graph given as a graph6 string");
    auto* gen_opt = cmd->add_option("--gen", gen, "Generate: FAMILY [PARAMS...]")->expected(1, -1);
    in->excludes(g)->excludes(gen_opt);
    g->excludes(gen_opt);
    cmd->add_flag("--hat", hat, "Attach a hat to a generated triangle-free cubic graph");
  }

  Graph load() const {
    if (!file.empty()) return parse_any(read_file(file));
    if (!g6.empty()) return parse_graph6(g6);
    if (!gen.empty()) return generate(gen, hat);
    throw UsageError("no input graph: use --in, --g6 or --gen");
  }
};

struct OutputOptions {
  std::string file;
  std::string format = "auto";

  void attach(CLI::App* cmd) {
    cmd->add_option("--out", file, "Write to FILE instead of stdout");
    cmd->add_option("--format", format, "g6, edgelist, dot, or auto (g6 up to 62 vertices)")
        ->check(CLI::IsMember({"auto", "g6", "edgelist", "dot"}));
  }

  void write(const MaybeGraph& g) const {
    std::string text;
    if (!g) {
      text = "empty\n";
    } else if (format == "dot") {
      text = emit_dot(*g);
    } else if (format == "edgelist" || (format == "auto" && g->order() > kGraph6MaxOrder)) {
      text = emit_edgelist(*g);
    } else {
      text = emit_graph6(*g) + "\n";
    }
    if (file.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(file, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + file + "'");
    out << text;
  }
};

OperatorId operator_from(const std::string& text) {
  if (auto id = parse_operator(text)) return *id;
  throw UsageError("unknown operator '" + text + "'");
}

void add_operator_argument(CLI::App* cmd, std::string& op) {
  std::vector<std::string> names;
  for (OperatorId id : kAllOperators) names.emplace_back(name(id));
  cmd->add_option("operator", op, "Graph operator")->required()->check(CLI::IsMember(names));
}

void add_budget_options(CLI::App* cmd, Budget& budget) {
  cmd->add_option("--max-steps", budget.max_steps, "Step cap")->capture_default_str();
  cmd->add_option("--max-order", budget.max_order, "Largest order materialized")->capture_default_str();
  cmd->add_option("--max-substructures", budget.max_substructures, "Enumeration cap per step")->capture_default_str();
  cmd->add_option("--max-canon-order", budget.max_canon_order, "Largest order canonicalized")->capture_default_str();
}

std::string describe(const Graph& g) {
  if (g.order() <= kGraph6MaxOrder) return emit_graph6(g);
  return "n=" + std::to_string(g.order()) + ",m=" + std::to_string(g.size());
}

// Cross-validation suites. Each returns (graph, operator) cases in a fixed order.
struct Case {
  OperatorId op;
  Graph g;
};

std::vector<Case> line_suite(std::size_t max_n) {
  std::vector<Case> out;
  for (std::size_t n = 3; n <= 8; ++n) out.push_back({OperatorId::Line, cycle(n)});
  for (std::size_t n = 1; n <= 8; ++n) out.push_back({OperatorId::Line, path(n)});
  out.push_back({OperatorId::Line, complete_bipartite(1, 3)});
  out.push_back({OperatorId::Line, complete_bipartite(1, 4)});
  out.push_back({OperatorId::Line, complete(4)});
  for (const Graph& g : census::graphs_up_to(max_n))
    if (is_connected(g)) out.push_back({OperatorId::Line, g});
  return out;
}

std::vector<Case> path_suite(std::size_t max_n) {
  std::vector<Case> out;
  for (const Graph& g : census::graphs_up_to(max_n))
    if (g.size() > 0) out.push_back({OperatorId::PathGraph, g});
  return out;
}

std::vector<Case> claw_suite() {
  std::vector<Case> out;
  std::vector<Graph> cubic{complete_bipartite(3, 3)};
  for (std::size_t n = 5; n <= 13; ++n)
    for (std::size_t k = 1; 2 * k < n; ++k) {
      Graph g = generalized_petersen(n, k);
      if (is_triangle_free(g)) cubic.push_back(std::move(g));
    }
  for (const Graph& g : cubic) out.push_back({OperatorId::ClawGraph, g});
  out.push_back({OperatorId::ClawGraph, add_hat(petersen())});
  out.push_back({OperatorId::ClawGraph, add_hat(complete_bipartite(3, 3))});
  return out;
}

int run_check(const std::string& suite, std::size_t max_n, const Budget& budget) {
  std::vector<Case> cases;
  if (suite == "line" || suite == "all") {
    auto s = line_suite(std::min<std::size_t>(max_n, 5));
    cases.insert(cases.end(), s.begin(), s.end());
  }
  if (suite == "path" || suite == "all") {
    auto s = path_suite(max_n);
    cases.insert(cases.end(), s.begin(), s.end());
  }
  if (suite == "claw" || suite == "all") {
    auto s = claw_suite();
    cases.insert(cases.end(), s.begin(), s.end());
  }
  std::size_t tally[4] = {0, 0, 0, 0};
  for (const Case& c : cases) {
    const CrossValidation r = cross_validate(c.op, c.g, budget);
    ++tally[static_cast<int>(r.agreement)];
    std::cout << name(c.op) << ' ' << describe(c.g) << " oracle=" << to_string(r.oracle) << " empirical=\""
              << to_string(r.empirical) << "\" " << to_string(r.agreement) << '\n';
  }
  std::cout << "checked " << cases.size() << ": agree " << tally[0] << ", disagree " << tally[1] << ", not-covered "
            << tally[2] << ", inconclusive " << tally[3] << '\n';
  return tally[static_cast<int>(Agreement::Disagree)] == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterate graph operators and classify their orbits"};
  app.require_subcommand(1);

  std::vector<std::string> gen_spec;
  bool gen_hat = false;
  OutputOptions gen_out;
  auto* gen = app.add_subcommand("generate", "Write a graph from a named family");
  gen->add_option("family", gen_spec, "FAMILY [PARAMS...]")->required()->expected(1, -1);
  gen->add_flag("--hat", gen_hat, "Attach a hat to the generated triangle-free cubic graph");
  gen_out.attach(gen);

  std::string apply_op;
  InputOptions apply_in;
  OutputOptions apply_out;
  std::size_t apply_max_order = kMaxOrder;
  auto* app_cmd = app.add_subcommand("apply", "Apply one operator");
  add_operator_argument(app_cmd, apply_op);
  apply_in.attach(app_cmd);
  apply_out.attach(app_cmd);
  app_cmd->add_option("--max-order", apply_max_order, "Largest result order")->capture_default_str();

  std::string iter_op;
  InputOptions iter_in;
  Budget iter_budget;
  bool full_canon = false;
  auto* iter = app.add_subcommand("iterate", "Print the orbit step by step, then the verdict");
  add_operator_argument(iter, iter_op);
  iter_in.attach(iter);
  add_budget_options(iter, iter_budget);
  iter->add_flag("--full-canon", full_canon, "Print full canonical forms instead of digests");

  std::string cls_op;
  InputOptions cls_in;
  Budget cls_budget;
  auto* cls = app.add_subcommand("classify", "Print the orbit verdict");
  add_operator_argument(cls, cls_op);
  cls_in.attach(cls);
  add_budget_options(cls, cls_budget);

  std::string suite;
  std::size_t check_max_n = 6;
  Budget check_budget;
  check_budget.max_order = 5000;
  auto* chk = app.add_subcommand("check", "Cross-validate against the theorem oracles");
  chk->add_option("suite", suite, "line, path, claw or all")->required()->check(CLI::IsMember({"line", "path", "claw", "all"}));
  chk->add_option("--max-n", check_max_n, "Largest order in exhaustive sweeps")->capture_default_str()->check(CLI::Range(1, 7));
  add_budget_options(chk, check_budget);

  InputOptions conv_in;
  OutputOptions conv_out;
  auto* conv = app.add_subcommand("convert", "Re-encode a graph");
  conv_in.attach(conv);
  conv_out.attach(conv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      gen_out.write(generate(gen_spec, gen_hat));
    } else if (*app_cmd) {
      apply_out.write(apply(operator_from(apply_op), apply_in.load(), OperatorLimits{apply_max_order}));
    } else if (*iter) {
      iter_budget.validate();
      const IterationTrace t = iterate(operator_from(iter_op), iter_in.load(), iter_budget);
      for (const TraceStep& s : t.steps) {
        std::cout << s.k << ' ' << s.order << ' ' << s.size << ' ';
        if (!s.form) std::cout << '-';
        else std::cout << (full_canon ? s.form->hex() : s.form->digest());
        std::cout << '\n';
      }
      std::cout << to_string(t.terminal) << '\n';
    } else if (*cls) {
      cls_budget.validate();
      std::cout << to_string(classify(operator_from(cls_op), cls_in.load(), cls_budget)) << '\n';
    } else if (*chk) {
      check_budget.validate();
      return run_check(suite, check_max_n, check_budget);
    } else if (*conv) {
      conv_out.write(conv_in.load());
    }
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    // GraphError, FormatError and UsageError: bad input.
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
