// dicograph: command-line front end.
//
// Exit codes: 0 success, 1 negative or unconfirmed result, 2 parse or usage
// error, 3 recognition routes disagree, 4 time budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "dicograph/classes.hpp"
#include "dicograph/decomposition.hpp"
#include "dicograph/digraph.hpp"
#include "dicograph/expression.hpp"
#include "dicograph/io.hpp"
#include "dicograph/miner.hpp"
#include "dicograph/patterns.hpp"
#include "dicograph/recognizers.hpp"

namespace {

using namespace dicograph;

enum Exit { kOk = 0, kNegative = 1, kUsage = 2, kDisagreement = 3, kBudget = 4 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;
  std::string expr;
};

void add_input(CLI::App* cmd, Input& in, bool with_expr = true) {
  cmd->add_option("input", in.path, "Edge-list file, or - for stdin (default)");
  if (with_expr) cmd->add_option("--expr", in.expr, "Digraph given as an expression, e.g. order(v, union(v, v))");
}

bool looks_like_edge_list(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string first;
    if (words >> first) return first == "n";
  }
  return true;
}

Digraph load(const Input& in) {
  if (!in.expr.empty()) {
    if (!in.path.empty()) throw UsageError("give either an input file or --expr, not both");
    return evaluate(parse_expression(in.expr));
  }
  std::string text;
  if (in.path.empty() || in.path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(in.path);
    if (!file) throw UsageError("cannot open " + in.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  if (looks_like_edge_list(text)) return parse_edge_list(text);
  return evaluate(parse_expression(text));
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (int x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string describe(const Occurrence& occ) {
  const bool partial = occ.pattern == two_switch().name || occ.pattern == alternating_anticircuit().name;
  if (partial) {
    const char* roles = "wxyz";
    std::string out = occ.pattern + ":";
    for (std::size_t i = 0; i < occ.mapping.size(); ++i) {
      out += std::string(" ") + roles[i] + "=" + std::to_string(occ.mapping[i]);
    }
    return out;
  }
  return occ.pattern + " on vertices " + join(occ.mapping);
}

ClassId class_arg(const std::string& name) {
  if (auto id = parse_class(name)) return *id;
  throw UsageError("unknown class " + name);
}

// ---------------------------------------------------------------------------

int run_classify(const Input& in, const std::vector<std::string>& names, bool certificates) {
  const Digraph g = load(in);
  std::vector<ClassId> ids;
  for (const auto& n : names) ids.push_back(class_arg(n));
  if (ids.empty()) ids.assign(std::begin(kAllClasses), std::end(kAllClasses));
  for (ClassId id : ids) {
    const Verdict v = decide(g, id);
    std::cout << to_string(id) << '\t' << (v.member ? "member" : "non-member") << '\n';
    if (!certificates) continue;
    if (v.member && v.certificate) std::cout << "  construction: " << format(*v.certificate) << '\n';
    if (!v.member && v.witness) std::cout << "  obstruction: " << describe(*v.witness) << '\n';
  }
  return kOk;
}

int run_decompose(const Input& in) {
  const Digraph g = load(in);
  if (auto tree = di_co_tree_labeled(g)) {
    std::cout << format(tree->expression) << '\n';
    std::cout << "leaves: " << join(tree->leaf_vertices) << '\n';
    return kOk;
  }
  std::cout << "not a directed co-graph\n";
  if (auto w = member_by_patterns(g, ClassId::DC).witness) std::cout << "obstruction: " << describe(*w) << '\n';
  return kNegative;
}

int run_creation_seq(const Input& in, bool oriented) {
  const Digraph g = load(in);
  if (auto seq = creation_sequence(g, !oriented)) {
    std::cout << seq->digits << '\n';
    std::cout << "order: " << join(seq->order) << '\n';
    return kOk;
  }
  std::cout << (oriented ? "not an oriented threshold digraph\n" : "not a directed threshold digraph\n");
  return kNegative;
}

int run_transform(const Input& in, const std::string& op) {
  const Digraph g = load(in);
  if (op == "complement") {
    std::cout << to_edge_list(complement(g));
  } else if (op == "converse") {
    std::cout << to_edge_list(converse(g));
  } else if (op == "underlying") {
    std::cout << to_edge_list(underlying(g).as_symmetric_digraph());
  } else if (op == "sym") {
    std::cout << to_edge_list(sym_asym_parts(g).symmetric);
  } else if (op == "asym") {
    std::cout << to_edge_list(sym_asym_parts(g).asymmetric);
  } else {
    throw UsageError("unknown operation " + op);
  }
  return kOk;
}

int run_gen(const std::string& family, int n, int m) {
  auto kind = parse_family(family);
  if (!kind) throw UsageError("unknown family " + family);
  std::cout << to_edge_list(generate(Family{*kind, n, m}));
  return kOk;
}

int run_mine(const std::vector<std::string>& names, int n_max, int jobs, double budget, bool tsv) {
  std::vector<ClassId> ids;
  for (const auto& n : names) ids.push_back(class_arg(n));
  if (ids.empty()) {
    for (ClassId id : kAllClasses) {
      if (has_constructive_definition(id)) ids.push_back(id);
    }
  }
  bool confirmed = true;
  bool out_of_time = false;
  for (ClassId id : ids) {
    ObstructionReport r;
    try {
      r = minimal_forbidden(id, n_max, RunOptions{jobs, budget});
    } catch (const BudgetExceeded& e) {
      std::cerr << to_string(id) << ": " << e.what() << '\n';
      return kBudget;
    }
    std::cout << (tsv ? to_tsv(r) : to_text(r));
    confirmed = confirmed && r.all_confirmed();
    out_of_time = out_of_time || r.budget_exceeded;
  }
  if (out_of_time) return kBudget;
  return confirmed ? kOk : kNegative;
}

int run_verify(const std::string& suite, int n_max, bool tsv) {
  const std::vector<std::string> all = {"hierarchy",    "theorems",    "closures", "identities",
                                        "orientations", "projections", "routes",   "six-vertex"};
  std::vector<std::string> suites = suite == "all" ? all : std::vector<std::string>{suite};
  bool passed = true;
  for (const auto& s : suites) {
    VerificationReport r;
    if (s == "hierarchy") r = verify_hierarchy(n_max);
    else if (s == "theorems") r = verify_theorems(n_max);
    else if (s == "closures") r = verify_closures(n_max);
    else if (s == "identities") r = verify_identities(n_max);
    else if (s == "orientations") r = verify_orientations(n_max);
    else if (s == "projections") r = verify_projections(n_max);
    else if (s == "routes") r = verify_route_agreement(n_max);
    else if (s == "six-vertex") r = verify_six_vertex_patterns();
    else throw UsageError("unknown suite " + s);
    std::cout << (tsv ? to_tsv(r) : to_text(r));
    passed = passed && r.passed();
  }
  return passed ? kOk : kNegative;
}

int run_export_dot(const Input& in) {
  std::cout << to_dot(load(in));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition, decomposition and obstruction mining for directed co-graphs"};
  app.require_subcommand(1);

  Input in;
  std::vector<std::string> classes;
  bool certificates = false;
  auto* classify = app.add_subcommand("classify", "Decide class membership");
  add_input(classify, in);
  classify->add_option("--class", classes, "Class to decide (repeatable; default all)")->allow_extra_args(false);
  classify->add_flag("--certificates", certificates, "Print constructions and obstructions");

  auto* decompose = app.add_subcommand("decompose", "Print the di-co-tree as an expression");
  add_input(decompose, in);

  bool oriented = false;
  auto* creation = app.add_subcommand("creation-seq", "Find a creation sequence");
  add_input(creation, in);
  creation->add_flag("--oriented", oriented, "Disallow bidirectionally dominating vertices");

  std::string op;
  auto* transform = app.add_subcommand("transform", "Apply a digraph transform");
  add_input(transform, in);
  transform->add_option("--op", op, "complement, converse, underlying, sym or asym")
      ->required()
      ->check(CLI::IsMember({"complement", "converse", "underlying", "sym", "asym"}));

  std::string family;
  int n = 1;
  int m = 0;
  auto* gen = app.add_subcommand("gen", "Generate a digraph family");
  gen->add_option("--family", family, "tt, edgeless, complete, path, cycle, bipartite or obipartite")->required();
  gen->add_option("--n", n, "Vertex count (first side for bipartite families)")->check(CLI::Range(1, 64));
  gen->add_option("--m", m, "Second side for bipartite families")->check(CLI::Range(0, 63));

  int n_max = 5;
  int jobs = 0;
  double budget = 0;
  bool tsv = false;
  auto* mine = app.add_subcommand("mine", "Mine minimal forbidden induced subdigraphs");
  mine->add_option("--class", classes, "Class to mine (repeatable; default all with a recursive definition)")->allow_extra_args(false);
  mine->add_option("--nmax", n_max, "Largest order searched")->check(CLI::Range(1, 6));
  mine->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  mine->add_option("--budget", budget, "Time budget in seconds (0 = none)")->check(CLI::NonNegativeNumber);
  mine->add_flag("--tsv", tsv, "Tab-separated output");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite,
                     "hierarchy, theorems, closures, identities, orientations, projections, routes, six-vertex or all");
  verify->add_option("--nmax", n_max, "Largest order tested")->check(CLI::Range(1, 5));
  verify->add_flag("--tsv", tsv, "Tab-separated output");

  auto* dot = app.add_subcommand("export-dot", "Write the digraph in DOT format");
  add_input(dot, in, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (classify->parsed()) return run_classify(in, classes, certificates);
    if (decompose->parsed()) return run_decompose(in);
    if (creation->parsed()) return run_creation_seq(in, oriented);
    if (transform->parsed()) return run_transform(in, op);
    if (gen->parsed()) return run_gen(family, n, m);
    if (mine->parsed()) return run_mine(classes, n_max, jobs, budget, tsv);
    if (verify->parsed()) return run_verify(suite, n_max, tsv);
    if (dot->parsed()) return run_export_dot(in);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RouteDisagreement& e) {
    std::cerr << "route disagreement: " << e.what() << '\n';
    return kDisagreement;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
