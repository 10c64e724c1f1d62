// abmod: command-line front end for the (alpha,beta)-module library.
//
// Exit codes: 0 success / positive answer, 1 negative answer to a decision
// question, 2 bad input or a size cap exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abmod/abmodule.hpp"
#include "abmod/bipartite.hpp"
#include "abmod/decomposition.hpp"
#include "abmod/enumeration.hpp"
#include "abmod/errors.hpp"
#include "abmod/generators.hpp"
#include "abmod/graph_io.hpp"
#include "abmod/ksplitter.hpp"
#include "abmod/report.hpp"

using namespace abmod;

namespace {

struct Globals {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::uint64_t seed = 1;
  bool seed_given = false;
  bool json = false;
  bool timing = false;
  unsigned jobs = 1;
};

Globals G;

AbParams params() { return {G.alpha, G.beta}; }

GraphDocument load(const std::string& input) {
  const std::string prefix = "fixture:";
  if (input.rfind(prefix, 0) == 0) return fixtures::by_name(input.substr(prefix.size()));
  return read_graph_file(input);
}

void check_budgets(const GraphDocument& doc) { check_params(params(), doc.graph.order()); }

void warn_enumeration_cost() {
  if (G.alpha + G.beta > 3)
    std::cerr << "warning: alpha+beta = " << G.alpha + G.beta
              << " enumerates n^" << G.alpha + G.beta + 2 << " start sets\n";
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Prints either the JSON envelope or the text lines, and returns the exit
// code for the answer.
int emit(RunMeta meta, const Timer& timer, Json result, const std::vector<std::string>& text,
         bool positive = true) {
  if (G.timing) meta.wall_ms = timer.ms();
  if (G.seed_given) meta.seed = G.seed;
  if (G.json) {
    std::cout << envelope(meta, std::move(result)).dump(2) << '\n';
  } else {
    for (const auto& line : text) std::cout << line << '\n';
    if (G.timing) std::cerr << "time: " << *meta.wall_ms << " ms\n";
  }
  return positive ? 0 : 1;
}

std::vector<std::string> family_lines(const std::vector<VertexSet>& sets, const GraphDocument& doc) {
  std::vector<std::string> out;
  for (const auto& s : sets) out.push_back(format_set(s, doc));
  return out;
}

void tree_lines(const DecompositionTree& t, std::size_t id, const GraphDocument& doc,
                std::size_t depth, std::vector<std::string>& out) {
  const TreeNode& node = t.nodes[id];
  out.push_back(std::string(2 * depth, ' ') + std::string(to_string(node.kind)) + ' ' +
                format_set(node.set, doc));
  for (std::size_t c : node.children) tree_lines(t, c, doc, depth + 1, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-modular decomposition toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--alpha,-a", G.alpha, "edge-addition budget")->capture_default_str();
  app.add_option("--beta,-b", G.beta, "edge-deletion budget")->capture_default_str();
  app.add_option("--seed", G.seed, "random seed")->each([](const std::string&) { G.seed_given = true; });
  app.add_flag("--json", G.json, "print a JSON result document");
  app.add_flag("--timing", G.timing, "report wall time (adds wall_ms to JSON)");
  app.add_option("--jobs,-j", G.jobs, "worker threads for enumeration (0 = all cores)");

  std::string input;
  std::string set_spec;
  std::function<int()> action;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("graph", input, "graph file, or fixture:<name>")->required();
  };
  auto with_set = [&](CLI::App* sub) {
    sub->add_option("--set,-s", set_spec, "vertex set, e.g. a,b,c or 0,1,2")->required();
  };

  {
    auto* sub = app.add_subcommand("check", "is the set an (alpha,beta)-module?");
    with_input(sub);
    with_set(sub);
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const VertexSet s = parse_vertex_set(set_spec, doc);
        const bool ok = is_ab_module(doc.graph, s, params());
        return emit({"check", params()}, t, Json{{"set", set_json(s, doc)}, {"module", ok}},
                    {ok ? "true" : "false"}, ok);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("splitters", "alpha-neighbours, beta-non-neighbours and splitters");
    with_input(sub);
    with_set(sub);
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const VertexSet s = parse_vertex_set(set_spec, doc);
        const SplitterReport r = splitter_set(doc.graph, s, params());
        Json counts = Json::object();
        s.complement().for_each([&](Vertex x) { counts[doc.name_of(x)] = r.counts[x]; });
        return emit({"splitters", params()}, t,
                    Json{{"set", set_json(s, doc)},
                         {"splitters", set_json(r.splitters, doc)},
                         {"n_alpha", set_json(r.n_alpha, doc)},
                         {"n_bar_beta", set_json(r.n_bar_beta, doc)},
                         {"counts", counts}},
                    {"splitters: " + format_set(r.splitters, doc),
                     "n_alpha: " + format_set(r.n_alpha, doc),
                     "n_bar_beta: " + format_set(r.n_bar_beta, doc)});
      };
    });
  }
  {
    auto* sub = app.add_subcommand("closure", "smallest (alpha,beta)-module containing the set");
    with_input(sub);
    with_set(sub);
    static bool naive = false;
    sub->add_flag("--naive", naive, "add whole splitter sets per round instead of graph search");
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const VertexSet s = parse_vertex_set(set_spec, doc);
        const ClosureTrace tr = naive ? closure_naive(doc.graph, s, params())
                                      : closure_refined(doc.graph, s, params());
        Json j{{"set", set_json(s, doc)}, {"closure", set_json(tr.result, doc)},
               {"stages", family_json(tr.stages, doc)}, {"below_threshold", tr.below_threshold}};
        if (!naive) {
          Json order = Json::array();
          for (Vertex v : tr.visited_order) order.push_back(doc.labels.empty() ? Json(v) : Json(doc.name_of(v)));
          j["visited_order"] = order;
          j["refinement_splits"] = tr.refinement_splits;
        }
        return emit({"closure", params(), naive ? "naive" : "refined"}, t, j,
                    {format_set(tr.result, doc)});
      };
    });
  }

  auto family_command = [&](const char* name, const char* help, bool cover) {
    auto* sub = app.add_subcommand(name, help);
    with_input(sub);
    static bool per_tuple = false;
    sub->add_flag("--per-tuple", per_tuple, "one closure per start tuple (reference driver)");
    sub->callback([&, name, cover] {
      action = [&, name, cover] {
        Timer t;
        warn_enumeration_cost();
        const GraphDocument doc = load(input);
        check_budgets(doc);
        EnumerationOptions opts;
        opts.driver = per_tuple ? EnumerationDriver::per_tuple : EnumerationDriver::batched;
        opts.jobs = G.jobs;
        const ModuleFamily fam = cover ? covering(doc.graph, params(), opts)
                                       : minimal_nontrivial_modules(doc.graph, params(), opts);
        return emit({name, params(), per_tuple ? "per_tuple" : "batched"}, t,
                    Json{{"kind", std::string(to_string(fam.kind))},
                         {"members", family_json(fam.members, doc)}},
                    family_lines(fam.members, doc));
      };
    });
  };
  family_command("minimal", "minimal non-trivial (alpha,beta)-modules", false);
  family_command("cover", "covering by minimal modules and singletons", true);

  {
    auto* sub = app.add_subcommand("prime", "does the graph have only trivial modules?");
    with_input(sub);
    sub->callback([&] {
      action = [&] {
        Timer t;
        warn_enumeration_cost();
        const GraphDocument doc = load(input);
        check_budgets(doc);
        EnumerationOptions opts;
        opts.jobs = G.jobs;
        const PrimeResult r = is_prime(doc.graph, params(), opts);
        const std::string word = r.prime ? (r.degenerate ? "prime (degenerate)" : "prime") : "not prime";
        return emit({"prime", params()}, t, Json{{"prime", r.prime}, {"degenerate", r.degenerate}},
                    {word}, r.prime);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("brittle", "is every vertex subset a module?");
    with_input(sub);
    static bool fast = false;
    sub->add_flag("--fast", fast, "degree criteria only; may answer undetermined");
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const Verdict v = is_brittle(doc.graph, params(), fast ? BrittleMode::fast : BrittleMode::exact);
        const std::string word(to_string(v));
        return emit({"brittle", params(), fast ? "fast" : "exact"}, t, Json{{"brittle", word}},
                    {word}, v != Verdict::no);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("tree", "(alpha,beta)-modular decomposition tree");
    with_input(sub);
    static std::string strategy = "exact";
    static bool dot = false;
    sub->add_option("--strategy", strategy, "maximal module search")
        ->check(CLI::IsMember({"exact", "grow"}))
        ->capture_default_str();
    sub->add_flag("--dot", dot, "print Graphviz DOT");
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const Strategy s = strategy == "grow" ? Strategy::grow : Strategy::exact;
        const DecompositionTree tree = decomposition_tree(doc.graph, params(), s);
        if (dot && !G.json) {
          std::cout << tree_dot(tree, doc);
          return 0;
        }
        std::vector<std::string> lines;
        tree_lines(tree, tree.root, doc, 0, lines);
        return emit({"tree", params(), "", strategy}, t, tree_json(tree, doc), lines);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("cograph", "exhaustive (alpha,beta)-cotree search");
    with_input(sub);
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const CographResult r = is_ab_cograph(doc.graph, params());
        std::vector<std::string> lines{r.is_cograph ? "cograph" : "not a cograph"};
        Json j{{"cograph", r.is_cograph}};
        if (r.is_cograph) {
          tree_lines(r.cotree, r.cotree.root, doc, 0, lines);
          j["cotree"] = tree_json(r.cotree, doc);
        }
        return emit({"cograph", params()}, t, j, lines, r.is_cograph);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("matching-cut", "bipartition whose crossing edges form a matching");
    with_input(sub);
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        const auto cut = matching_cut(doc.graph);
        if (!cut) return emit({"matching-cut", {}}, t, Json{{"found", false}}, {"none"}, false);
        Json edges = Json::array();
        std::vector<std::string> lines{"A " + format_set(cut->side_a, doc),
                                       "B " + format_set(cut->side_b, doc)};
        for (const auto& [u, v] : cut->cut_edges) {
          edges.push_back(Json::array({doc.name_of(u), doc.name_of(v)}));
          lines.push_back("cut " + doc.name_of(u) + " " + doc.name_of(v));
        }
        return emit({"matching-cut", {}}, t,
                    Json{{"found", true},
                         {"side_a", set_json(cut->side_a, doc)},
                         {"side_b", set_json(cut->side_b, doc)},
                         {"cut_edges", edges}},
                    lines);
      };
    });
  }
  {
    auto* sub = app.add_subcommand("bipartite-max", "maximal (alpha,beta)-modules inside one side");
    with_input(sub);
    static std::string side_file;
    sub->add_option("--side-file", side_file, "file listing the X side (0/1 mask or vertex list)");
    sub->callback([&] {
      action = [&] {
        Timer t;
        GraphDocument doc = load(input);
        check_budgets(doc);
        if (!side_file.empty()) doc.x_side = parse_side_spec(read_text_file(side_file), doc);
        const BipartiteGraph bg = to_bipartite(doc);
        const OneSidedFamily fam = maximal_one_sided_modules(bg, params());
        return emit({"bipartite-max", params()}, t,
                    Json{{"x_side", set_json(bg.x_side(), doc)},
                         {"members", family_json(fam.maximal_members, doc)}},
                    family_lines(fam.maximal_members, doc));
      };
    });
  }
  {
    auto* sub = app.add_subcommand("ksplitter", "classical splitters against a budget k");
    with_input(sub);
    with_set(sub);
    static std::size_t k = 0;
    sub->add_option("-k", k, "splitter budget")->required();
    sub->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        const VertexSet s = parse_vertex_set(set_spec, doc);
        const KSplitterReport r = k_splitter_report(doc.graph, s, k);
        return emit({"ksplitter", {}}, t,
                    Json{{"set", set_json(s, doc)},
                         {"k", k},
                         {"splitters", set_json(r.classical_splitters, doc)},
                         {"k_module", r.is_k_module}},
                    {"splitters: " + format_set(r.classical_splitters, doc),
                     r.is_k_module ? "k-splitter module" : "not a k-splitter module"},
                    r.is_k_module);
      };
    });
  }
  {
    auto* gen = app.add_subcommand("gen", "write a generated graph to stdout");
    gen->require_subcommand(1);
    auto* random = gen->add_subcommand("random", "Erdős–Rényi graph");
    static std::size_t n = 10;
    static double p = 0.5;
    random->add_option("-n", n, "order")->capture_default_str();
    random->add_option("-p", p, "edge probability")->capture_default_str();
    random->callback([&] {
      action = [&] {
        std::cout << "c random n=" << n << " p=" << p << " seed=" << G.seed << '\n'
                  << serialize_graph(gen_random(n, p, G.seed));
        return 0;
      };
    });
    auto* pmg = gen->add_subcommand("pmg4", "perfect-matching join of order-4 seeds");
    static std::size_t depth = 0;
    pmg->add_option("--depth,-d", depth, "number of join rounds")->capture_default_str();
    pmg->callback([&] {
      action = [&] {
        std::cout << "c pmg4 depth=" << depth << " seed=" << G.seed << '\n'
                  << serialize_graph(gen_pmg4(depth, G.seed));
        return 0;
      };
    });
    auto* fixture = gen->add_subcommand("fixture", "one of the named example graphs");
    static std::string name;
    fixture->add_option("name", name, "fixture name")->required()->check(CLI::IsMember(fixtures::names()));
    fixture->callback([&] {
      action = [&] {
        std::cout << serialize_graph(fixtures::by_name(name));
        return 0;
      };
    });
  }
  {
    auto* oracle = app.add_subcommand("oracle", "exhaustive reference computations");
    oracle->require_subcommand(1);
    auto* all = oracle->add_subcommand("all-modules", "every subset that is a module");
    all->add_option("graph", input, "graph file, or fixture:<name>")->required();
    all->callback([&] {
      action = [&] {
        Timer t;
        const GraphDocument doc = load(input);
        check_budgets(doc);
        const ModuleFamily fam = all_modules_oracle(doc.graph, params());
        return emit({"oracle all-modules", params()}, t,
                    Json{{"count", fam.members.size()}, {"members", family_json(fam.members, doc)}},
                    family_lines(fam.members, doc));
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return action ? action() : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
