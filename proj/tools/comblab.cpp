// comblab: command-line front end for the checkers, witnesses and transforms.
//
// Exit codes: 0 ok/true, 1 checked and failed, 2 usage or contract error,
// 3 resource bound. JSON (or DOT) goes to stdout, a one-line summary to stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "comblab/cographs.hpp"
#include "comblab/combs.hpp"
#include "comblab/errors.hpp"
#include "comblab/genericity.hpp"
#include "comblab/patterns.hpp"
#include "comblab/transforms.hpp"
#include "comblab/verify.hpp"

namespace {

using nlohmann::json;
using namespace comblab;

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kResource = 3 };

// Flags shared by several subcommands.
struct Common {
  std::string in = "-";
  std::size_t max_violations = 10;
  std::optional<std::size_t> cap;
  std::uint64_t seed = verify::kDefaultSeed;
  bool dot = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(slurp(path));
  } catch (const json::parse_error& e) {
    throw ArgumentError(path + ": " + e.what());
  }
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

void summary(const std::string& line) { std::cerr << line << '\n'; }

CheckOptions options(const Common& c) {
  CheckOptions o;
  o.cap = c.cap;
  o.max_violations = c.max_violations;
  return o;
}

int report_exit(const Report& r, const std::vector<std::string>& labels, const std::string& what) {
  emit(to_json(r, labels));
  summary(what + ": " + (r.ok ? "ok" : std::to_string(r.violations.size()) + " violation(s)" +
                                           (r.truncated ? " (truncated)" : "")));
  return r.ok ? kOk : kFailed;
}

CombClass parse_class(const std::string& kind, const std::string& n, const std::string& reading) {
  const SizeBound bound = SizeBound::parse(n);
  const WideReading r = reading == "literal" ? WideReading::Literal : WideReading::Recursive;
  if (kind == "up") return CombClass::up(bound);
  if (kind == "right") return CombClass::right(bound);
  return CombClass::wide_right(bound, r);
}

json nodes_json(std::span<const Node> nodes) {
  json out = json::array();
  for (const auto& s : nodes) out.push_back(encode(s));
  return out;
}

ConsistencyInterface load_system(const std::string& path, const std::vector<std::string>& labels) {
  return ConsistencyInterface::from_sets(align_labels(set_system_from_json(read_json(path)), labels));
}

std::vector<std::string> vertex_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < n; ++v) out.push_back(std::to_string(v));
  return out;
}

// Predicates offered by generic-chain without a table.
std::vector<DensePredicate> demo_predicates(const std::string& demo, std::size_t count) {
  if (demo == "lengths") {
    std::vector<DensePredicate> out;
    for (std::size_t i = 1; i <= count; ++i) {
      out.push_back({"length>=" + std::to_string(i), [i](const std::string& s) { return s.size() >= i; }});
    }
    return out;
  }
  if (demo == "contains-one") {
    return {{"contains 1", [](const std::string& s) { return s.find('1') != std::string::npos; }}};
  }
  if (demo == "non-dense") return {{"length<2", [](const std::string& s) { return s.size() < 2; }}};
  throw ArgumentError("unknown demo " + demo + " (lengths, contains-one, non-dense)");
}

void apply_depth_env() {
  // depth_bound() reads COMBLAB_MAX_DEPTH itself; validate early for a clean error.
  if (const char* v = std::getenv("COMBLAB_MAX_DEPTH")) {
    try {
      std::size_t pos = 0;
      (void)std::stoul(v, &pos);
      if (pos != std::string(v).size()) throw std::invalid_argument(v);
    } catch (const std::exception&) {
      throw ArgumentError(std::string("COMBLAB_MAX_DEPTH must be a natural number, got ") + v);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comblab: combs, weaves, grids and cograph patterns"};
  app.require_subcommand(1);
  Common c;
  std::function<int()> action;

  auto add_in = [&](CLI::App* sub, const std::string& help) { sub->add_option("--in", c.in, help); };
  auto add_report_flags = [&](CLI::App* sub) {
    sub->add_option("--max-violations", c.max_violations, "Violations kept in the report");
    sub->add_option("--cap", c.cap, "Largest family examined by capped clauses");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", c.seed, "Random seed (default 0xC0FFEE)"); };

  // enum-combs
  std::size_t depth = 0;
  std::string kind = "up";
  std::string n_text = "omega";
  std::string m_text = "omega";
  std::string reading = "recursive";
  std::size_t max_size = 4;
  auto* enum_combs = app.add_subcommand("enum-combs", "List the combs of a class at one level");
  enum_combs->add_option("--depth", depth)->required();
  enum_combs->add_option("--class", kind)->check(CLI::IsMember({"up", "right", "wide"}));
  enum_combs->add_option("-n", n_text, "Size bound: a number or omega");
  enum_combs->add_option("--reading", reading)->check(CLI::IsMember({"recursive", "literal"}));
  enum_combs->add_option("--max-size", max_size);
  enum_combs->callback([&] {
    action = [&] {
      const auto cls = parse_class(kind, n_text, reading);
      json out = json::array();
      for (const auto& s : enumerate_combs(depth, cls, max_size)) out.push_back(nodes_json(s));
      emit(out);
      summary(std::to_string(out.size()) + " " + cls.to_string() + " combs at depth " + std::to_string(depth));
      return kOk;
    };
  });

  // classify-pair
  std::string node_a;
  std::string node_b;
  auto* classify = app.add_subcommand("classify-pair", "UpOne or WideRightOne for two nodes");
  classify->add_option("a", node_a)->required();
  classify->add_option("b", node_b)->required();
  classify->callback([&] {
    action = [&] {
      const auto v = classify_pair(decode(node_a), decode(node_b));
      emit({{"verdict", to_string(v)}});
      summary(node_a + " " + node_b + ": " + to_string(v));
      return kOk;
    };
  });

  // check-weave
  std::size_t k = 2;
  bool strong = false;
  auto* check_weave_cmd = app.add_subcommand("check-weave", "Check a set system over a level as a (k,m,n)-weave");
  check_weave_cmd->add_option("--depth", depth)->required();
  check_weave_cmd->add_option("-k", k);
  check_weave_cmd->add_option("-m", m_text);
  check_weave_cmd->add_option("-n", n_text);
  check_weave_cmd->add_flag("--strong", strong);
  check_weave_cmd->add_option("--reading", reading)->check(CLI::IsMember({"recursive", "literal"}));
  add_in(check_weave_cmd, "Set system JSON indexed by compact nodes");
  add_report_flags(check_weave_cmd);
  check_weave_cmd->callback([&] {
    action = [&] {
      const auto labels = level_labels(depth);
      const auto ci = load_system(c.in, labels);
      WeaveParams p{depth, k, SizeBound::parse(m_text), SizeBound::parse(n_text), strong,
                    reading == "literal" ? WideReading::Literal : WideReading::Recursive};
      return report_exit(check_weave(ci, p, options(c)), labels, "check-weave");
    };
  });

  // check-grid
  std::size_t side = 0;
  auto* check_grid_cmd = app.add_subcommand("check-grid", "Check a set system over [0,s)^2 as a k-grid");
  check_grid_cmd->add_option("--side", side)->required();
  check_grid_cmd->add_option("-k", k);
  check_grid_cmd->add_flag("--strong", strong);
  add_in(check_grid_cmd, "Set system JSON indexed by \"i,j\"");
  add_report_flags(check_grid_cmd);
  check_grid_cmd->callback([&] {
    action = [&] {
      const auto labels = grid_labels(side);
      const auto ci = load_system(c.in, labels);
      return report_exit(check_grid(ci, GridParams{side, k, strong}, options(c)), labels, "check-grid");
    };
  });

  // check-graph-pattern
  std::string graph_path;
  auto* check_graph_cmd = app.add_subcommand("check-graph-pattern", "Consistent exactly on independent sets");
  check_graph_cmd->add_option("--graph", graph_path, "Graph JSON")->required();
  add_in(check_graph_cmd, "Set system JSON indexed by vertex ids");
  add_report_flags(check_graph_cmd);
  check_graph_cmd->callback([&] {
    action = [&] {
      const Graph g = graph_from_json(read_json(graph_path));
      const auto labels = vertex_labels(g.order());
      const auto ci = load_system(c.in, labels);
      return report_exit(check_graph_pattern(ci, g, options(c)), labels, "check-graph-pattern");
    };
  });

  // realizable
  auto* realizable_cmd = app.add_subcommand("realizable", "Realize a consistency template by a set system");
  add_in(realizable_cmd, "Template JSON");
  realizable_cmd->callback([&] {
    action = [&] {
      const Template t = template_from_json(read_json(c.in));
      const auto s = realizable(t);
      if (!s) {
        emit({{"realizable", false}});
        summary("realizable: none");
        return kFailed;
      }
      emit({{"realizable", true}, {"system", to_json(*s)}});
      summary("realizable: " + std::to_string(s->universe.size()) + " atoms");
      return kOk;
    };
  });

  // witness weave|grid|graph
  bool genuine = false;
  auto* witness = app.add_subcommand("witness", "Canonical witness set systems");
  witness->require_subcommand(1);
  auto* witness_weave = witness->add_subcommand("weave", "Strong (k,m,n)-weave of depth d");
  witness_weave->add_option("--depth", depth)->required();
  witness_weave->add_option("-k", k);
  witness_weave->add_option("-m", m_text, "Accepted for symmetry; the witness works for every m");
  witness_weave->add_option("-n", n_text);
  witness_weave->add_flag("--genuine-k", genuine, "Keep (k-1)-subfamilies of up combs consistent");
  witness_weave->add_option("--reading", reading)->check(CLI::IsMember({"recursive", "literal"}));
  witness_weave->callback([&] {
    action = [&] {
      (void)SizeBound::parse(m_text);
      const auto ci = weave_witness(depth, k, SizeBound::parse(n_text), genuine,
                                    reading == "literal" ? WideReading::Literal : WideReading::Recursive);
      emit(to_json(*ci.set_system()));
      summary("weave witness: " + std::to_string(ci.set_system()->universe.size()) + " atoms");
      return kOk;
    };
  });
  auto* witness_grid = witness->add_subcommand("grid", "k-grid on [0,s)^2 (strong with --strong)");
  witness_grid->add_option("--side", side)->required();
  witness_grid->add_option("-k", k, "Accepted for symmetry; the witness is 2-inconsistent");
  witness_grid->add_flag("--strong", strong);
  witness_grid->callback([&] {
    action = [&] {
      if (k < 2) throw ArgumentError("k must be at least 2");
      const auto ci = grid_witness(side, strong);
      emit(to_json(*ci.set_system()));
      summary("grid witness: " + std::to_string(ci.set_system()->universe.size()) + " atoms");
      return kOk;
    };
  });
  auto* witness_graph = witness->add_subcommand("graph", "Pattern over maximal independent sets");
  witness_graph->add_option("--graph", graph_path, "Graph JSON")->required();
  witness_graph->callback([&] {
    action = [&] {
      const auto ci = graph_witness(graph_from_json(read_json(graph_path)), true);
      emit(to_json(*ci.set_system()));
      summary("graph witness: " + std::to_string(ci.set_system()->universe.size()) + " atoms");
      return kOk;
    };
  });

  // strongify
  std::optional<std::string> node_text;
  auto* strongify_cmd = app.add_subcommand("strongify", "Strongification of a node, a level, or a weave");
  strongify_cmd->add_option("node", node_text, "Compact node");
  strongify_cmd->add_option("--depth", depth, "Print the index map, or pull back --in along it");
  add_in(strongify_cmd, "Set system over level 2d (with --weave)");
  bool strongify_weave_flag = false;
  strongify_cmd->add_flag("--weave", strongify_weave_flag, "Pull back the --in family to level d");
  strongify_cmd->callback([&] {
    action = [&] {
      if (node_text) {
        const auto out = encode(strongify(decode(*node_text)));
        emit({{"node", *node_text}, {"image", out}});
        summary(*node_text + " -> " + out);
        return kOk;
      }
      if (strongify_weave_flag) {
        const auto ci = load_system(c.in, level_labels(2 * depth));
        const auto out = strongify_weave(ci, depth);
        emit(to_json(*out.set_system()));
        summary("strongify: pulled back to depth " + std::to_string(depth));
        return kOk;
      }
      emit(to_json(strongify_index(depth)));
      summary("strongify index map at depth " + std::to_string(depth));
      return kOk;
    };
  });

  // pullback
  std::string map_path;
  auto* pullback_cmd = app.add_subcommand("pullback", "Pull a level family back along a prefix-respecting map");
  pullback_cmd->add_option("--map", map_path, "IndexMap JSON")->required();
  add_in(pullback_cmd, "Set system over the target level");
  pullback_cmd->callback([&] {
    action = [&] {
      const IndexMap f = index_map_from_json(read_json(map_path));
      const auto ci = load_system(c.in, level_labels(f.target_depth));
      const auto out = pullback(ci, f);
      emit(to_json(*out.set_system()));
      summary("pullback to depth " + std::to_string(f.depth));
      return kOk;
    };
  });

  // grid-embed
  auto* grid_embed_cmd = app.add_subcommand("grid-embed", "Embedding of a level into the 4^d square");
  grid_embed_cmd->add_option("node", node_text, "Compact node");
  grid_embed_cmd->add_option("--depth", depth, "Print the index map for a level");
  grid_embed_cmd->callback([&] {
    action = [&] {
      if (node_text) {
        const auto p = grid_embed(decode(*node_text));
        emit({{"node", *node_text}, {"point", {p.x, p.y}}});
        summary(*node_text + " -> " + grid_label(p));
        return kOk;
      }
      emit(to_json(grid_embed_index(depth)));
      summary("grid embedding at depth " + std::to_string(depth));
      return kOk;
    };
  });

  // grid-to-weave
  auto* grid_to_weave_cmd = app.add_subcommand("grid-to-weave", "Pull a 4^d square family back to level d");
  grid_to_weave_cmd->add_option("--depth", depth)->required();
  add_in(grid_to_weave_cmd, "Set system over [0,4^d)^2 (a smaller square is accepted)");
  grid_to_weave_cmd->callback([&] {
    action = [&] {
      const auto parsed = set_system_from_json(read_json(c.in));
      std::size_t s = 0;
      while (s * s < parsed.labels.size()) ++s;
      const auto ci = ConsistencyInterface::from_sets(align_labels(parsed, grid_labels(s)));
      const auto out = grid_to_weave(ci, depth);
      emit(to_json(*out.set_system()));
      summary("grid-to-weave at depth " + std::to_string(depth));
      return kOk;
    };
  });

  // eps-scale
  auto* eps_cmd = app.add_subcommand("eps-scale", "Infinitesimal scaling of a point or a grid family");
  eps_cmd->add_option("point", node_text, "Grid point \"i,j\"");
  eps_cmd->add_option("--side", side, "Scale the --in family over [0,s)^2");
  add_in(eps_cmd, "Set system over [0,s)^2");
  eps_cmd->callback([&] {
    action = [&] {
      if (node_text) {
        const auto q = epsilon_scale(parse_grid_label(*node_text));
        emit({{"point", *node_text}, {"image", to_json(q)}});
        summary(*node_text + " -> " + to_json(q).dump());
        return kOk;
      }
      if (side == 0) throw ArgumentError("eps-scale needs a point or --side");
      const auto scaled = epsilon_scale(load_system(c.in, grid_labels(side)), side);
      emit(to_json(*scaled.ci.set_system()));
      summary("eps-scale: " + std::to_string(scaled.points.size()) + " points");
      return kOk;
    };
  });

  // cotree
  std::size_t leaves_n = 0;
  auto* cotree_cmd = app.add_subcommand("cotree", "Cotree of a graph, or an induced P4");
  add_in(cotree_cmd, "Graph JSON");
  cotree_cmd->add_option("--random", leaves_n, "Emit a random cotree on this many leaves instead");
  add_seed(cotree_cmd);
  cotree_cmd->add_flag("--dot", c.dot, "Graphviz output");
  cotree_cmd->callback([&] {
    action = [&] {
      if (leaves_n > 0) {
        const auto t = random_cotree(leaves_n, c.seed);
        std::cout << (c.dot ? to_dot(t) : to_json(t).dump(2) + "\n");
        summary("random cotree on " + std::to_string(leaves_n) + " leaves");
        return kOk;
      }
      const auto r = cotree_of(graph_from_json(read_json(c.in)));
      if (const auto* p4 = std::get_if<P4Certificate>(&r)) {
        emit({{"cograph", false}, {"p4", p4->path}});
        summary("not a cograph");
        return kFailed;
      }
      const auto& t = std::get<Cotree>(r);
      std::cout << (c.dot ? to_dot(t) : json{{"cograph", true}, {"cotree", to_json(t)}}.dump(2) + "\n");
      summary("cograph");
      return kOk;
    };
  });

  // find-p4
  auto* p4_cmd = app.add_subcommand("find-p4", "First induced path on four vertices");
  add_in(p4_cmd, "Graph JSON");
  p4_cmd->callback([&] {
    action = [&] {
      const auto p4 = find_p4(graph_from_json(read_json(c.in)));
      if (!p4) {
        emit({{"p4", nullptr}});
        summary("P4-free");
        return kOk;
      }
      emit({{"p4", *p4}});
      summary("induced P4 found");
      return kFailed;
    };
  });

  // comb-graph
  auto* comb_graph_cmd = app.add_subcommand("comb-graph", "Graph of up-1-comb pairs at a level");
  comb_graph_cmd->add_option("--depth", depth)->required();
  comb_graph_cmd->add_flag("--dot", c.dot, "Graphviz output of the graph");
  comb_graph_cmd->callback([&] {
    action = [&] {
      const auto cg = comb_graph(depth);
      if (c.dot) {
        std::cout << to_dot(cg.graph);
      } else {
        emit({{"depth", depth}, {"graph", to_json(cg.graph)}, {"cotree", to_json(cg.cotree)},
              {"edges", cg.graph.edge_count()}});
      }
      summary("comb graph at depth " + std::to_string(depth) + ": " + std::to_string(cg.graph.edge_count()) +
              " edges");
      return kOk;
    };
  });

  // embed-cograph
  std::optional<std::size_t> pad_depth;
  auto* embed_cmd = app.add_subcommand("embed-cograph", "Nodes realizing a cograph by up-1-comb pairs");
  add_in(embed_cmd, "Cotree JSON");
  embed_cmd->add_option("--depth", pad_depth, "Pad the embedding to this depth");
  embed_cmd->callback([&] {
    action = [&] {
      auto e = embed_cograph(cotree_from_json(read_json(c.in)));
      if (pad_depth) e = pad_embedding(std::move(e), *pad_depth);
      json map = json::array();
      for (std::size_t v = 0; v < e.map.size(); ++v) map.push_back({v, encode(e.map[v])});
      emit({{"depth", e.depth}, {"map", map}});
      summary("embedding depth " + std::to_string(e.depth));
      return kOk;
    };
  });

  // bridge graph-to-weave | weave-to-graph
  std::string cotree_path;
  auto* bridge = app.add_subcommand("bridge", "Move patterns between comb graphs and weaves");
  bridge->require_subcommand(1);
  auto* g2w = bridge->add_subcommand("graph-to-weave", "Reindex a comb-graph pattern by level d");
  g2w->add_option("--depth", depth)->required();
  add_in(g2w, "Set system indexed by vertex ids of comb_graph(d)");
  add_report_flags(g2w);
  g2w->callback([&] {
    action = [&] {
      const auto ci = load_system(c.in, vertex_labels(level_size(depth)));
      const auto out = graph_to_weave_oracle(ci, depth, options(c));
      emit(to_json(*out.set_system()));
      summary("graph-to-weave at depth " + std::to_string(depth));
      return kOk;
    };
  });
  auto* w2g = bridge->add_subcommand("weave-to-graph", "Pull a strong weave back to a cograph pattern");
  w2g->add_option("--depth", depth)->required();
  w2g->add_option("--cotree", cotree_path, "Cotree JSON")->required();
  add_in(w2g, "Set system over level d");
  add_report_flags(w2g);
  w2g->callback([&] {
    action = [&] {
      const auto ci = load_system(c.in, level_labels(depth));
      const auto out = weave_to_graph_oracle(ci, depth, cotree_from_json(read_json(cotree_path)), options(c));
      emit(to_json(*out.set_system()));
      summary("weave-to-graph at depth " + std::to_string(depth));
      return kOk;
    };
  });

  // triangle-free-demo
  std::size_t len = 4;
  auto* tf = app.add_subcommand("triangle-free-demo", "Finite pattern from the triangle-free random graph");
  tf->add_option("--len", len);
  tf->callback([&] {
    action = [&] {
      const auto demo = triangle_free_demo(len);
      json pairs = json::array();
      bool all_inconsistent = true;
      for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = i + 1; j < len; ++j) {
          const std::vector<std::size_t> fam{i, j};
          const bool cons = demo.p.consistent(fam);
          all_inconsistent = all_inconsistent && !cons;
          pairs.push_back({{"pair", {demo.p.labels()[i], demo.p.labels()[j]}}, {"consistent", cons}});
        }
      }
      std::vector<std::size_t> all(len);
      for (std::size_t i = 0; i < len; ++i) all[i] = i;
      const bool q_ok = demo.q.consistent(all);
      emit({{"len", len},
            {"p_graph", to_json(demo.p_graph)},
            {"q_graph", to_json(demo.q_graph)},
            {"p_pairs", pairs},
            {"q_family_consistent", q_ok}});
      summary(std::string("triangle-free demo: p side ") + (all_inconsistent ? "2-inconsistent" : "NOT 2-inconsistent") +
              ", q side " + (q_ok ? "consistent" : "NOT consistent"));
      return all_inconsistent && q_ok ? kOk : kFailed;
    };
  });

  // generic-chain
  std::string demo = "lengths";
  std::size_t steps = 5;
  std::size_t count = 5;
  std::string start;
  bool table = false;
  auto* gc = app.add_subcommand("generic-chain", "Chain meeting a list of dense requirements");
  gc->add_option("--demo", demo, "lengths | contains-one | non-dense (binary strings)");
  gc->add_option("--count", count, "Number of length requirements for the lengths demo");
  gc->add_option("--start", start, "Start element");
  gc->add_option("--steps", steps);
  gc->add_option("--in", c.in, "Finite requirement table JSON (replaces --demo)")
      ->each([&](const std::string&) { table = true; });
  gc->callback([&] {
    action = [&] {
      std::vector<ChainStep> chain;
      std::vector<DensePredicate> dense;
      try {
        if (table) {
          auto t = requirement_table_from_json(read_json(c.in));
          dense = t.dense;
          chain = generic_chain(t.poset, dense, gc->count("--start") ? start : t.start, steps);
        } else {
          dense = demo_predicates(demo, count);
          chain = generic_chain(binary_strings(), dense, start, steps);
        }
      } catch (const GenericityFailure& e) {
        emit({{"ok", false}, {"requirement", e.requirement()}, {"stuck_at", e.stuck_at()}, {"error", e.what()}});
        summary(std::string("generic-chain: ") + e.what());
        return kFailed;
      }
      emit(to_json(chain, dense));
      summary("generic-chain: " + std::to_string(chain.size() - 1) + " extensions");
      return kOk;
    };
  });

  // verify-paper
  std::size_t max_depth = 2;
  auto* vp = app.add_subcommand("verify-paper", "Run the lemma suite at desk scale");
  vp->add_option("--max-depth", max_depth);
  add_seed(vp);
  vp->callback([&] {
    action = [&] {
      const auto outcomes = verify::verify_paper(max_depth, c.seed);
      json out = json::array();
      bool ok = true;
      for (const auto& o : outcomes) {
        ok = ok && o.ok;
        // Timings stay on stderr so stdout is reproducible.
        out.push_back({{"check", o.name}, {"ok", o.ok}, {"detail", o.detail}});
        std::cerr << (o.ok ? "PASS " : "FAIL ") << o.name << " (" << o.detail << ", " << o.seconds << " s)\n";
      }
      emit({{"ok", ok}, {"max_depth", max_depth}, {"seed", c.seed}, {"checks", out}});
      return ok ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_depth_env();
    return action ? action() : kUsage;
  } catch (const PatternViolation& e) {
    emit(to_json(e.report(), e.labels()));
    summary(std::string("precondition failed: ") + e.what());
    return kUsage;
  } catch (const ArgumentError& e) {
    summary(std::string("error: ") + e.what());
    return kUsage;
  } catch (const json::exception& e) {
    summary(std::string("malformed JSON: ") + e.what());
    return kUsage;
  } catch (const ResourceError& e) {
    summary(std::string("resource bound: ") + e.what());
    return kResource;
  } catch (const std::bad_alloc&) {
    summary("resource bound: out of memory");
    return kResource;
  }
}
