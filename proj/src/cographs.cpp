#include "comblab/cographs.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "comblab/combs.hpp"
#include "comblab/patterns.hpp"

namespace comblab {

namespace {

Cotree::Kind kind_of(CographOp op) { return op == CographOp::Union ? Cotree::Kind::Union : Cotree::Kind::Join; }

const char* op_name(Cotree::Kind k) {
  switch (k) {
    case Cotree::Kind::Leaf:
      return "leaf";
    case Cotree::Kind::Union:
      return "union";
    case Cotree::Kind::Join:
      return "join";
  }
  return "?";
}

void collect_leaves(const Cotree& t, std::vector<std::size_t>& out) {
  if (t.kind == Cotree::Kind::Leaf) {
    out.push_back(t.vertex);
    return;
  }
  for (const auto& c : t.children) collect_leaves(c, out);
}

void check_shape(const Cotree& t) {
  if (t.kind == Cotree::Kind::Leaf) {
    if (!t.children.empty()) throw ArgumentError("cotree leaf with children");
    return;
  }
  if (t.children.size() < 2) throw ArgumentError("cotree internal node needs at least two children");
  for (const auto& c : t.children) check_shape(c);
}

// Throws unless the leaves are exactly 0..n-1; returns n.
std::size_t check_leaves(const Cotree& t) {
  check_shape(t);
  auto vs = leaves(t);
  std::vector<char> seen(vs.size(), 0);
  for (auto v : vs) {
    if (v >= vs.size()) throw ArgumentError("cotree leaf " + std::to_string(v) + " outside 0.." + std::to_string(vs.size() - 1));
    if (seen[v]) throw ArgumentError("duplicate cotree leaf " + std::to_string(v));
    seen[v] = 1;
  }
  return vs.size();
}

// Connected components of g[vs] (or of its complement), each sorted.
std::vector<std::vector<std::size_t>> components(const Graph& g, const std::vector<std::size_t>& vs, bool complement) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> done(vs.size(), 0);
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> comp{s};
    done[s] = 1;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t t = 0; t < vs.size(); ++t) {
        if (done[t] || t == comp[head]) continue;
        if (g.adjacent(vs[comp[head]], vs[t]) != complement) {
          done[t] = 1;
          comp.push_back(t);
        }
      }
    }
    std::vector<std::size_t> verts;
    for (auto i : comp) verts.push_back(vs[i]);
    std::sort(verts.begin(), verts.end());
    out.push_back(std::move(verts));
  }
  return out;
}

std::optional<Cotree> decompose(const Graph& g, const std::vector<std::size_t>& vs) {
  if (vs.size() == 1) return Cotree::leaf(vs.front());
  for (bool complement : {false, true}) {
    auto parts = components(g, vs, complement);
    if (parts.size() < 2) continue;
    std::vector<Cotree> children;
    for (const auto& p : parts) {
      auto child = decompose(g, p);
      if (!child) return std::nullopt;
      children.push_back(std::move(*child));
    }
    return Cotree{complement ? Cotree::Kind::Join : Cotree::Kind::Union, 0, std::move(children)};
  }
  return std::nullopt;
}

void embed(const Cotree& t, std::vector<Node>& map, std::vector<std::size_t>& members, std::size_t& depth) {
  if (t.kind == Cotree::Kind::Leaf) {
    map[t.vertex] = Node();
    members = {t.vertex};
    depth = 0;
    return;
  }
  const Letter right = t.kind == Cotree::Kind::Union ? Letter{1, 0} : Letter{0, 1};
  embed(t.children.front(), map, members, depth);
  for (std::size_t c = 1; c < t.children.size(); ++c) {
    std::vector<std::size_t> other;
    std::size_t other_depth = 0;
    embed(t.children[c], map, other, other_depth);
    const std::size_t d = std::max(depth, other_depth);
    auto place = [&](const std::vector<std::size_t>& vs, Letter head) {
      for (auto v : vs) {
        std::vector<std::uint8_t> codes{head.code()};
        codes.insert(codes.end(), map[v].codes().begin(), map[v].codes().end());
        codes.resize(d + 1, Letter{0, 0}.code());
        map[v] = Node::from_codes(std::move(codes));
      }
    };
    place(members, Letter{0, 0});
    place(other, right);
    members.insert(members.end(), other.begin(), other.end());
    depth = d + 1;
  }
}

void dot_node(const Cotree& t, std::ostringstream& out, std::size_t& next) {
  const std::size_t id = next++;
  if (t.kind == Cotree::Kind::Leaf) {
    out << "  n" << id << " [label=\"" << t.vertex << "\", shape=circle];\n";
    return;
  }
  out << "  n" << id << " [label=\"" << op_name(t.kind) << "\", shape=box];\n";
  for (const auto& c : t.children) {
    const std::size_t child = next;
    dot_node(c, out, next);
    out << "  n" << id << " -> n" << child << ";\n";
  }
}

Cotree random_shape(std::vector<std::size_t> vs, bool join, std::mt19937_64& rng) {
  if (vs.size() == 1) return Cotree::leaf(vs.front());
  const std::size_t max_children = std::min<std::size_t>(vs.size(), 4);
  const std::size_t m = 2 + static_cast<std::size_t>(rng() % (max_children - 1));
  // m - 1 distinct cut points in [1, |vs|).
  std::vector<std::size_t> cuts(vs.size() - 1);
  std::iota(cuts.begin(), cuts.end(), std::size_t{1});
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (cuts.size() - i));
    std::swap(cuts[i], cuts[j]);
  }
  cuts.resize(m - 1);
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(vs.size());
  std::vector<Cotree> children;
  std::size_t begin = 0;
  for (auto end : cuts) {
    children.push_back(random_shape({vs.begin() + begin, vs.begin() + end}, !join, rng));
    begin = end;
  }
  return Cotree{join ? Cotree::Kind::Join : Cotree::Kind::Union, 0, std::move(children)};
}

}  // namespace

Cotree Cotree::make(CographOp op, std::vector<Cotree> children) {
  if (children.size() < 2) throw ArgumentError("cotree internal node needs at least two children");
  return Cotree{kind_of(op), 0, std::move(children)};
}

Graph combine(CographOp op, const Graph& g0, const Graph& g1) {
  const std::size_t n0 = g0.order();
  Graph g(n0 + g1.order());
  for (auto [u, v] : g0.edges()) g.add_edge(u, v);
  for (auto [u, v] : g1.edges()) g.add_edge(n0 + u, n0 + v);
  if (op == CographOp::Join) {
    for (std::size_t u = 0; u < n0; ++u) {
      for (std::size_t v = 0; v < g1.order(); ++v) g.add_edge(u, n0 + v);
    }
  }
  return g;
}

std::vector<std::size_t> leaves(const Cotree& t) {
  std::vector<std::size_t> out;
  collect_leaves(t, out);
  return out;
}

Graph eval_cotree(const Cotree& t) {
  Graph g(check_leaves(t));
  std::function<std::vector<std::size_t>(const Cotree&)> go = [&](const Cotree& node) {
    if (node.kind == Cotree::Kind::Leaf) return std::vector<std::size_t>{node.vertex};
    std::vector<std::size_t> all;
    for (const auto& c : node.children) {
      auto part = go(c);
      if (node.kind == Cotree::Kind::Join) {
        for (auto u : all) {
          for (auto v : part) g.add_edge(u, v);
        }
      }
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  };
  go(t);
  return g;
}

Cotree normalize(const Cotree& t) {
  if (t.kind == Cotree::Kind::Leaf) return t;
  Cotree out{t.kind, 0, {}};
  for (const auto& c : t.children) {
    Cotree n = normalize(c);
    if (n.kind == t.kind) {
      for (auto& g : n.children) out.children.push_back(std::move(g));
    } else {
      out.children.push_back(std::move(n));
    }
  }
  return out;
}

std::optional<std::array<std::size_t, 4>> find_p4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || !g.adjacent(b, c) || g.adjacent(a, c)) continue;
        for (std::size_t d = 0; d < n; ++d) {
          if (d == a || d == b || !g.adjacent(c, d) || g.adjacent(a, d) || g.adjacent(b, d)) continue;
          return std::array<std::size_t, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::variant<Cotree, P4Certificate> cotree_of(const Graph& g) {
  if (g.order() == 0) throw ArgumentError("cotree of the empty graph is undefined");
  std::vector<std::size_t> vs(g.order());
  std::iota(vs.begin(), vs.end(), std::size_t{0});
  if (auto t = decompose(g, vs)) return std::move(*t);
  const auto p = find_p4(g);
  if (!p) throw std::logic_error("graph is neither decomposable nor contains an induced P4");
  return P4Certificate{*p};
}

CombGraph comb_graph(std::size_t depth) {
  if (depth > kCombGraphDepthLimit) {
    throw ResourceError("comb graph limited to depth " + std::to_string(kCombGraphDepthLimit));
  }
  const auto level = enumerate_level(depth);
  Graph g(level.size());
  for (std::size_t u = 0; u < level.size(); ++u) {
    for (std::size_t v = u + 1; v < level.size(); ++v) {
      if (classify_pair(level[u], level[v]) == PairVerdict::UpOne) g.add_edge(u, v);
    }
  }

  std::function<Cotree(std::size_t, std::size_t)> build = [&](std::size_t d, std::size_t offset) {
    if (d == 0) return Cotree::leaf(offset);
    const std::size_t block = level_size(d - 1);
    auto part = [&](std::size_t c) { return build(d - 1, offset + c * block); };
    return Cotree::make(CographOp::Union, {Cotree::make(CographOp::Join, {part(0), part(1)}),
                                           Cotree::make(CographOp::Join, {part(2), part(3)})});
  };
  return CombGraph{std::move(g), build(depth, 0)};
}

CographEmbedding embed_cograph(const Cotree& t) {
  CographEmbedding e;
  e.map.resize(check_leaves(t));
  std::vector<std::size_t> members;
  embed(t, e.map, members, e.depth);
  return e;
}

CographEmbedding pad_embedding(CographEmbedding e, std::size_t depth) {
  if (e.depth > depth) {
    throw ArgumentError("cotree needs depth " + std::to_string(e.depth) + ", only " + std::to_string(depth) +
                        " available");
  }
  for (auto& node : e.map) {
    std::vector<std::uint8_t> codes(node.codes().begin(), node.codes().end());
    codes.resize(depth, Letter{0, 0}.code());
    node = Node::from_codes(std::move(codes));
  }
  e.depth = depth;
  return e;
}

Cotree random_cotree(std::size_t n_leaves, std::uint64_t seed) {
  if (n_leaves == 0) throw ArgumentError("random cotree needs at least one leaf");
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> vs(n_leaves);
  std::iota(vs.begin(), vs.end(), std::size_t{0});
  for (std::size_t i = n_leaves; i > 1; --i) std::swap(vs[i - 1], vs[static_cast<std::size_t>(rng() % i)]);
  const bool join = (rng() & 1U) != 0;
  return random_shape(std::move(vs), join, rng);
}

nlohmann::json to_json(const Cotree& t) {
  if (t.kind == Cotree::Kind::Leaf) return {{"op", "leaf"}, {"vertex", t.vertex}};
  nlohmann::json children = nlohmann::json::array();
  for (const auto& c : t.children) children.push_back(to_json(c));
  return {{"op", op_name(t.kind)}, {"children", std::move(children)}};
}

Cotree cotree_from_json(const nlohmann::json& j) {
  try {
    const auto op = j.at("op").get<std::string>();
    if (op == "leaf") return Cotree::leaf(j.at("vertex").get<std::size_t>());
    if (op != "union" && op != "join") throw ArgumentError("unknown cotree op " + op);
    std::vector<Cotree> children;
    for (const auto& c : j.at("children")) children.push_back(cotree_from_json(c));
    return Cotree::make(op == "union" ? CographOp::Union : CographOp::Join, std::move(children));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed cotree: ") + e.what());
  }
}

std::string to_dot(const Cotree& t) {
  std::ostringstream out;
  out << "digraph cotree {\n";
  std::size_t next = 0;
  dot_node(t, out, next);
  out << "}\n";
  return out.str();
}

ConsistencyInterface graph_to_weave_oracle(const ConsistencyInterface& pattern, std::size_t depth,
                                           const CheckOptions& opts) {
  const auto g = comb_graph(depth);
  auto report = check_graph_pattern(pattern, g.graph, opts);
  if (!report.ok) {
    throw PatternViolation("input is not a pattern for the comb graph of depth " + std::to_string(depth),
                           std::move(report), pattern.labels());
  }
  std::vector<std::size_t> identity(pattern.size());
  std::iota(identity.begin(), identity.end(), std::size_t{0});
  return pattern.pullback(identity, level_labels(depth));
}

ConsistencyInterface weave_to_graph_oracle(const ConsistencyInterface& ci, std::size_t depth, const Cotree& t,
                                           const CheckOptions& opts) {
  const auto e = pad_embedding(embed_cograph(t), depth);
  WeaveParams p;
  p.depth = depth;
  p.k = 2;
  p.m = SizeBound::finite(1);
  p.n = SizeBound::omega();
  p.strong = true;
  auto report = check_weave(ci, p, opts);
  if (!report.ok) {
    throw PatternViolation("input is not a strong (2,1,omega)-weave of depth " + std::to_string(depth),
                           std::move(report), ci.labels());
  }
  std::vector<std::size_t> source;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < e.map.size(); ++v) {
    source.push_back(static_cast<std::size_t>(e.map[v].rank()));
    labels.push_back(std::to_string(v));
  }
  return ci.pullback(source, std::move(labels));
}

}  // namespace comblab
