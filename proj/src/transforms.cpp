#include "comblab/transforms.hpp"

#include <optional>

#include "comblab/errors.hpp"
#include "comblab/patterns.hpp"

namespace comblab {

Node strongify(const Node& sigma) {
  std::vector<std::uint8_t> codes;
  codes.reserve(2 * sigma.depth());
  for (std::size_t t = 0; t < sigma.depth(); ++t) {
    const Letter a = sigma.letter_at(t);
    codes.push_back(Letter{a.first, 0}.code());
    codes.push_back(a.code());
  }
  return Node::from_codes(std::move(codes));
}

IndexMap strongify_index(std::size_t depth) {
  if (2 * depth > depth_bound()) {
    throw ResourceError("strongification target depth " + std::to_string(2 * depth) + " exceeds bound " +
                        std::to_string(depth_bound()));
  }
  IndexMap f{depth, IndexMap::Codomain::Level2d, 2 * depth, {}, {}};
  for (const auto& sigma : enumerate_level(depth)) f.nodes.push_back(strongify(sigma));
  return f;
}

GridPoint grid_base(Letter a, std::int64_t w) {
#if COMBLAB_MUTANT == 2
  if (a.first == 0 && a.second == 0) return {0, 0};
#else
  if (a.first == 0 && a.second == 0) return {0, w};
#endif
  if (a.first == 0) return {w, 0};
  if (a.second == 0) return {2 * w, 3 * w};
#if COMBLAB_MUTANT == 3
  return {3 * w, 3 * w};
#else
  return {3 * w, 2 * w};
#endif
}

GridPoint grid_embed(const Node& sigma) {
  if (sigma.depth() > 31) throw ResourceError("grid embedding limited to depth 31");
  GridPoint p;
  std::int64_t w = 1;
  for (std::size_t t = sigma.depth(); t-- > 0;) {
    const GridPoint b = grid_base(sigma.letter_at(t), w);
    p.x += b.x;
    p.y += b.y;
    w *= 4;
  }
  return p;
}

IndexMap grid_embed_index(std::size_t depth) {
  IndexMap f{depth, IndexMap::Codomain::Grid, 0, {}, {}};
  for (const auto& sigma : enumerate_level(depth)) f.points.push_back(grid_embed(sigma));
  return f;
}

nlohmann::json to_json(const IndexMap& f) {
  nlohmann::json map = nlohmann::json::array();
  const auto sources = enumerate_level(f.depth);
  for (std::size_t r = 0; r < sources.size(); ++r) {
    if (f.codomain == IndexMap::Codomain::Grid) {
      map.push_back({encode(sources[r]), {f.points[r].x, f.points[r].y}});
    } else {
      map.push_back({encode(sources[r]), encode(f.nodes[r])});
    }
  }
  nlohmann::json j{{"depth", f.depth}};
  switch (f.codomain) {
    case IndexMap::Codomain::Level2d:
      j["codomain"] = "level2d";
      break;
    case IndexMap::Codomain::Level:
      j["codomain"] = "level";
      j["target_depth"] = f.target_depth;
      break;
    case IndexMap::Codomain::Grid:
      j["codomain"] = "grid";
      break;
  }
  j["map"] = std::move(map);
  return j;
}

IndexMap index_map_from_json(const nlohmann::json& j) {
  try {
    IndexMap f;
    f.depth = j.at("depth").get<std::size_t>();
    const auto codomain = j.at("codomain").get<std::string>();
    if (codomain == "level2d") {
      f.codomain = IndexMap::Codomain::Level2d;
      f.target_depth = 2 * f.depth;
    } else if (codomain == "level") {
      f.codomain = IndexMap::Codomain::Level;
      f.target_depth = j.at("target_depth").get<std::size_t>();
    } else {
      throw ArgumentError("index map codomain must be level or level2d, got " + codomain);
    }
    const std::size_t n = level_size(f.depth);
    std::vector<std::optional<Node>> table(n);
    for (const auto& entry : j.at("map")) {
      const Node source = decode(entry.at(0).get<std::string>());
      const Node target = decode(entry.at(1).get<std::string>());
      if (source.depth() != f.depth) throw ArgumentError("index map source " + encode(source) + " has wrong depth");
      if (target.depth() != f.target_depth) {
        throw ArgumentError("index map target " + encode(target) + " has wrong depth");
      }
      auto& slot = table[source.rank()];
      if (slot) throw ArgumentError("index map lists " + encode(source) + " twice");
      slot = target;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (!table[r]) throw ArgumentError("index map misses " + encode(Node::from_rank(r, f.depth)));
      f.nodes.push_back(*table[r]);
    }
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed index map: ") + e.what());
  }
}

namespace {

ConsistencyInterface pull_along_nodes(const ConsistencyInterface& ci, const IndexMap& f) {
  const std::size_t n = level_size(f.target_depth);
  if (ci.size() != n) {
    throw ArgumentError("family must be indexed by level " + std::to_string(f.target_depth) + " (" +
                        std::to_string(n) + " indices), got " + std::to_string(ci.size()));
  }
  std::vector<std::size_t> source;
  source.reserve(f.nodes.size());
  for (const auto& t : f.nodes) source.push_back(static_cast<std::size_t>(t.rank()));
  return ci.pullback(source, level_labels(f.depth));
}

}  // namespace

ConsistencyInterface strongify_weave(const ConsistencyInterface& ci, std::size_t depth) {
  return pull_along_nodes(ci, strongify_index(depth));
}

ConsistencyInterface pullback(const ConsistencyInterface& ci, const IndexMap& f) {
  if (f.codomain == IndexMap::Codomain::Grid) throw ArgumentError("pullback needs a level-to-level map");
  if (f.nodes.size() != level_size(f.depth)) throw ArgumentError("index map must be total on its level");
  for (std::size_t r = 0; r < f.nodes.size(); ++r) {
    const Node sigma = Node::from_rank(r, f.depth);
    if (!sigma.is_prefix_of(f.nodes[r])) {
      throw ArgumentError("prefix condition fails at " + encode(sigma) + " -> " + encode(f.nodes[r]));
    }
  }
  return pull_along_nodes(ci, f);
}

ConsistencyInterface grid_to_weave(const ConsistencyInterface& ci, std::size_t depth) {
  const auto f = grid_embed_index(depth);
  const std::size_t side = level_size(depth);
  if (ci.size() != side * side) {
    throw ArgumentError("grid family must be indexed by the " + std::to_string(side) + "x" + std::to_string(side) +
                        " square");
  }
  std::vector<std::size_t> source;
  for (const auto& p : f.points) source.push_back(static_cast<std::size_t>(p.x) * side + static_cast<std::size_t>(p.y));
  return ci.pullback(source, level_labels(depth));
}

EpsPoint epsilon_scale(const GridPoint& p) {
  if (p.x < 0 || p.y < 0) throw ArgumentError("epsilon scaling expects nonnegative coordinates");
  return EpsPoint{{p.x, static_cast<std::uint64_t>(p.x)}, {p.y, static_cast<std::uint64_t>(p.y)}};
}

nlohmann::json to_json(const EpsCoord& c) { return {c.a, c.b}; }
nlohmann::json to_json(const EpsPoint& p) { return {to_json(p.x), to_json(p.y)}; }

ScaledGrid epsilon_scale(const ConsistencyInterface& ci, std::size_t side) {
  if (ci.size() != side * side) throw ArgumentError("family must be indexed by the full square");
  ScaledGrid out{{}, ci};
  std::vector<std::size_t> identity;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < side * side; ++i) {
    const GridPoint p{static_cast<std::int64_t>(i / side), static_cast<std::int64_t>(i % side)};
    out.points.push_back(epsilon_scale(p));
    identity.push_back(i);
    labels.push_back(to_json(out.points.back()).dump());
  }
  out.ci = ci.pullback(identity, std::move(labels));
  return out;
}

}  // namespace comblab
