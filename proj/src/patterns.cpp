#include "comblab/patterns.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "comblab/errors.hpp"
#include "comblab/node.hpp"

namespace comblab {

namespace {

// Brings a cursor that holds the previously visited set of a lexicographic
// DFS in line with `family`: the two always share family minus its last
// element as a prefix.
void sync(ConsistencyInterface::Cursor& cur, const std::vector<std::size_t>& family) {
  while (cur.family().size() >= family.size()) cur.pop();
  cur.push(family.back());
}

std::vector<Node> nodes_of(const std::vector<std::size_t>& ranks, std::size_t depth) {
  std::vector<Node> out;
  out.reserve(ranks.size());
  for (auto r : ranks) out.push_back(Node::from_rank(r, depth));
  return out;
}

nlohmann::json comb_certificate(const std::vector<std::size_t>& ranks, std::size_t depth, const CombClass& c) {
  const auto cert = is_comb(nodes_of(ranks, depth), c);
  return {{"class", c.to_string()}, {"comb", certificate_to_json(*cert)}};
}

std::string join_labels(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

GridPoint grid_point(std::size_t index, std::size_t side) {
  return GridPoint{static_cast<std::int64_t>(index / side), static_cast<std::int64_t>(index % side)};
}

// Every family obtained by dropping one member is consistent. Checkers report
// only such families, so each violation is minimal; the smaller inconsistent
// families are visited (and reported) on their own.
bool one_smaller_consistent(const ConsistencyInterface& ci, const std::vector<std::size_t>& family) {
  if (family.size() < 2) return true;
  std::vector<std::size_t> sub;
  for (std::size_t skip = 0; skip < family.size(); ++skip) {
    sub.clear();
    for (std::size_t i = 0; i < family.size(); ++i) {
      if (i != skip) sub.push_back(family[i]);
    }
    if (!ci.consistent(sub)) return false;
  }
  return true;
}

// For monotone interfaces: report a failed consistency requirement only when
// it is minimal; either way stop below it.
Walk on_inconsistent(const ConsistencyInterface& ci, ReportBuilder& rb, const std::vector<std::size_t>& family,
                     const std::function<nlohmann::json()>& certificate) {
  if (ci.monotone() && !one_smaller_consistent(ci, family)) return Walk::Prune;
  if (!rb.add(ViolationKind::Consistency, family, certificate())) return Walk::Stop;
  return ci.monotone() ? Walk::Prune : Walk::Descend;
}

void require_k(std::size_t k) {
  if (k < 2) throw ArgumentError("k must be at least 2");
}

}  // namespace

std::vector<std::string> level_labels(std::size_t depth) {
  std::vector<std::string> out;
  for (const auto& node : enumerate_level(depth)) out.push_back(encode(node));
  return out;
}

std::size_t default_weave_cap(std::size_t depth, std::size_t k) { return std::max({k, 2 * depth, std::size_t{8}}); }

Report check_weave(const ConsistencyInterface& ci, const WeaveParams& p, const CheckOptions& opts) {
  require_k(p.k);
  const std::size_t n = level_size(p.depth);
  if (ci.size() != n) {
    throw ArgumentError("weave of depth " + std::to_string(p.depth) + " needs " + std::to_string(n) + " indices, got " +
                        std::to_string(ci.size()));
  }
  const std::size_t cap = std::min(opts.cap.value_or(default_weave_cap(p.depth, p.k)), n);
  ReportBuilder rb(cap, opts.max_violations);

  const CombClass up = CombClass::up(p.m);
  if (p.k <= n) {
    auto cur = ci.cursor();
    for_each_comb(p.depth, up, p.k, [&](const std::vector<std::size_t>& fam) {
      sync(cur, fam);
      if (fam.size() < p.k) return Walk::Descend;
      if (cur.consistent() && !rb.add(ViolationKind::Inconsistency, fam, comb_certificate(fam, p.depth, up))) {
        return Walk::Stop;
      }
      return Walk::Prune;
    });
  }

  const CombClass right = p.strong ? CombClass::wide_right(p.n, p.reading) : CombClass::right(p.n);
  if (!rb.full()) {
    auto cur = ci.cursor();
    for_each_comb(p.depth, right, cap, [&](const std::vector<std::size_t>& fam) {
      sync(cur, fam);
      if (cur.consistent()) return Walk::Descend;
      return on_inconsistent(ci, rb, fam, [&] { return comb_certificate(fam, p.depth, right); });
    });
  }
  return std::move(rb).finish();
}

std::vector<std::string> grid_labels(std::size_t side) {
  std::vector<std::string> out;
  out.reserve(side * side);
  for (std::size_t i = 0; i < side * side; ++i) out.push_back(grid_label(grid_point(i, side)));
  return out;
}

std::size_t default_grid_cap(std::size_t side, std::size_t k) {
  return std::max({k, side == 0 ? std::size_t{0} : 2 * side - 1, std::size_t{8}});
}

Report check_grid(const ConsistencyInterface& ci, const GridParams& p, const CheckOptions& opts) {
  require_k(p.k);
  const std::size_t n = p.side * p.side;
  if (ci.size() != n) {
    throw ArgumentError("grid of side " + std::to_string(p.side) + " needs " + std::to_string(n) + " indices, got " +
                        std::to_string(ci.size()));
  }
  const std::size_t cap = std::min(opts.cap.value_or(default_grid_cap(p.side, p.k)), n);
  ReportBuilder rb(cap, opts.max_violations);

  auto pairwise = [&](auto rel) {
    return [&, rel](const std::vector<std::size_t>& cur, std::size_t x) {
      const GridPoint px = grid_point(x, p.side);
      return std::all_of(cur.begin(), cur.end(), [&](std::size_t y) { return rel(grid_point(y, p.side), px); });
    };
  };

  if (p.k <= n) {
    auto cur = ci.cursor();
    for_each_hereditary_subset(
        n, p.k, pairwise([](const GridPoint& a, const GridPoint& b) { return !comparable(a, b); }),
        [&](const std::vector<std::size_t>& fam) {
          sync(cur, fam);
          if (fam.size() < p.k) return Walk::Descend;
          if (cur.consistent() && !rb.add(ViolationKind::Inconsistency, fam, {{"relation", "antichain"}})) {
            return Walk::Stop;
          }
          return Walk::Prune;
        });
  }

  if (!rb.full()) {
    auto cur = ci.cursor();
    const char* relation = p.strong ? "chain" : "strict chain";
    auto visit = [&](const std::vector<std::size_t>& fam) {
      sync(cur, fam);
      if (cur.consistent()) return Walk::Descend;
      return on_inconsistent(ci, rb, fam, [&] { return nlohmann::json{{"relation", relation}}; });
    };
    if (p.strong) {
      for_each_hereditary_subset(n, cap, pairwise([](const GridPoint& a, const GridPoint& b) { return comparable(a, b); }),
                                 visit);
    } else {
      for_each_hereditary_subset(
          n, cap, pairwise([](const GridPoint& a, const GridPoint& b) { return strictly_comparable(a, b); }), visit);
    }
  }
  return std::move(rb).finish();
}

std::size_t default_graph_cap(std::size_t order) { return order <= 16 ? order : 8; }

Report check_graph_pattern(const ConsistencyInterface& ci, const Graph& g, const CheckOptions& opts) {
  const std::size_t n = g.order();
  if (ci.size() != n) {
    throw ArgumentError("graph pattern needs " + std::to_string(n) + " indices, got " + std::to_string(ci.size()));
  }
  const std::size_t cap = std::min(opts.cap.value_or(default_graph_cap(n)), n);
  ReportBuilder rb(cap, opts.max_violations);
  auto cur = ci.cursor();
  for_each_hereditary_subset(
      n, cap, [](const std::vector<std::size_t>&, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& fam) {
        sync(cur, fam);
        const bool consistent = cur.consistent();
        std::optional<std::pair<std::size_t, std::size_t>> edge;
        for (std::size_t a = 0; a < fam.size() && !edge; ++a) {
          for (std::size_t b = a + 1; b < fam.size(); ++b) {
            if (g.adjacent(fam[a], fam[b])) {
              edge = {fam[a], fam[b]};
              break;
            }
          }
        }
        if (consistent && edge) {
          // Under monotonicity the minimal such family is the edge itself.
          if ((!ci.monotone() || fam.size() == 2) &&
              !rb.add(ViolationKind::Inconsistency, fam, {{"edge", {edge->first, edge->second}}})) {
            return Walk::Stop;
          }
        } else if (!consistent && !edge) {
          return on_inconsistent(ci, rb, fam, [] { return nlohmann::json{{"independent", true}}; });
        }
        return (!consistent && ci.monotone()) ? Walk::Prune : Walk::Descend;
      });
  return std::move(rb).finish();
}

void validate(const Template& t) {
  require_k(t.k);
  auto check = [&](const std::vector<std::vector<std::size_t>>& sets) {
    for (const auto& s : sets) {
      for (auto i : s) {
        if (i >= t.labels.size()) throw ArgumentError("template index " + std::to_string(i) + " out of range");
      }
    }
  };
  check(t.must_consist);
  check(t.must_k_inconsist);
}

std::optional<SetSystem> realizable(const Template& t) {
  validate(t);
  std::set<std::vector<std::size_t>> consist;
  for (auto s : t.must_consist) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!s.empty()) consist.insert(std::move(s));
  }
  for (auto inc : t.must_k_inconsist) {
    std::sort(inc.begin(), inc.end());
    inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
    for (const auto& c : consist) {
      std::vector<std::size_t> common;
      std::set_intersection(inc.begin(), inc.end(), c.begin(), c.end(), std::back_inserter(common));
      if (common.size() >= t.k) return std::nullopt;
    }
  }

  SetSystem s = SetSystem::empty({}, t.labels);
  for (const auto& c : consist) {
    std::vector<std::string> names;
    for (auto i : c) names.push_back(t.labels[i]);
    const auto atom = s.add_atom("{" + join_labels(names, ",") + "}");
    for (auto i : c) s.sets[i].set(atom);
  }

  const auto ci = ConsistencyInterface::from_sets(s);
  for (const auto& c : t.must_consist) {
    if (!ci.consistent(c)) throw std::logic_error("realizing system leaves a required family inconsistent");
  }
  for (const auto& inc : t.must_k_inconsist) {
    if (!k_inconsistent(ci, inc, t.k)) throw std::logic_error("realizing system leaves a k-subfamily consistent");
  }
  return s;
}

nlohmann::json to_json(const Template& t) {
  auto sets = [&](const std::vector<std::vector<std::size_t>>& ss) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : ss) {
      nlohmann::json row = nlohmann::json::array();
      for (auto i : s) row.push_back(t.labels.at(i));
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"indices", t.labels},
          {"k", t.k},
          {"must_consist", sets(t.must_consist)},
          {"must_k_inconsist", sets(t.must_k_inconsist)}};
}

Template template_from_json(const nlohmann::json& j) {
  try {
    Template t;
    t.labels = j.at("indices").get<std::vector<std::string>>();
    t.k = j.value("k", std::size_t{2});
    auto index_of = [&](const std::string& label) {
      const auto it = std::find(t.labels.begin(), t.labels.end(), label);
      if (it == t.labels.end()) throw ArgumentError("unknown index " + label);
      return static_cast<std::size_t>(it - t.labels.begin());
    };
    auto sets = [&](const char* key) {
      std::vector<std::vector<std::size_t>> out;
      for (const auto& row : j.value(key, nlohmann::json::array())) {
        std::vector<std::size_t> s;
        for (const auto& label : row) s.push_back(index_of(label.get<std::string>()));
        out.push_back(std::move(s));
      }
      return out;
    };
    t.must_consist = sets("must_consist");
    t.must_k_inconsist = sets("must_k_inconsist");
    validate(t);
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed template: ") + e.what());
  }
}

ConsistencyInterface weave_witness(std::size_t depth, std::size_t k, SizeBound n, bool genuine_k,
                                   WideReading reading) {
  require_k(k);
  const std::size_t level = level_size(depth);
  std::vector<std::vector<std::size_t>> atoms;
  std::set<std::vector<std::size_t>> seen;
  auto add = [&](const std::vector<std::size_t>& members) {
    if (atoms.size() >= kWitnessAtomLimit) {
      throw ResourceError("witness universe exceeds " + std::to_string(kWitnessAtomLimit) + " atoms");
    }
    atoms.push_back(members);
  };
  for_each_comb(depth, CombClass::wide_right(n, reading), level, [&](const std::vector<std::size_t>& comb) {
    add(comb);
    if (genuine_k && comb.size() < k) seen.insert(comb);
    return Walk::Descend;
  });
  if (genuine_k) {
    for_each_hereditary_subset(
        level, k - 1, [](const std::vector<std::size_t>&, std::size_t) { return true; },
        [&](const std::vector<std::size_t>& s) {
          if (!seen.contains(s)) add(s);
          return Walk::Descend;
        });
  }

  const auto labels = level_labels(depth);
  std::vector<std::string> universe;
  universe.reserve(atoms.size());
  for (const auto& a : atoms) {
    std::vector<std::string> names;
    for (auto r : a) names.push_back(labels[r]);
    universe.push_back(join_labels(names, "+"));
  }
  SetSystem s = SetSystem::empty(std::move(universe), labels);
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (auto r : atoms[a]) s.sets[r].set(a);
  }
  return ConsistencyInterface::from_sets(std::move(s));
}

ConsistencyInterface grid_witness(std::size_t side, bool strong) {
  const std::size_t n = side * side;
  auto related = [&](std::size_t a, std::size_t b) {
    const GridPoint pa = grid_point(a, side);
    const GridPoint pb = grid_point(b, side);
    return strong ? comparable(pa, pb) : strictly_comparable(pa, pb);
  };
  std::vector<std::vector<std::size_t>> chains;
  std::size_t visited = 0;
  for_each_hereditary_subset(
      n, n,
      [&](const std::vector<std::size_t>& cur, std::size_t x) {
        return std::all_of(cur.begin(), cur.end(), [&](std::size_t y) { return related(x, y); });
      },
      [&](const std::vector<std::size_t>& chain) {
        if (++visited > kWitnessAtomLimit) {
          throw ResourceError("grid chain enumeration exceeds " + std::to_string(kWitnessAtomLimit) + " sets");
        }
        bool maximal = true;
        for (std::size_t x = 0; x < n && maximal; ++x) {
          if (std::find(chain.begin(), chain.end(), x) != chain.end()) continue;
          if (std::all_of(chain.begin(), chain.end(), [&](std::size_t y) { return related(x, y); })) maximal = false;
        }
        if (maximal) chains.push_back(chain);
        return Walk::Descend;
      });

  auto labels = grid_labels(side);
  std::vector<std::string> universe;
  for (const auto& c : chains) {
    std::vector<std::string> names;
    for (auto i : c) names.push_back(labels[i]);
    universe.push_back(join_labels(names, "|"));
  }
  SetSystem s = SetSystem::empty(std::move(universe), labels);
  for (std::size_t a = 0; a < chains.size(); ++a) {
    for (auto i : chains[a]) s.sets[i].set(a);
  }
  return ConsistencyInterface::from_sets(std::move(s));
}

ConsistencyInterface graph_witness(const Graph& g, bool materialize) {
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < g.order(); ++v) labels.push_back(std::to_string(v));
  if (!materialize) {
    return ConsistencyInterface::from_oracle(
        std::move(labels), [g](std::span<const std::size_t> family) { return g.independent(family); }, true);
  }

  std::vector<std::vector<std::size_t>> maximal;
  std::size_t visited = 0;
  for_each_hereditary_subset(
      g.order(), g.order(),
      [&](const std::vector<std::size_t>& cur, std::size_t x) {
        return std::none_of(cur.begin(), cur.end(), [&](std::size_t y) { return g.adjacent(x, y); });
      },
      [&](const std::vector<std::size_t>& set) {
        if (++visited > kWitnessAtomLimit) {
          throw ResourceError("independent set enumeration exceeds " + std::to_string(kWitnessAtomLimit) + " sets");
        }
        bool is_max = true;
        for (std::size_t x = 0; x < g.order() && is_max; ++x) {
          if (std::find(set.begin(), set.end(), x) != set.end()) continue;
          if (std::none_of(set.begin(), set.end(), [&](std::size_t y) { return g.adjacent(x, y); })) is_max = false;
        }
        if (is_max) maximal.push_back(set);
        return Walk::Descend;
      });

  std::vector<std::string> universe;
  for (const auto& m : maximal) {
    std::vector<std::string> names;
    for (auto v : m) names.push_back(labels[v]);
    universe.push_back(join_labels(names, "+"));
  }
  SetSystem s = SetSystem::empty(std::move(universe), labels);
  for (std::size_t a = 0; a < maximal.size(); ++a) {
    for (auto v : maximal[a]) s.sets[v].set(a);
  }
  return ConsistencyInterface::from_sets(std::move(s));
}

TriangleFreeDemo triangle_free_demo(std::size_t len) {
  if (len < 2) throw ArgumentError("triangle-free demo needs len >= 2");
  Graph p_graph(2 * len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) p_graph.add_edge(2 * i + 1, 2 * j);
  }
  Graph q_graph(2 * len);

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < len; ++i) labels.push_back("P" + std::to_string(i));
  auto pairs_oracle = [](const Graph& g) {
    return [g](std::span<const std::size_t> family) {
      std::vector<std::size_t> endpoints;
      for (auto i : family) {
        endpoints.push_back(2 * i);
        endpoints.push_back(2 * i + 1);
      }
      return g.independent(endpoints);
    };
  };
  auto p = ConsistencyInterface::from_oracle(labels, pairs_oracle(p_graph), true);
  auto q = ConsistencyInterface::from_oracle(labels, pairs_oracle(q_graph), true);
  return TriangleFreeDemo{std::move(p_graph), std::move(q_graph), std::move(p), std::move(q)};
}

}  // namespace comblab
