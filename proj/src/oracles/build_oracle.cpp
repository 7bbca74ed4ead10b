#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>

#include "comblab/errors.hpp"
#include "comblab/grid.hpp"
#include "comblab/oracles.hpp"

namespace comblab::oracle {

namespace {

// Holds when some tau makes every node of a extend tau^x and every node of b
// extend tau^y for letters with ok_a(x) and ok_b(y).
template <class OkA, class OkB>
bool split_exists(std::span<const Node> a, std::span<const Node> b, OkA ok_a, OkB ok_b) {
  if (a.empty() || b.empty()) return false;
  const Node& probe = a.front();
  for (std::size_t len = 0; len < probe.depth(); ++len) {
    const Node tau = probe.prefix(len);
    auto fits = [&](std::span<const Node> part, auto ok) {
      return std::all_of(part.begin(), part.end(), [&](const Node& x) {
        return x.depth() > len && tau.is_prefix_of(x) && ok(x.letter_at(len));
      });
    };
    if (fits(a, ok_a) && fits(b, ok_b)) return true;
  }
  return false;
}

std::vector<Node> pick(std::span<const Node> s, std::uint32_t mask) {
  std::vector<Node> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (mask >> i & 1U) out.push_back(s[i]);
  }
  return out;
}

bool relation(CombKind kind, std::span<const Node> a, std::span<const Node> b) {
  switch (kind) {
    case CombKind::Up:
      return narrowly_below(a, b);
    case CombKind::Right:
      return narrowly_left(a, b);
    case CombKind::WideRight:
      return widely_left(a, b);
  }
  return false;
}

}  // namespace

bool narrowly_below(std::span<const Node> a, std::span<const Node> b) {
  for (std::uint8_t i = 0; i < 2; ++i) {
    if (split_exists(a, b, [i](Letter x) { return x == Letter{i, 0}; }, [i](Letter x) { return x == Letter{i, 1}; })) {
      return true;
    }
  }
  return false;
}

bool narrowly_left(std::span<const Node> a, std::span<const Node> b) {
  for (std::uint8_t j = 0; j < 2; ++j) {
    if (split_exists(a, b, [j](Letter x) { return x == Letter{0, j}; }, [j](Letter x) { return x == Letter{1, j}; })) {
      return true;
    }
  }
  return false;
}

bool widely_left(std::span<const Node> a, std::span<const Node> b) {
  return split_exists(a, b, [](Letter x) { return x.first == 0; }, [](Letter x) { return x.first == 1; });
}

bool in_comb_class(std::span<const Node> input, const CombClass& c) {
  std::vector<Node> s(input.begin(), input.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw ArgumentError("empty set");
  if (s.size() > 20) throw ResourceError("build-tree oracle limited to 20 elements");

  std::map<std::pair<std::uint32_t, int>, bool> memo;
  std::function<bool(std::uint32_t, const CombClass&, int)> member = [&](std::uint32_t mask, const CombClass& cls,
                                                                          int key) {
    if (std::popcount(mask) == 1) return true;
    if (auto it = memo.find({mask, key}); it != memo.end()) return it->second;
    const CombClass part = cls.kind == CombKind::WideRight && cls.reading == WideReading::Literal
                               ? CombClass::right(cls.bound)
                               : cls;
    const int part_key = part == cls ? key : key + 1;
    bool found = false;
    for (std::uint32_t a = (mask - 1) & mask; a != 0 && !found; a = (a - 1) & mask) {
      if (!cls.bound.admits(static_cast<std::size_t>(std::popcount(a)))) continue;
      const std::uint32_t b = mask & ~a;
      const auto na = pick(s, a);
      const auto nb = pick(s, b);
      found = relation(cls.kind, na, nb) && member(a, part, part_key) && member(b, part, part_key);
    }
    memo[{mask, key}] = found;
    return found;
  };
  return member((s.size() == 32 ? 0U : (1U << s.size())) - 1U, c, 0);
}

bool in_binary_right_class(std::span<const std::string> input, SizeBound n) {
  std::vector<std::string> s(input.begin(), input.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw ArgumentError("empty set");
  std::function<bool(std::uint32_t)> member = [&](std::uint32_t mask) {
    if (std::popcount(mask) == 1) return true;
    for (std::uint32_t a = (mask - 1) & mask; a != 0; a = (a - 1) & mask) {
      if (!n.admits(static_cast<std::size_t>(std::popcount(a)))) continue;
      const std::uint32_t b = mask & ~a;
      const std::string& probe = s[static_cast<std::size_t>(std::countr_zero(a))];
      for (std::size_t len = 0; len < probe.size(); ++len) {
        const std::string sigma = probe.substr(0, len);
        bool ok = true;
        for (std::size_t i = 0; i < s.size() && ok; ++i) {
          if (!((mask >> i) & 1U)) continue;
          const char want = (a >> i & 1U) ? '0' : '1';
          ok = s[i].size() > len && s[i].compare(0, len, sigma) == 0 && s[i][len] == want;
        }
        if (ok && member(a) && member(b)) return true;
      }
    }
    return false;
  };
  return member((1U << s.size()) - 1U);
}

bool weave_holds(const ConsistencyInterface& ci, const WeaveParams& p) {
  const auto level = enumerate_level(p.depth);
  if (level.size() > 16) throw ResourceError("weave oracle limited to depth 2");
  const CombClass up = CombClass::up(p.m);
  const CombClass right = p.strong ? CombClass::wide_right(p.n, p.reading) : CombClass::right(p.n);
  for (std::uint32_t mask = 1; mask < (1U << level.size()); ++mask) {
    std::vector<Node> nodes;
    std::vector<std::size_t> family;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (mask >> i & 1U) {
        nodes.push_back(level[i]);
        family.push_back(i);
      }
    }
    if (is_comb(nodes, up) && !k_inconsistent(ci, family, p.k)) return false;
    if (is_comb(nodes, right) && !ci.consistent(family)) return false;
  }
  return true;
}

bool grid_holds(const ConsistencyInterface& ci, const GridParams& p) {
  const std::size_t n = p.side * p.side;
  if (n > 16) throw ResourceError("grid oracle limited to side 4");
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<GridPoint> pts;
    std::vector<std::size_t> family;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        pts.push_back({static_cast<std::int64_t>(i / p.side), static_cast<std::int64_t>(i % p.side)});
        family.push_back(i);
      }
    }
    std::span<const GridPoint> view(pts);
    if (is_antichain(view) && !k_inconsistent(ci, family, p.k)) return false;
    const bool chain = p.strong ? is_chain(view) : is_strict_chain(view);
    if (chain && !ci.consistent(family)) return false;
  }
  return true;
}

bool graph_pattern_holds(const ConsistencyInterface& ci, const Graph& g) {
  const std::size_t n = g.order();
  if (n > 16) throw ResourceError("graph pattern oracle limited to 16 vertices");
  for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::vector<std::size_t> family;
    bool independent = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1U)) continue;
      for (auto j : family) independent = independent && !g.adjacent(i, j);
      family.push_back(i);
    }
    if (ci.consistent(family) != independent) return false;
  }
  return true;
}

bool realizable_with_atoms(const Template& t, std::size_t atoms) {
  validate(t);
  const std::size_t n = t.labels.size();
  if (n * atoms > 20) throw ResourceError("assignment oracle limited to 2^20 assignments");
  auto mask_of = [](const std::vector<std::size_t>& s) {
    std::uint32_t m = 0;
    for (auto i : s) m |= 1U << i;
    return m;
  };
  std::vector<std::uint32_t> consist;
  for (const auto& s : t.must_consist) consist.push_back(mask_of(s));
  std::vector<std::vector<std::uint32_t>> k_subsets;
  for (const auto& s : t.must_k_inconsist) {
    const std::uint32_t m = mask_of(s);
    std::vector<std::uint32_t> subs;
    for (std::uint32_t sub = m; sub != 0; sub = (sub - 1) & m) {
      if (static_cast<std::size_t>(std::popcount(sub)) == t.k) subs.push_back(sub);
    }
    k_subsets.push_back(std::move(subs));
  }

  const std::uint32_t full = (1U << n) - 1U;
  std::vector<std::uint32_t> support(atoms, 0);
  // Family F is consistent iff some atom lies in every b_i, i in F, that is
  // iff F is contained in that atom's support.
  auto consistent = [&](std::uint32_t family) {
    if (family == 0) return true;
    return std::any_of(support.begin(), support.end(), [&](std::uint32_t s) { return (family & ~s) == 0; });
  };
  const std::uint64_t total = std::uint64_t{1} << (n * atoms);
  for (std::uint64_t code = 0; code < total; ++code) {
    for (std::size_t a = 0; a < atoms; ++a) support[a] = static_cast<std::uint32_t>(code >> (a * n)) & full;
    bool ok = std::all_of(consist.begin(), consist.end(), consistent);
    for (std::size_t i = 0; i < k_subsets.size() && ok; ++i) {
      ok = std::none_of(k_subsets[i].begin(), k_subsets[i].end(), consistent);
    }
    if (ok) return true;
  }
  return false;
}

std::optional<std::array<std::size_t, 4>> induced_p4(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const std::set<std::size_t> distinct{a, b, c, d};
          if (distinct.size() != 4) continue;
          const std::array<std::size_t, 4> v{a, b, c, d};
          bool path = true;
          for (std::size_t i = 0; i < 4 && path; ++i) {
            for (std::size_t j = i + 1; j < 4 && path; ++j) {
              path = g.adjacent(v[i], v[j]) == (j == i + 1);
            }
          }
          if (path) return v;
        }
      }
    }
  }
  return std::nullopt;
}

Graph random_graph(std::size_t n, unsigned num, unsigned den, std::mt19937_64& rng) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (rng() % den < num) g.add_edge(u, v);
    }
  }
  return g;
}

Template random_template(std::mt19937_64& rng, std::size_t max_indices, std::size_t max_consist) {
  Template t;
  const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_indices);
  for (std::size_t i = 0; i < n; ++i) t.labels.push_back(std::string(1, static_cast<char>('a' + i)));
  t.k = 2 + static_cast<std::size_t>(rng() % 2);
  auto random_set = [&] {
    const auto mask = rng() % (std::uint64_t{1} << n);
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) s.push_back(i);
    }
    return s;
  };
  const std::size_t consist = static_cast<std::size_t>(rng() % (max_consist + 1));
  for (std::size_t i = 0; i < consist; ++i) t.must_consist.push_back(random_set());
  const std::size_t inconsist = static_cast<std::size_t>(rng() % 4);
  for (std::size_t i = 0; i < inconsist; ++i) t.must_k_inconsist.push_back(random_set());
  return t;
}

std::vector<std::uint64_t> random_rank_set(std::size_t depth, std::size_t size, std::mt19937_64& rng) {
  const std::uint64_t n = level_size(depth);
  if (size > n) throw ArgumentError("sample larger than the level");
  std::set<std::uint64_t> picked;
  while (picked.size() < size) picked.insert(rng() % n);
  return {picked.begin(), picked.end()};
}

}  // namespace comblab::oracle
