#include "comblab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "comblab/cographs.hpp"
#include "comblab/combs.hpp"
#include "comblab/genericity.hpp"
#include "comblab/grid.hpp"
#include "comblab/oracles.hpp"
#include "comblab/patterns.hpp"
#include "comblab/transforms.hpp"

namespace comblab::verify {

namespace {

using Clock = std::chrono::steady_clock;

// Records the first failed expectation and counts the rest.
class Tally {
 public:
  explicit Tally(std::string name) : start_(Clock::now()) { out_.name = std::move(name); }

  template <class Why>
  bool expect(bool cond, Why&& why) {
    ++checks_;
    if (!cond && out_.ok) {
      out_.ok = false;
      out_.detail = why();
    }
    return cond;
  }

  bool failed() const noexcept { return !out_.ok; }

  Outcome finish(const std::string& summary = {}) {
    out_.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (out_.ok) out_.detail = (summary.empty() ? "" : summary + ", ") + std::to_string(checks_) + " checks";
    return out_;
  }

 private:
  Outcome out_;
  Clock::time_point start_;
  std::size_t checks_ = 0;
};

// Runs `body`, turning an escaped exception into a failure.
Outcome guarded(const std::string& name, const std::function<Outcome()>& body) {
  try {
    return body();
  } catch (const std::exception& e) {
    return Outcome{name, false, std::string("exception: ") + e.what(), 0};
  }
}

std::string show(std::span<const Node> nodes) {
  std::string out = "{";
  for (std::size_t i = 0; i < nodes.size(); ++i) out += (i ? "," : "") + encode(nodes[i]);
  return out + "}";
}

std::string show(const std::vector<std::size_t>& family, const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) out += (i ? "," : "") + labels[family[i]];
  return out + "}";
}

std::vector<Node> nodes_at(const std::vector<Node>& level, const std::vector<std::size_t>& idx) {
  std::vector<Node> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(level[i]);
  return out;
}

const std::vector<SizeBound>& bounds() {
  static const std::vector<SizeBound> b{SizeBound::finite(1), SizeBound::finite(2), SizeBound::omega()};
  return b;
}

bool has_up_pair(std::span<const Node> s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (classify_pair(s[i], s[j]) == PairVerdict::UpOne) return true;
    }
  }
  return false;
}

bool has_kind(const std::vector<SplitWitness>& ws, SplitKind k) {
  return std::any_of(ws.begin(), ws.end(), [k](const SplitWitness& w) { return w.kind == k; });
}

GridPoint point_of(std::size_t index, std::size_t side) {
  return {static_cast<std::int64_t>(index / side), static_cast<std::int64_t>(index % side)};
}

std::vector<GridPoint> points_of(const std::vector<std::size_t>& family, std::size_t side) {
  std::vector<GridPoint> out;
  for (auto i : family) out.push_back(point_of(i, side));
  return out;
}

// Indices whose set contains `atom`.
std::vector<std::size_t> members_of(const SetSystem& s, std::size_t atom) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < s.sets.size(); ++i) {
    if (s.sets[i].test(atom)) out.push_back(i);
  }
  return out;
}

// All cotrees over `vs` with binary internal nodes, left/right order mattering.
std::vector<Cotree> binary_cotrees(const std::vector<std::size_t>& vs) {
  if (vs.size() == 1) return {Cotree::leaf(vs.front())};
  std::vector<Cotree> out;
  const std::uint32_t full = (1U << vs.size()) - 1U;
  for (std::uint32_t a = 1; a < full; ++a) {
    std::vector<std::size_t> left;
    std::vector<std::size_t> right;
    for (std::size_t i = 0; i < vs.size(); ++i) ((a >> i & 1U) ? left : right).push_back(vs[i]);
    const auto ls = binary_cotrees(left);
    const auto rs = binary_cotrees(right);
    for (auto op : {CographOp::Union, CographOp::Join}) {
      for (const auto& l : ls) {
        for (const auto& r : rs) out.push_back(Cotree::make(op, {l, r}));
      }
    }
  }
  return out;
}

}  // namespace

Outcome pair_dichotomy(std::size_t max_depth) {
  return guarded("pair dichotomy", [&] {
    Tally t("pair dichotomy");
    std::size_t pairs = 0;
    for (std::size_t d = 0; d <= max_depth && !t.failed(); ++d) {
      const auto level = enumerate_level(d);
      const bool with_oracle = d <= 3;
      for (std::size_t u = 0; u < level.size() && !t.failed(); ++u) {
        for (std::size_t v = u + 1; v < level.size(); ++v) {
          const std::array<Node, 2> pair{level[u], level[v]};
          const bool up = is_comb(pair, CombClass::up(SizeBound::finite(1))).has_value();
          const bool wide = is_comb(pair, CombClass::wide_right(SizeBound::finite(1))).has_value();
          const PairVerdict verdict = classify_pair(level[u], level[v]);
          ++pairs;
          t.expect(up != wide, [&] { return "pair " + show(pair) + " is in both or neither class"; });
          t.expect((verdict == PairVerdict::UpOne) == up,
                   [&] { return "classify_pair disagrees with is_comb on " + show(pair); });
          if (with_oracle) {
            t.expect(oracle::in_comb_class(pair, CombClass::up(SizeBound::finite(1))) == up,
                     [&] { return "build-tree oracle disagrees on " + show(pair); });
          }
          if (t.failed()) break;
        }
      }
    }
    return t.finish(std::to_string(pairs) + " pairs");
  });
}

Outcome wide_characterization(std::size_t exhaustive_depth, std::size_t sampled_depth, std::size_t samples,
                              std::uint64_t seed) {
  return guarded("wide characterization", [&] {
    Tally t("wide characterization");
    const CombClass wide = CombClass::wide_right(SizeBound::omega());
    const auto level = enumerate_level(exhaustive_depth);
    if (level.size() > 16) throw ResourceError("exhaustive wide check limited to depth 2");
    std::size_t sets = 0;
    for (std::uint32_t mask = 1; mask < (1U << level.size()) && !t.failed(); ++mask) {
      std::vector<Node> s;
      for (std::size_t i = 0; i < level.size(); ++i) {
        if (mask >> i & 1U) s.push_back(level[i]);
      }
      ++sets;
      t.expect(is_comb(s, wide).has_value() == !has_up_pair(s),
               [&] { return "depth " + std::to_string(exhaustive_depth) + " set " + show(s); });
    }
    if (samples > 0) {
      std::mt19937_64 rng(seed);
      const auto sample_level = enumerate_level(sampled_depth);
      const std::size_t max_size = std::min<std::size_t>(8, sample_level.size());
      for (std::size_t i = 0; i < samples && !t.failed(); ++i) {
        const std::size_t size = 1 + static_cast<std::size_t>(rng() % max_size);
        std::vector<Node> s;
        for (auto r : oracle::random_rank_set(sampled_depth, size, rng)) s.push_back(sample_level[r]);
        ++sets;
        t.expect(is_comb(s, wide).has_value() == !has_up_pair(s),
                 [&] { return "depth " + std::to_string(sampled_depth) + " sample " + show(s); });
      }
    }
    return t.finish(std::to_string(sets) + " sets");
  });
}

Outcome recognition_vs_build_trees(std::size_t depth, std::size_t max_size) {
  return guarded("recognition vs build trees", [&] {
    Tally t("recognition vs build trees");
    std::vector<CombClass> classes;
    for (const auto& n : bounds()) {
      classes.push_back(CombClass::up(n));
      classes.push_back(CombClass::right(n));
      classes.push_back(CombClass::wide_right(n, WideReading::Recursive));
      classes.push_back(CombClass::wide_right(n, WideReading::Literal));
    }
    const auto level = enumerate_level(depth);
    std::size_t sets = 0;
    std::vector<std::uint64_t> ranks;
    for_each_hereditary_subset(
        level.size(), max_size, [](const std::vector<std::size_t>&, std::size_t) { return true; },
        [&](const std::vector<std::size_t>& idx) {
          const auto s = nodes_at(level, idx);
          ranks.assign(idx.begin(), idx.end());
          ++sets;
          for (const auto& c : classes) {
            const auto cert = is_comb(s, c);
            t.expect(cert.has_value() == oracle::in_comb_class(s, c),
                     [&] { return c.to_string() + " on " + show(s) + ": is_comb disagrees with build trees"; });
            t.expect(accepts_ranks(ranks, c) == cert.has_value(),
                     [&] { return c.to_string() + " on " + show(s) + ": accepts_ranks disagrees"; });
            if (cert) {
              t.expect(verify_certificate(*cert, c),
                       [&] { return c.to_string() + " on " + show(s) + ": certificate does not verify"; });
            }
          }
          return t.failed() ? Walk::Stop : Walk::Descend;
        });
    return t.finish(std::to_string(sets) + " sets x " + std::to_string(classes.size()) + " classes");
  });
}

Outcome subset_closure(std::size_t depth) {
  return guarded("subset closure", [&] {
    Tally t("subset closure");
    std::vector<CombClass> classes;
    for (const auto& n : bounds()) {
      classes.push_back(CombClass::up(n));
      classes.push_back(CombClass::right(n));
      classes.push_back(CombClass::wide_right(n));
    }
    const auto level = enumerate_level(depth);
    if (level.size() > 16) throw ResourceError("subset closure check limited to depth 2");
    std::size_t accepted = 0;
    for (const auto& c : classes) {
      const PairVerdict expected = c.kind == CombKind::Up ? PairVerdict::UpOne : PairVerdict::WideRightOne;
      for (std::uint32_t mask = 1; mask < (1U << level.size()) && !t.failed(); ++mask) {
        std::vector<Node> s;
        for (std::size_t i = 0; i < level.size(); ++i) {
          if (mask >> i & 1U) s.push_back(level[i]);
        }
        if (!is_comb(s, c)) continue;
        ++accepted;
        for (std::size_t drop = 0; drop < s.size() && s.size() > 1; ++drop) {
          std::vector<Node> sub = s;
          sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
          t.expect(is_comb(sub, c).has_value(),
                   [&] { return c.to_string() + ": " + show(s) + " accepted but " + show(sub) + " rejected"; });
        }
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = i + 1; j < s.size(); ++j) {
            t.expect(classify_pair(s[i], s[j]) == expected, [&] {
              return c.to_string() + ": pair " + encode(s[i]) + "," + encode(s[j]) + " inside " + show(s) +
                     " has the wrong verdict";
            });
          }
        }
      }
    }
    return t.finish(std::to_string(accepted) + " accepted sets");
  });
}

Outcome strongification(std::size_t pair_depth, std::size_t comb_depth, std::size_t comb_size) {
  return guarded("strongification", [&] {
    Tally t("strongification");
    const std::vector<std::pair<std::string, std::string>> table{{"2", "22"}, {"1", "01"}, {"13", "0123"}};
    for (const auto& [from, to] : table) {
      const auto got = encode(strongify(decode(from)));
      t.expect(got == to, [&] { return "strongify(" + from + ") = " + got + ", expected " + to; });
    }

    std::size_t pairs = 0;
    for (std::size_t d = 1; d <= pair_depth && !t.failed(); ++d) {
      const auto level = enumerate_level(d);
      std::vector<Node> image;
      for (const auto& s : level) image.push_back(strongify(s));
      for (std::size_t u = 0; u < level.size(); ++u) {
        for (std::size_t v = 0; v < level.size(); ++v) {
          if (u == v) continue;
          ++pairs;
          const auto before = split_relation(std::span(&level[u], 1), std::span(&level[v], 1));
          const auto after = split_relation(std::span(&image[u], 1), std::span(&image[v], 1));
          const std::string what = encode(level[u]) + " -> " + encode(level[v]);
          if (has_kind(before, SplitKind::NarrowBelow)) {
            t.expect(has_kind(after, SplitKind::NarrowBelow), [&] { return "NarrowBelow lost for " + what; });
          }
          if (has_kind(before, SplitKind::NarrowLeft)) {
            t.expect(has_kind(after, SplitKind::WideLeft), [&] { return "NarrowLeft not sent to WideLeft for " + what; });
          }
        }
      }
    }

    std::size_t combs = 0;
    for (std::size_t d = 0; d <= comb_depth && !t.failed(); ++d) {
      const auto level = enumerate_level(d);
      for_each_hereditary_subset(
          level.size(), comb_size, [](const std::vector<std::size_t>&, std::size_t) { return true; },
          [&](const std::vector<std::size_t>& idx) {
            const auto s = nodes_at(level, idx);
            std::vector<Node> img;
            for (const auto& x : s) img.push_back(strongify(x));
            for (const auto& n : bounds()) {
              if (is_comb(s, CombClass::up(n))) {
                ++combs;
                t.expect(is_comb(img, CombClass::up(n)).has_value(),
                         [&] { return "image of up comb " + show(s) + " is not Up(" + n.to_string() + ")"; });
              }
              if (is_comb(s, CombClass::right(n))) {
                ++combs;
                t.expect(is_comb(img, CombClass::wide_right(n)).has_value(), [&] {
                  return "image of right comb " + show(s) + " is not WideRight(" + n.to_string() + ")";
                });
              }
            }
            return t.failed() ? Walk::Stop : Walk::Descend;
          });
    }

    const auto w = weave_witness(2, 2, SizeBound::finite(1), false);
    const auto pulled = strongify_weave(w, 1);
    WeaveParams p{1, 2, SizeBound::finite(1), SizeBound::finite(1), true, WideReading::Recursive};
    const auto report = check_weave(pulled, p);
    t.expect(report.ok, [] { return "strongified (2,1,1) witness fails the strong checker"; });
    t.expect(oracle::weave_holds(pulled, p), [] { return "strongified (2,1,1) witness fails the weave oracle"; });
    return t.finish(std::to_string(pairs) + " pairs, " + std::to_string(combs) + " comb images");
  });
}

Outcome grid_embedding(std::size_t max_depth) {
  return guarded("grid embedding", [&] {
    Tally t("grid embedding");
    const std::vector<std::pair<std::string, GridPoint>> table{
        {"0", {0, 1}}, {"1", {1, 0}}, {"2", {2, 3}}, {"3", {3, 2}}};
    for (const auto& [node, point] : table) {
      const auto got = grid_embed(decode(node));
      t.expect(got == point, [&, node = node] { return "grid_embed(" + node + ") = " + grid_label(got); });
    }
    std::size_t pairs = 0;
    for (std::size_t d = 0; d <= max_depth && !t.failed(); ++d) {
      const auto level = enumerate_level(d);
      const auto f = grid_embed_index(d);
      const auto side = static_cast<std::int64_t>(level.size());
      std::set<std::pair<std::int64_t, std::int64_t>> seen;
      for (std::size_t u = 0; u < level.size(); ++u) {
        const GridPoint p = f.points[u];
        t.expect(p.x >= 0 && p.y >= 0 && p.x < side && p.y < side,
                 [&] { return encode(level[u]) + " lands outside the box at " + grid_label(p); });
        t.expect(seen.insert({p.x, p.y}).second, [&] { return "grid embedding not injective at " + grid_label(p); });
      }
      for (std::size_t u = 0; u < level.size() && !t.failed(); ++u) {
        for (std::size_t v = u + 1; v < level.size(); ++v) {
          ++pairs;
          const bool up = classify_pair(level[u], level[v]) == PairVerdict::UpOne;
          const GridPoint a = f.points[u];
          const GridPoint b = f.points[v];
          const std::string what = encode(level[u]) + "," + encode(level[v]);
          if (up) {
            t.expect(!comparable(a, b), [&] { return "up pair " + what + " has comparable images"; });
          } else {
            t.expect(strictly_comparable(a, b), [&] { return "wide pair " + what + " has images not strictly comparable"; });
          }
          if (t.failed()) break;
        }
      }
    }
    return t.finish(std::to_string(pairs) + " pairs");
  });
}

Outcome witness_validity(const WitnessScale& scale) {
  return guarded("witness validity", [&] {
    Tally t("witness validity");
    std::size_t runs = 0;
    for (std::size_t d = 0; d <= scale.weave_depth && !t.failed(); ++d) {
      for (const auto& n : bounds()) {
        // Without genuine_k the witness does not depend on k.
        std::map<std::size_t, ConsistencyInterface> cache;
        for (std::size_t k : {2, 3}) {
          for (bool genuine : {false, true}) {
            const std::size_t key = genuine ? k : 0;
            auto it = cache.find(key);
            if (it == cache.end()) it = cache.emplace(key, weave_witness(d, k, n, genuine)).first;
            const auto& w = it->second;
            for (const auto& m : bounds()) {
              WeaveParams p{d, k, m, n, true, WideReading::Recursive};
              const std::string what = "weave witness d=" + std::to_string(d) + " k=" + std::to_string(k) +
                                       " m=" + m.to_string() + " n=" + n.to_string() +
                                       (genuine ? " genuine" : "");
              ++runs;
              t.expect(check_weave(w, p).ok, [&] { return what + " fails check_weave"; });
              if (d <= 2) t.expect(oracle::weave_holds(w, p), [&] { return what + " fails the weave oracle"; });
            }
            if (genuine && k == 3 && d >= 1) {
              WeaveParams p2{d, 2, SizeBound::omega(), n, true, WideReading::Recursive};
              t.expect(!check_weave(w, p2).ok, [&] {
                return "genuine 3-witness at d=" + std::to_string(d) + " is still 2-inconsistent on up combs";
              });
            }
          }
        }
      }
    }

    for (std::size_t s = 1; s <= scale.grid_side && !t.failed(); ++s) {
      for (bool strong : {false, true}) {
        const auto w = grid_witness(s, strong);
        const std::string what = std::string(strong ? "strong " : "") + "grid witness s=" + std::to_string(s);
        for (bool check_strong : {false, true}) {
          if (check_strong && !strong) continue;
          GridParams p{s, 2, check_strong};
          ++runs;
          t.expect(check_grid(w, p).ok, [&] { return what + " fails check_grid"; });
          if (s <= 3) t.expect(oracle::grid_holds(w, p), [&] { return what + " fails the grid oracle"; });
        }
      }
    }

    std::mt19937_64 rng(scale.seed);
    for (std::size_t i = 0; i < scale.graphs && !t.failed(); ++i) {
      const std::size_t order = 1 + static_cast<std::size_t>(rng() % scale.graph_order);
      const Graph cograph = eval_cotree(random_cotree(order, rng()));
      const Graph random = oracle::random_graph(order, 1 + static_cast<unsigned>(rng() % 3), 4, rng);
      for (const Graph* g : {&cograph, &random}) {
        const auto w = graph_witness(*g, i % 2 == 0);
        ++runs;
        t.expect(check_graph_pattern(w, *g).ok, [&] { return "graph witness fails on " + to_json(*g).dump(); });
        t.expect(oracle::graph_pattern_holds(w, *g), [&] { return "graph witness fails the oracle on " + to_json(*g).dump(); });
      }
    }
    return t.finish(std::to_string(runs) + " witness runs");
  });
}

Outcome mutation_suite() {
  return guarded("mutation suite", [&] {
    Tally t("mutation suite");
    std::size_t cases = 0;

    // `certificate_ok` re-derives what the first violation claims.
    auto run = [&](const std::string& name, const ConsistencyInterface& base, const ConsistencyInterface& mutated,
                   const std::function<Report(const ConsistencyInterface&)>& check, ViolationKind expected,
                   const std::function<bool(const ConsistencyInterface&, const Violation&)>& certificate_ok) {
      ++cases;
      t.expect(check(base).ok, [&] { return name + ": unmutated witness fails"; });
      const Report r = check(mutated);
      if (!t.expect(!r.ok, [&] { return name + ": mutation not detected"; })) return;
      const Violation& v = r.violations.front();
      t.expect(v.kind == expected, [&] { return name + ": wrong violation kind"; });
      t.expect(certificate_ok(mutated, v), [&] { return name + ": certificate does not hold up"; });
    };

    auto delete_atom = [](const ConsistencyInterface& ci, std::size_t index, std::size_t atom) {
      SetSystem s = *ci.set_system();
      s.sets[index].reset(atom);
      return ConsistencyInterface::from_sets(std::move(s));
    };
    auto add_shared_atom = [](const ConsistencyInterface& ci, const std::vector<std::size_t>& family) {
      SetSystem s = *ci.set_system();
      const auto atom = s.add_atom("extra");
      for (auto i : family) s.sets[i].set(atom);
      return ConsistencyInterface::from_sets(std::move(s));
    };
    // Atoms whose member family has no other common atom, spread over the universe.
    auto maximal_atoms = [](const ConsistencyInterface& ci, std::size_t want) {
      const SetSystem& s = *ci.set_system();
      std::vector<std::size_t> out;
      for (std::size_t a = 0; a < s.universe.size(); ++a) {
        const auto members = members_of(s, a);
        DynamicBitset meet = s.sets[members.front()];
        for (auto i : members) meet.intersect_with(s.sets[i]);
        if (meet.count() == 1) out.push_back(a);
      }
      std::vector<std::size_t> picked;
      for (std::size_t i = 0; i < want && i < out.size(); ++i) picked.push_back(out[i * out.size() / want]);
      return picked;
    };

    struct WeaveCase {
      std::size_t depth;
      SizeBound n;
      std::size_t deletions;
      std::vector<std::pair<std::string, std::string>> up_pairs;
    };
    const std::vector<WeaveCase> weaves{
        {1, SizeBound::omega(), 4, {{"0", "1"}, {"2", "3"}}},
        {2, SizeBound::finite(1), 3, {{"00", "01"}, {"03", "12"}}},
    };
    for (const auto& wc : weaves) {
      const auto base = weave_witness(wc.depth, 2, wc.n, false);
      const WeaveParams p{wc.depth, 2, SizeBound::omega(), wc.n, true, WideReading::Recursive};
      const auto level = enumerate_level(wc.depth);
      auto check = [&](const ConsistencyInterface& ci) { return check_weave(ci, p); };
      for (auto atom : maximal_atoms(base, wc.deletions)) {
        const auto members = members_of(*base.set_system(), atom);
        run("weave d=" + std::to_string(wc.depth) + " delete " + base.set_system()->universe[atom], base,
            delete_atom(base, members.front(), atom), check, ViolationKind::Consistency,
            [&](const ConsistencyInterface& ci, const Violation& v) {
              return is_comb(nodes_at(level, v.indices), CombClass::wide_right(wc.n)).has_value() &&
                     !ci.consistent(v.indices);
            });
      }
      for (const auto& [a, b] : wc.up_pairs) {
        const std::vector<std::size_t> pair{static_cast<std::size_t>(decode(a).rank()),
                                            static_cast<std::size_t>(decode(b).rank())};
        run("weave d=" + std::to_string(wc.depth) + " join " + a + "," + b, base, add_shared_atom(base, pair), check,
            ViolationKind::Inconsistency, [&](const ConsistencyInterface& ci, const Violation& v) {
              return v.indices.size() == 2 && is_comb(nodes_at(level, v.indices), CombClass::up(p.m)).has_value() &&
                     ci.consistent(v.indices);
            });
      }
    }

    struct GridCase {
      bool strong;
      std::size_t deletions;
      std::vector<std::vector<std::size_t>> antichains;
    };
    const std::size_t side = 3;
    for (const auto& gc : {GridCase{false, 3, {{1, 3}, {2, 6}}}, GridCase{true, 2, {{2, 4}}}}) {
      const auto base = grid_witness(side, gc.strong);
      const GridParams p{side, 2, gc.strong};
      auto check = [&](const ConsistencyInterface& ci) { return check_grid(ci, p); };
      const std::string tag = gc.strong ? "strong grid" : "grid";
      for (auto atom : maximal_atoms(base, gc.deletions)) {
        const auto members = members_of(*base.set_system(), atom);
        run(tag + " delete " + base.set_system()->universe[atom], base, delete_atom(base, members.front(), atom),
            check, ViolationKind::Consistency, [&](const ConsistencyInterface& ci, const Violation& v) {
              const auto pts = points_of(v.indices, side);
              const bool chain = gc.strong ? is_chain<GridPoint>(pts) : is_strict_chain<GridPoint>(pts);
              return chain && !ci.consistent(v.indices);
            });
      }
      for (const auto& anti : gc.antichains) {
        run(tag + " join " + show(anti, base.labels()), base, add_shared_atom(base, anti), check,
            ViolationKind::Inconsistency, [&](const ConsistencyInterface& ci, const Violation& v) {
              return v.indices.size() == 2 && is_antichain<GridPoint>(points_of(v.indices, side)) &&
                     ci.consistent(v.indices);
            });
      }
    }

    for (const Graph& g : {path_graph(4), cycle_graph(5)}) {
      const auto base = graph_witness(g, true);
      auto check = [&](const ConsistencyInterface& ci) { return check_graph_pattern(ci, g); };
      const std::string tag = "graph on " + std::to_string(g.order()) + " vertices";
      for (auto atom : maximal_atoms(base, 1)) {
        const auto members = members_of(*base.set_system(), atom);
        run(tag + " delete " + base.set_system()->universe[atom], base, delete_atom(base, members.front(), atom),
            check, ViolationKind::Consistency, [&](const ConsistencyInterface& ci, const Violation& v) {
              return g.independent(v.indices) && !ci.consistent(v.indices);
            });
      }
      const auto [u, v] = g.edges().front();
      run(tag + " join edge", base, add_shared_atom(base, {u, v}), check, ViolationKind::Inconsistency,
          [&](const ConsistencyInterface& ci, const Violation& viol) {
            return !g.independent(viol.indices) && ci.consistent(viol.indices);
          });
    }
    t.expect(cases >= 20, [&] { return "only " + std::to_string(cases) + " mutation cases"; });
    return t.finish(std::to_string(cases) + " mutations");
  });
}

Outcome realizability(std::size_t templates, std::uint64_t seed) {
  return guarded("realizability", [&] {
    Tally t("realizability");
    std::mt19937_64 rng(seed);
    std::size_t yes = 0;
    for (std::size_t i = 0; i < templates && !t.failed(); ++i) {
      const Template tpl = oracle::random_template(rng, 4, 4);
      const bool criterion = realizable(tpl).has_value();
      yes += criterion ? 1 : 0;
      t.expect(criterion == oracle::realizable_with_atoms(tpl, 4),
               [&] { return "criterion disagrees with assignment search on " + to_json(tpl).dump(); });
    }
    return t.finish(std::to_string(yes) + "/" + std::to_string(templates) + " realizable");
  });
}

Outcome cograph_stack(const CographScale& scale) {
  return guarded("cograph stack", [&] {
    Tally t("cograph stack");
    std::size_t graphs = 0;
    std::size_t cographs = 0;
    auto recognise = [&](const Graph& g, bool with_oracle) {
      ++graphs;
      const auto r = cotree_of(g);
      const auto p4 = find_p4(g);
      const bool is_tree = std::holds_alternative<Cotree>(r);
      t.expect(is_tree == !p4.has_value(), [&] { return "recognition and find_p4 disagree on " + to_json(g).dump(); });
      if (is_tree) {
        ++cographs;
        t.expect(eval_cotree(std::get<Cotree>(r)) == g, [&] { return "cotree does not evaluate back to " + to_json(g).dump(); });
      } else {
        t.expect(std::get<P4Certificate>(r).path == *p4, [&] { return "certificate differs from find_p4"; });
      }
      if (with_oracle) {
        t.expect(oracle::induced_p4(g) == p4, [&] { return "find_p4 differs from the induced-subgraph scan"; });
      }
    };

    for (std::size_t n = 1; n <= scale.exhaustive_order && !t.failed(); ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> slots;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) slots.emplace_back(u, v);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()) && !t.failed(); ++mask) {
        Graph g(n);
        for (std::size_t e = 0; e < slots.size(); ++e) {
          if (mask >> e & 1U) g.add_edge(slots[e].first, slots[e].second);
        }
        recognise(g, n <= 5);
      }
    }

    std::mt19937_64 rng(scale.seed);
    for (std::size_t i = 0; i < scale.random_graphs && !t.failed(); ++i) {
      recognise(oracle::random_graph(scale.random_order, 1 + static_cast<unsigned>(i % 7), 8, rng), true);
    }
    for (std::size_t i = 0; i < scale.cotrees && !t.failed(); ++i) {
      const auto tree = random_cotree(1 + static_cast<std::size_t>(rng() % 24), rng());
      const Graph g = eval_cotree(tree);
      t.expect(!find_p4(g), [&] { return "random cotree evaluates to a graph with a P4"; });
      recognise(g, false);
    }

    std::size_t edges_prev = 0;
    for (std::size_t d = 0; d <= scale.comb_depth && !t.failed(); ++d) {
      const auto cg = comb_graph(d);
      const auto level = enumerate_level(d);
      std::size_t brute = 0;
      for (std::size_t u = 0; u < level.size(); ++u) {
        for (std::size_t v = u + 1; v < level.size(); ++v) {
          const std::array<Node, 2> pair{level[u], level[v]};
          const bool up = d <= 3 ? oracle::in_comb_class(pair, CombClass::up(SizeBound::finite(1)))
                                 : classify_pair(level[u], level[v]) == PairVerdict::UpOne;
          brute += up ? 1 : 0;
          t.expect(cg.graph.adjacent(u, v) == up, [&] { return "comb graph edge mismatch at " + show(pair); });
        }
      }
      t.expect(cg.graph.edge_count() == brute, [&] { return "comb graph edge count at d=" + std::to_string(d); });
      t.expect(eval_cotree(cg.cotree) == cg.graph, [&] { return "comb graph cotree at d=" + std::to_string(d); });
      if (d > 0) {
        const std::size_t want = 4 * edges_prev + 2 * static_cast<std::size_t>(level_size(d - 1) * level_size(d - 1));
        t.expect(brute == want, [&] {
          return "E_" + std::to_string(d) + " = " + std::to_string(brute) + ", recursion gives " + std::to_string(want);
        });
      }
      edges_prev = brute;
    }
    const std::vector<std::size_t> known{1, 2, 40, 672};
    for (std::size_t d = 1; d < known.size() && d <= scale.comb_depth; ++d) {
      t.expect(comb_graph(d).graph.edge_count() == known[d], [&] { return "E_" + std::to_string(d) + " differs"; });
    }
    if (scale.comb_depth >= 1) {
      const auto r = cotree_of(comb_graph(1).graph);
      const Cotree want = Cotree::make(
          CographOp::Union, {Cotree::make(CographOp::Join, {Cotree::leaf(0), Cotree::leaf(1)}),
                             Cotree::make(CographOp::Join, {Cotree::leaf(2), Cotree::leaf(3)})});
      t.expect(std::holds_alternative<Cotree>(r) && std::get<Cotree>(r) == want,
               [] { return "cotree of G_1 is not (K2 join) union (K2 join)"; });
    }

    for (std::size_t i = 0; i < scale.cotrees && !t.failed(); ++i) {
      const auto tree = random_cotree(1 + static_cast<std::size_t>(rng() % scale.max_leaves), rng());
      const Graph g = eval_cotree(tree);
      const auto e = embed_cograph(tree);
      std::set<Node> images(e.map.begin(), e.map.end());
      t.expect(images.size() == e.map.size(), [] { return "cograph embedding not injective"; });
      for (std::size_t u = 0; u < g.order() && !t.failed(); ++u) {
        t.expect(e.map[u].depth() == e.depth, [] { return "embedding images of unequal depth"; });
        for (std::size_t v = u + 1; v < g.order(); ++v) {
          t.expect((classify_pair(e.map[u], e.map[v]) == PairVerdict::UpOne) == g.adjacent(u, v),
                   [&] { return "embedding misclassifies " + std::to_string(u) + "," + std::to_string(v) + " in " + to_json(tree).dump(); });
        }
      }
    }
    return t.finish(std::to_string(graphs) + " graphs (" + std::to_string(cographs) + " cographs)");
  });
}

Outcome bridges(std::size_t max_depth) {
  return guarded("bridges", [&] {
    Tally t("bridges");
    std::size_t runs = 0;
    const std::size_t top = std::min<std::size_t>(max_depth, 2);
    std::vector<Cotree> trees;
    for (std::size_t n = 1; n <= 4; ++n) {
      std::vector<std::size_t> vs(n);
      for (std::size_t i = 0; i < n; ++i) vs[i] = i;
      for (auto& tree : binary_cotrees(vs)) trees.push_back(std::move(tree));
      // Multi-child nodes, as produced by recognition.
      for (std::uint32_t mask = 0; mask < (1U << (n * (n - 1) / 2)); ++mask) {
        Graph g(n);
        std::size_t bit = 0;
        for (std::size_t u = 0; u < n; ++u) {
          for (std::size_t v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1U) g.add_edge(u, v);
          }
        }
        if (auto r = cotree_of(g); std::holds_alternative<Cotree>(r)) trees.push_back(std::get<Cotree>(r));
      }
    }

    for (std::size_t d = 0; d <= top && !t.failed(); ++d) {
      const auto cg = comb_graph(d);
      const auto pattern = graph_witness(cg.graph, true);
      const auto weave = graph_to_weave_oracle(pattern, d);
      const WeaveParams strong{d, 2, SizeBound::omega(), SizeBound::omega(), true, WideReading::Recursive};
      ++runs;
      t.expect(check_weave(weave, strong, CheckOptions::exhaustive()).ok,
               [&] { return "graph_to_weave output fails check_weave at d=" + std::to_string(d); });
      t.expect(oracle::weave_holds(weave, strong), [&] { return "graph_to_weave output fails the oracle at d=" + std::to_string(d); });

      const auto witness = weave_witness(d, 2, SizeBound::omega(), false);
      for (const auto& tree : trees) {
        if (embed_cograph(tree).depth > d) continue;
        const Graph g = eval_cotree(tree);
        for (const auto* source : {&witness, &weave}) {
          const auto back = weave_to_graph_oracle(*source, d, tree);
          ++runs;
          t.expect(check_graph_pattern(back, g).ok && oracle::graph_pattern_holds(back, g), [&] {
            return "weave_to_graph fails at d=" + std::to_string(d) + " for " + to_json(tree).dump();
          });
        }
      }
    }

    if (max_depth >= 1) {
      const auto grid = grid_witness(4, false);
      const auto weave = grid_to_weave(grid, 1);
      const WeaveParams strong{1, 2, SizeBound::omega(), SizeBound::omega(), true, WideReading::Recursive};
      ++runs;
      t.expect(check_weave(weave, strong, CheckOptions::exhaustive()).ok && oracle::weave_holds(weave, strong),
               [] { return "grid_to_weave of the side-4 grid witness is not a strong weave"; });
    }
    return t.finish(std::to_string(runs) + " bridge runs");
  });
}

Outcome triangle_free(std::size_t max_len) {
  return guarded("triangle-free demo", [&] {
    Tally t("triangle-free demo");
    for (std::size_t len = 2; len <= max_len && !t.failed(); ++len) {
      const auto demo = triangle_free_demo(len);
      for (std::size_t i = 0; i < len; ++i) {
        const std::vector<std::size_t> single{i};
        t.expect(demo.p.consistent(single), [&] { return "singleton P" + std::to_string(i) + " inconsistent"; });
        for (std::size_t j = i + 1; j < len; ++j) {
          const std::vector<std::size_t> pair{i, j};
          t.expect(!demo.p.consistent(pair), [&] {
            return "len=" + std::to_string(len) + ": {P" + std::to_string(i) + ",P" + std::to_string(j) + "} consistent";
          });
          t.expect(demo.p_graph.adjacent(2 * i + 1, 2 * j) && !demo.p_graph.adjacent(2 * i, 2 * j + 1),
                   [&] { return "p graph edges wrong at len=" + std::to_string(len); });
        }
      }
      t.expect(demo.p_graph.edge_count() == len * (len - 1) / 2, [&] { return "p graph has extra edges"; });
      std::vector<std::size_t> all(len);
      for (std::size_t i = 0; i < len; ++i) all[i] = i;
      t.expect(demo.q.consistent(all), [&] { return "q side not consistent at len=" + std::to_string(len); });
    }
    return t.finish();
  });
}

Outcome epsilon_scaling(std::size_t max_side) {
  return guarded("epsilon scaling", [&] {
    Tally t("epsilon scaling");
    std::size_t tied = 0;
    for (std::size_t s = 1; s <= max_side && !t.failed(); ++s) {
      const std::size_t n = s * s;
      if (n > 16) throw ResourceError("epsilon scaling check limited to side 4");
      for (std::uint32_t mask = 1; mask < (1U << n) && !t.failed(); ++mask) {
        std::vector<GridPoint> pts;
        std::vector<EpsPoint> img;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(mask >> i & 1U)) continue;
          pts.push_back(point_of(i, s));
          img.push_back(epsilon_scale(pts.back()));
        }
        const std::span<const GridPoint> p(pts);
        const std::span<const EpsPoint> q(img);
        const std::string what = "subset " + std::to_string(mask) + " of side " + std::to_string(s);
        if (is_antichain(p)) t.expect(is_antichain(q), [&] { return what + ": antichain not preserved"; });
        if (is_strict_chain(p)) t.expect(is_strict_chain(q), [&] { return what + ": strict chain not preserved"; });
        if (is_chain(p)) {
          std::set<std::int64_t> xs;
          std::set<std::int64_t> ys;
          for (const auto& g : pts) {
            xs.insert(g.x);
            ys.insert(g.y);
          }
          if (xs.size() == pts.size() && ys.size() == pts.size()) {
            t.expect(is_strict_chain(q), [&] { return what + ": tie-free chain not made strict"; });
          } else {
            ++tied;
            t.expect(!is_strict_chain(q), [&] { return what + ": tied chain unexpectedly strict"; });
          }
        }
        if (pts.size() == 2 && pts[0].x != pts[1].x && pts[0].y != pts[1].y) {
          t.expect(comparable(pts[0], pts[1]) == comparable(img[0], img[1]),
                   [&] { return what + ": comparability changed"; });
        }
      }
    }
    if (max_side >= 2) t.expect(tied > 0, [] { return "no tied chain exercised"; });
    return t.finish(std::to_string(tied) + " tied chains stay non-strict");
  });
}

Outcome genericity() {
  return guarded("genericity", [&] {
    Tally t("genericity");
    const auto poset = binary_strings();
    std::vector<DensePredicate> lengths;
    for (std::size_t i = 1; i <= 5; ++i) {
      lengths.push_back({"length>=" + std::to_string(i), [i](const std::string& s) { return s.size() >= i; }});
    }
    const auto chain = generic_chain(poset, lengths, "", 5);
    t.expect(chain.size() - 1 <= 5, [&] { return "chain uses " + std::to_string(chain.size() - 1) + " steps"; });
    std::set<std::size_t> met;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      met.insert(chain[i].satisfied.begin(), chain[i].satisfied.end());
      if (i > 0) {
        t.expect(poset.leq(chain[i - 1].element, chain[i].element) &&
                     chain[i].element.size() > chain[i - 1].element.size(),
                 [&] { return "chain does not strictly increase at step " + std::to_string(i); });
      }
    }
    t.expect(met.size() == lengths.size(), [] { return "not every length requirement met"; });

    const std::vector<DensePredicate> one{{"contains 1", [](const std::string& s) { return s.find('1') != std::string::npos; }}};
    const auto c1 = generic_chain(poset, one, "000", 1);
    t.expect(c1.front().element == "000" && c1.back().element.find('1') != std::string::npos,
             [] { return "no element containing 1 reached"; });

    const std::vector<DensePredicate> bad{{"length<2", [](const std::string& s) { return s.size() < 2; }}};
    bool failed_named = false;
    try {
      generic_chain(poset, bad, "000", 1);
    } catch (const GenericityFailure& e) {
      failed_named = e.requirement() == "length<2" && e.stuck_at() == "000";
    }
    t.expect(failed_named, [] { return "non-dense requirement did not fail with its name"; });

    bool rejected = false;
    try {
      generic_chain(poset, lengths, "", 4);
    } catch (const ArgumentError&) {
      rejected = true;
    }
    t.expect(rejected, [] { return "too few steps accepted"; });
    return t.finish();
  });
}

std::vector<Outcome> verify_paper(std::size_t max_depth, std::uint64_t seed) {
  const std::size_t d2 = std::min<std::size_t>(max_depth, 2);
  std::vector<Outcome> out;
  out.push_back(pair_dichotomy(std::min<std::size_t>(max_depth, 6)));
  out.push_back(wide_characterization(d2, std::min<std::size_t>(max_depth + 1, 3), max_depth >= 2 ? 10000 : 0, seed));
  out.push_back(recognition_vs_build_trees(d2, 5));
  out.push_back(subset_closure(d2));
  out.push_back(strongification(std::min<std::size_t>(max_depth, 3), d2, 4));
  out.push_back(grid_embedding(std::min<std::size_t>(max_depth, 6)));
  out.push_back(witness_validity({std::min<std::size_t>(max_depth, 3), std::min<std::size_t>(max_depth + 2, 5), 20, 10, seed}));
  out.push_back(mutation_suite());
  out.push_back(realizability(200, seed));
  out.push_back(cograph_stack({std::min<std::size_t>(max_depth + 3, 6), 50, 12, std::min<std::size_t>(max_depth, 4), 30, 16, seed}));
  out.push_back(bridges(max_depth));
  out.push_back(triangle_free(10));
  out.push_back(epsilon_scaling(std::min<std::size_t>(max_depth + 2, 4)));
  out.push_back(genericity());
  return out;
}

}  // namespace comblab::verify
