#include <gtest/gtest.h>

#include <random>
#include <set>

#include "comblab/transforms.hpp"
#include "comblab/patterns.hpp"

namespace comblab {
namespace {

std::vector<Node> nodes(std::initializer_list<const char*> codes) {
  std::vector<Node> out;
  for (const char* c : codes) out.push_back(decode(c));
  return out;
}

ConsistencyInterface without_atom(const ConsistencyInterface& ci, std::size_t index, std::size_t atom) {
  SetSystem s = *ci.set_system();
  s.sets[index].reset(atom);
  return ConsistencyInterface::from_sets(std::move(s));
}

TEST(Strongify, Examples) {
  EXPECT_EQ(encode(strongify(decode("2"))), "22");
  EXPECT_EQ(encode(strongify(decode("1"))), "01");
  EXPECT_EQ(encode(strongify(decode("13"))), "0123");
  EXPECT_TRUE(strongify(Node{}).empty());
}

TEST(Strongify, PairImages) {
  const auto up = nodes({"0"});
  const auto up2 = nodes({"1"});
  const auto img_a = nodes({"00"});
  const auto img_b = nodes({"01"});
  EXPECT_EQ(strongify(up[0]), img_a[0]);
  EXPECT_EQ(strongify(up2[0]), img_b[0]);
  auto rel = split_relation(img_a, img_b);
  ASSERT_FALSE(rel.empty());
  EXPECT_EQ(rel.front().kind, SplitKind::NarrowBelow);

  const auto right_a = nodes({"00"});
  const auto right_b = nodes({"22"});
  EXPECT_EQ(strongify(decode("2")), right_b[0]);
  // Also NarrowLeft(0) at the root; what matters is that it is not an up pair.
  rel = split_relation(right_a, right_b);
  const auto has = [&](SplitKind k) {
    return std::any_of(rel.begin(), rel.end(), [&](const SplitWitness& w) { return w.kind == k; });
  };
  EXPECT_TRUE(has(SplitKind::WideLeft));
  EXPECT_FALSE(has(SplitKind::NarrowBelow));
}

TEST(Strongify, IndexMapIsInjectiveAndTotal) {
  for (std::size_t d = 0; d <= 3; ++d) {
    const auto f = strongify_index(d);
    ASSERT_EQ(f.codomain, IndexMap::Codomain::Level2d);
    ASSERT_EQ(f.nodes.size(), level_size(d));
    std::set<Node> image(f.nodes.begin(), f.nodes.end());
    ASSERT_EQ(image.size(), f.nodes.size());
    for (const auto& t : f.nodes) ASSERT_EQ(t.depth(), 2 * d);
  }
}

TEST(Strongify, WeaveBecomesStrong) {
  const auto w = weave_witness(2, 2, SizeBound::finite(1), false);
  const auto strong = strongify_weave(w, 1);
  EXPECT_EQ(strong.labels(), level_labels(1));
  EXPECT_TRUE(check_weave(strong, WeaveParams{1, 2, SizeBound::finite(1), SizeBound::finite(1), true}).ok);
  EXPECT_THROW(strongify_weave(w, 2), ArgumentError);
}

TEST(Pullback, IdentityKeepsTheSystem) {
  const auto w = weave_witness(1, 2, SizeBound::omega(), false);
  IndexMap id{1, IndexMap::Codomain::Level, 1, enumerate_level(1), {}};
  const auto p = pullback(w, id);
  for (std::uint32_t mask = 0; mask < 16; ++mask) {
    std::vector<std::size_t> fam;
    for (std::size_t i = 0; i < 4; ++i) {
      if (mask >> i & 1U) fam.push_back(i);
    }
    ASSERT_EQ(p.consistent(fam), w.consistent(fam));
  }
}

TEST(Pullback, PaddingMapPassesTheSmallerChecker) {
  const auto w = weave_witness(2, 2, SizeBound::finite(1), false);
  IndexMap pad{1, IndexMap::Codomain::Level, 2, {}, {}};
  for (const auto& s : enumerate_level(1)) pad.nodes.push_back(extend(s, Letter{0, 0}));
  const auto p = pullback(w, pad);
  EXPECT_TRUE(check_weave(p, WeaveParams{1, 2, SizeBound::omega(), SizeBound::finite(1), false}).ok);
}

TEST(Pullback, PrefixViolationNamesTheSource) {
  const auto w = weave_witness(2, 2, SizeBound::finite(1), false);
  IndexMap bad{1, IndexMap::Codomain::Level, 2, nodes({"00", "20", "20", "30"}), {}};
  try {
    pullback(w, bad);
    FAIL() << "expected ArgumentError";
  } catch (const ArgumentError& e) {
    EXPECT_NE(std::string(e.what()).find("at 1 "), std::string::npos) << e.what();
  }
}

TEST(Pullback, RandomPrefixMapsPreserveWeaves) {
  std::mt19937_64 rng(0x5EED);
  std::vector<std::pair<std::size_t, ConsistencyInterface>> sources;
  for (std::size_t d = 0; d <= 2; ++d) {
    sources.emplace_back(d, weave_witness(d, 2, SizeBound::finite(1), false));
    sources.emplace_back(d, weave_witness(d, 3, SizeBound::omega(), true));
  }
  const std::vector<WeaveParams> params{{0, 2, SizeBound::omega(), SizeBound::finite(1), false},
                                        {0, 3, SizeBound::finite(2), SizeBound::omega(), false},
                                        {0, 3, SizeBound::omega(), SizeBound::omega(), true}};
  int maps = 0;
  for (int trial = 0; maps < 50; ++trial) {
    const auto& [d, ci] = sources[static_cast<std::size_t>(trial) % sources.size()];
    const std::size_t d0 = rng() % (d + 1);
    IndexMap f{d0, IndexMap::Codomain::Level, d, {}, {}};
    for (const auto& s : enumerate_level(d0)) {
      Node t = s;
      while (t.depth() < d) t = extend(t, Letter::from_code(static_cast<std::uint8_t>(rng() % 4)));
      f.nodes.push_back(t);
    }
    const auto pulled = pullback(ci, f);
    for (auto p : params) {
      p.depth = d;
      if (!check_weave(ci, p, CheckOptions::exhaustive()).ok) continue;
      p.depth = d0;
      ASSERT_TRUE(check_weave(pulled, p, CheckOptions::exhaustive()).ok) << to_json(f).dump();
    }
    ++maps;
  }
}

TEST(GridEmbed, Examples) {
  EXPECT_EQ(grid_embed(decode("0")), (GridPoint{0, 1}));
  EXPECT_EQ(grid_embed(decode("1")), (GridPoint{1, 0}));
  EXPECT_EQ(grid_embed(decode("2")), (GridPoint{2, 3}));
  EXPECT_EQ(grid_embed(decode("3")), (GridPoint{3, 2}));
  EXPECT_EQ(grid_embed(Node{}), (GridPoint{0, 0}));
  EXPECT_EQ(grid_embed(decode("23")), (GridPoint{11, 14}));
  EXPECT_FALSE(comparable(grid_embed(decode("0")), grid_embed(decode("1"))));
  EXPECT_TRUE(strictly_below(grid_embed(decode("0")), grid_embed(decode("2"))));
}

TEST(GridEmbed, PairsMatchTheDichotomy) {
  for (std::size_t d = 1; d <= 4; ++d) {
    const auto f = grid_embed_index(d);
    const auto side = static_cast<std::int64_t>(level_size(d));
    const auto level = enumerate_level(d);
    for (std::size_t a = 0; a < level.size(); ++a) {
      const auto p = f.points[a];
      ASSERT_TRUE(p.x >= 0 && p.y >= 0 && p.x < side && p.y < side);
      for (std::size_t b = a + 1; b < level.size(); ++b) {
        const auto q = f.points[b];
        ASSERT_NE(p, q);
        const bool up = classify_pair(level[a], level[b]) == PairVerdict::UpOne;
        ASSERT_EQ(up, !comparable(p, q));
        ASSERT_EQ(!up, strictly_comparable(p, q));
      }
    }
  }
}

TEST(GridToWeave, WitnessBecomesStrongWeave) {
  const auto w = grid_to_weave(grid_witness(4, false), 1);
  EXPECT_TRUE(check_weave(w, WeaveParams{1, 2, SizeBound::omega(), SizeBound::omega(), true}).ok);
  EXPECT_THROW(grid_to_weave(grid_witness(3, false), 1), ArgumentError);
}

TEST(GridToWeave, ConsistentAntichainGivesUpCombViolation) {
  // Join the images of "0" and "1", points (0,1) and (1,0), through an atom.
  SetSystem s = *grid_witness(4, false).set_system();
  const std::size_t atom = s.add_atom("joined");
  s.sets[0 * 4 + 1].set(atom);
  s.sets[1 * 4 + 0].set(atom);
  const auto w = grid_to_weave(ConsistencyInterface::from_sets(std::move(s)), 1);
  const auto r = check_weave(w, WeaveParams{1, 2, SizeBound::omega(), SizeBound::omega(), true});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::Inconsistency);
  EXPECT_EQ(r.violations[0].indices, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.violations[0].certificate.at("class"), "Up(omega)");
}

TEST(GridToWeave, DepthZero) {
  const auto one = grid_witness(1, false);
  EXPECT_TRUE(check_weave(grid_to_weave(one, 0), WeaveParams{0, 2}).ok);
  const auto empty = without_atom(one, 0, 0);
  EXPECT_FALSE(check_weave(grid_to_weave(empty, 0), WeaveParams{0, 2}).ok);
}

TEST(EpsilonScale, Examples) {
  const auto a = epsilon_scale(GridPoint{0, 0});
  const auto b = epsilon_scale(GridPoint{1, 1});
  const auto c = epsilon_scale(GridPoint{0, 1});
  const auto d = epsilon_scale(GridPoint{1, 0});
  EXPECT_TRUE(strictly_below(a, b));
  EXPECT_TRUE(!comparable(c, d));
  // Tied first coordinate: the images are comparable but not strictly.
  EXPECT_EQ(a.x, c.x);
  EXPECT_FALSE(strictly_comparable(a, c));
  EXPECT_EQ(to_json(c).dump(), "[[0,0],[1,1]]");
  EXPECT_LT((EpsCoord{1, 1}), (EpsCoord{1, 0}));
  EXPECT_LT((EpsCoord{0, 0}), (EpsCoord{1, 5}));
  EXPECT_THROW(epsilon_scale(GridPoint{-1, 0}), ArgumentError);
}

TEST(EpsilonScale, ComparabilityIsExactOffTies) {
  for (std::int64_t s = 1; s <= 4; ++s) {
    for (std::int64_t i = 0; i < s * s; ++i) {
      for (std::int64_t j = 0; j < s * s; ++j) {
        const GridPoint p{i / s, i % s};
        const GridPoint q{j / s, j % s};
        if (p.x == q.x || p.y == q.y) continue;
        const auto ep = epsilon_scale(p);
        const auto eq = epsilon_scale(q);
        ASSERT_EQ(comparable(p, q), comparable(ep, eq));
        ASSERT_EQ(strictly_comparable(p, q), strictly_comparable(ep, eq));
      }
    }
  }
}

TEST(EpsilonScale, ScaledSystemKeepsSolutions) {
  const auto g = grid_witness(3, true);
  const auto scaled = epsilon_scale(g, 3);
  ASSERT_EQ(scaled.points.size(), 9U);
  EXPECT_EQ(scaled.ci.labels()[1], "[[0,0],[1,1]]");
  EXPECT_EQ(scaled.ci.consistent(std::vector<std::size_t>{0, 1, 2}), g.consistent(std::vector<std::size_t>{0, 1, 2}));
  EXPECT_THROW(epsilon_scale(g, 2), ArgumentError);
}

TEST(IndexMapJson, RoundTrip) {
  for (std::size_t d = 0; d <= 2; ++d) {
    const auto f = strongify_index(d);
    const auto back = index_map_from_json(to_json(f));
    EXPECT_EQ(back.nodes, f.nodes);
    EXPECT_EQ(back.codomain, f.codomain);
  }
  const auto g = to_json(grid_embed_index(1));
  EXPECT_EQ(g.at("codomain"), "grid");
  EXPECT_EQ(g.at("map")[2].dump(), R"(["2",[2,3]])");
  EXPECT_THROW(index_map_from_json(g), ArgumentError);
  EXPECT_THROW(index_map_from_json(nlohmann::json::parse(R"({"depth":1,"codomain":"level2d","map":[["0","00"]]})")),
               ArgumentError);
}

}  // namespace
}  // namespace comblab
