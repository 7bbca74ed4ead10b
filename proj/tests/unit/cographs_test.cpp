#include <gtest/gtest.h>

#include <random>

#include "comblab/cographs.hpp"
#include "comblab/combs.hpp"
#include "comblab/oracles.hpp"
#include "comblab/patterns.hpp"

namespace comblab {
namespace {

using Op = CographOp;

Cotree L(std::size_t v) { return Cotree::leaf(v); }
Cotree U(std::vector<Cotree> c) { return Cotree::make(Op::Union, std::move(c)); }
Cotree J(std::vector<Cotree> c) { return Cotree::make(Op::Join, std::move(c)); }

Graph single() { return Graph(1); }

TEST(Combine, Examples) {
  EXPECT_EQ(combine(Op::Join, single(), single()), complete_graph(2));
  const Graph two_k2 = combine(Op::Union, complete_graph(2), complete_graph(2));
  EXPECT_EQ(two_k2.order(), 4U);
  EXPECT_EQ(two_k2.edge_count(), 2U);
  EXPECT_TRUE(two_k2.adjacent(2, 3));
  EXPECT_FALSE(two_k2.adjacent(1, 2));
}

TEST(Combine, JoinEdgeCount) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const Graph a = oracle::random_graph(1 + rng() % 8, 1, 2, rng);
    const Graph b = oracle::random_graph(1 + rng() % 8, 1, 2, rng);
    const Graph j = combine(Op::Join, a, b);
    ASSERT_EQ(j.edge_count(), a.edge_count() + b.edge_count() + a.order() * b.order());
    ASSERT_EQ(combine(Op::Union, a, b).edge_count(), a.edge_count() + b.edge_count());
  }
}

TEST(EvalCotree, Examples) {
  EXPECT_EQ(eval_cotree(L(0)), single());
  EXPECT_EQ(eval_cotree(J({L(0), L(1), L(2)})), complete_graph(3));
  const Graph c4 = eval_cotree(J({U({L(0), L(2)}), U({L(1), L(3)})}));
  EXPECT_EQ(c4, cycle_graph(4));
  EXPECT_THROW(eval_cotree(U({L(0), L(0)})), ArgumentError);
  EXPECT_THROW(eval_cotree(U({L(0), L(2)})), ArgumentError);
}

TEST(FindP4, Examples) {
  const auto p = find_p4(path_graph(4));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (std::array<std::size_t, 4>{0, 1, 2, 3}));
  EXPECT_FALSE(find_p4(cycle_graph(4)));
  EXPECT_FALSE(oracle::induced_p4(cycle_graph(4)));
  EXPECT_TRUE(find_p4(cycle_graph(5)));
}

TEST(FindP4, AgreesWithOracle) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(4 + rng() % 6, 1, 2, rng);
    ASSERT_EQ(find_p4(g), oracle::induced_p4(g));
  }
}

TEST(CotreeOf, Examples) {
  const auto k2 = cotree_of(complete_graph(2));
  ASSERT_TRUE(std::holds_alternative<Cotree>(k2));
  EXPECT_EQ(std::get<Cotree>(k2), J({L(0), L(1)}));

  const auto g1 = cotree_of(comb_graph(1).graph);
  ASSERT_TRUE(std::holds_alternative<Cotree>(g1));
  EXPECT_EQ(std::get<Cotree>(g1), U({J({L(0), L(1)}), J({L(2), L(3)})}));

  const auto p4 = cotree_of(path_graph(4));
  ASSERT_TRUE(std::holds_alternative<P4Certificate>(p4));
  EXPECT_EQ(std::get<P4Certificate>(p4).path, (std::array<std::size_t, 4>{0, 1, 2, 3}));
}

TEST(CotreeOf, RoundTripOnRandomCographs) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const std::size_t n = 1 + seed % 24;
    const Cotree t = random_cotree(n, seed);
    const Graph g = eval_cotree(t);
    ASSERT_FALSE(find_p4(g));
    const auto back = cotree_of(g);
    ASSERT_TRUE(std::holds_alternative<Cotree>(back)) << seed;
    ASSERT_EQ(eval_cotree(std::get<Cotree>(back)), g);
    ASSERT_EQ(std::get<Cotree>(back), normalize(std::get<Cotree>(back)));
  }
}

TEST(CotreeOf, RecognitionMatchesP4Freeness) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(1 + rng() % 10, 1 + rng() % 3, 4, rng);
    const auto r = cotree_of(g);
    ASSERT_EQ(std::holds_alternative<Cotree>(r), !oracle::induced_p4(g).has_value());
    if (const auto* t = std::get_if<Cotree>(&r)) {
      ASSERT_EQ(eval_cotree(*t), g);
    } else {
      const auto path = std::get<P4Certificate>(r).path;
      ASSERT_EQ(g.induced(path), path_graph(4));
    }
  }
}

TEST(CombGraph, Examples) {
  EXPECT_EQ(comb_graph(0).graph, single());
  const auto g1 = comb_graph(1);
  EXPECT_EQ(g1.graph.edges(), (std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(comb_graph(2).graph.edge_count(), 40U);
  EXPECT_THROW(comb_graph(kCombGraphDepthLimit + 1), ResourceError);
}

TEST(CombGraph, CotreeAndRecursion) {
  std::size_t prev = 0;
  std::size_t sixteen = 1;
  for (std::size_t d = 0; d <= 3; ++d) {
    const auto g = comb_graph(d);
    ASSERT_EQ(eval_cotree(g.cotree), g.graph);
    if (d > 0) {
      ASSERT_EQ(g.graph.edge_count(), 4 * prev + 2 * sixteen);
      sixteen *= 16;
    }
    prev = g.graph.edge_count();
    const auto level = enumerate_level(d);
    for (std::size_t u = 0; u < level.size(); ++u) {
      for (std::size_t v = u + 1; v < level.size(); ++v) {
        ASSERT_EQ(g.graph.adjacent(u, v), classify_pair(level[u], level[v]) == PairVerdict::UpOne);
      }
    }
  }
}

TEST(EmbedCograph, Examples) {
  const auto k1 = embed_cograph(L(0));
  EXPECT_EQ(k1.depth, 0U);
  EXPECT_TRUE(k1.map[0].empty());

  const auto k2 = embed_cograph(J({L(0), L(1)}));
  EXPECT_EQ(k2.depth, 1U);
  EXPECT_EQ(encode(k2.map[0]), "0");
  EXPECT_EQ(encode(k2.map[1]), "1");

  const auto two = embed_cograph(U({L(0), L(1)}));
  EXPECT_EQ(encode(two.map[0]), "0");
  EXPECT_EQ(encode(two.map[1]), "2");

  const auto padded = pad_embedding(two, 3);
  EXPECT_EQ(encode(padded.map[1]), "200");
  EXPECT_THROW(pad_embedding(padded, 2), ArgumentError);
}

TEST(EmbedCograph, EdgesAreExactlyUpPairs) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Cotree t = random_cotree(1 + seed % 32, seed * 7 + 1);
    const Graph g = eval_cotree(t);
    const auto e = embed_cograph(t);
    for (std::size_t u = 0; u < g.order(); ++u) {
      ASSERT_EQ(e.map[u].depth(), e.depth);
      for (std::size_t v = u + 1; v < g.order(); ++v) {
        ASSERT_NE(e.map[u], e.map[v]);
        const auto verdict = classify_pair(e.map[u], e.map[v]);
        ASSERT_EQ(g.adjacent(u, v), verdict == PairVerdict::UpOne);
      }
    }
  }
}

TEST(Bridges, GraphToWeave) {
  const auto w = graph_to_weave_oracle(graph_witness(comb_graph(1).graph, false), 1);
  EXPECT_TRUE(check_weave(w, WeaveParams{1, 2, SizeBound::omega(), SizeBound::omega(), true}).ok);

  try {
    graph_to_weave_oracle(graph_witness(complete_graph(4), false), 1);
    FAIL() << "expected PatternViolation";
  } catch (const PatternViolation& e) {
    EXPECT_FALSE(e.report().ok);
    EXPECT_EQ(e.labels().size(), 4U);
  }
}

TEST(Bridges, WeaveToGraph) {
  const auto w = weave_witness(2, 2, SizeBound::omega(), false);
  const Cotree two_k2 = U({J({L(0), L(1)}), J({L(2), L(3)})});
  const auto p = weave_to_graph_oracle(w, 2, two_k2);
  EXPECT_TRUE(check_graph_pattern(p, eval_cotree(two_k2)).ok);

  const auto edge = weave_to_graph_oracle(w, 2, J({L(0), L(1)}));
  EXPECT_FALSE(edge.consistent(std::vector<std::size_t>{0, 1}));

  const Cotree deep = U({J({L(0), U({L(1), L(2)})}), L(3)});
  EXPECT_THROW(weave_to_graph_oracle(weave_witness(1, 2, SizeBound::omega(), false), 1, deep), ArgumentError);

  const auto empty = ConsistencyInterface::from_sets(SetSystem::empty({}, level_labels(1)));
  EXPECT_THROW(weave_to_graph_oracle(empty, 1, J({L(0), L(1)})), PatternViolation);
}

TEST(RandomCotree, IsDeterministicAndAlternating) {
  EXPECT_EQ(random_cotree(1, 5), L(0));
  EXPECT_EQ(random_cotree(20, 9), random_cotree(20, 9));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Cotree t = random_cotree(2 + seed % 20, seed);
    ASSERT_EQ(t, normalize(t));
    ASSERT_FALSE(find_p4(eval_cotree(t)));
  }
}

TEST(CographJson, RoundTripsAndDot) {
  const Cotree t = J({U({L(0), L(2)}), U({L(1), L(3)})});
  EXPECT_EQ(cotree_from_json(to_json(t)), t);
  EXPECT_EQ(to_json(L(4)).dump(), R"({"op":"leaf","vertex":4})");
  EXPECT_EQ(to_dot(t).rfind("digraph cotree", 0), 0U);
  EXPECT_THROW(cotree_from_json(nlohmann::json::parse(R"({"op":"meet","children":[]})")), ArgumentError);

  const Graph g = cycle_graph(5);
  EXPECT_EQ(graph_from_json(to_json(g)), g);
  EXPECT_EQ(to_dot(g).rfind("graph G", 0), 0U);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n":2,"edges":[[0]]})")), ArgumentError);
}

}  // namespace
}  // namespace comblab
