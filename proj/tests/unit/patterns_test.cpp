#include <gtest/gtest.h>

#include <random>

#include "comblab/oracles.hpp"
#include "comblab/patterns.hpp"

namespace comblab {
namespace {

// sets[i] lists atom numbers; labels default to "0", "1", ...
ConsistencyInterface system_of(const std::vector<std::vector<std::size_t>>& sets,
                               std::vector<std::string> labels = {}) {
  std::size_t atoms = 0;
  for (const auto& s : sets) {
    for (auto a : s) atoms = std::max(atoms, a + 1);
  }
  std::vector<std::string> universe;
  for (std::size_t a = 0; a < atoms; ++a) universe.push_back("a" + std::to_string(a));
  if (labels.empty()) {
    for (std::size_t i = 0; i < sets.size(); ++i) labels.push_back(std::to_string(i));
  }
  SetSystem sys = SetSystem::empty(universe, labels);
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (auto a : sets[i]) sys.sets[i].set(a);
  }
  return ConsistencyInterface::from_sets(std::move(sys));
}

std::vector<std::size_t> idx(std::initializer_list<std::size_t> l) { return l; }



ConsistencyInterface random_system(std::size_t indices, std::size_t atoms, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::vector<std::size_t>> sets(indices);
  for (auto& s : sets) {
    for (std::size_t a = 0; a < atoms; ++a) {
      if (coin(rng)) s.push_back(a);
    }
  }
  SetSystem sys = SetSystem::empty({}, {});
  for (std::size_t a = 0; a < atoms; ++a) sys.universe.push_back("a" + std::to_string(a));
  for (std::size_t i = 0; i < indices; ++i) {
    sys.labels.push_back(std::to_string(i));
    DynamicBitset b(atoms);
    for (auto a : sets[i]) b.set(a);
    sys.sets.push_back(b);
  }
  return ConsistencyInterface::from_sets(std::move(sys));
}

// Every subfamily of every consistent family is consistent.
bool monotone_on_all_subfamilies(const ConsistencyInterface& ci) {
  const std::size_t n = ci.size();
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::vector<std::size_t> fam;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) fam.push_back(i);
    }
    if (!ci.consistent(fam)) continue;
    for (std::size_t drop = 0; drop < fam.size(); ++drop) {
      auto sub = fam;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!ci.consistent(sub)) return false;
    }
  }
  return true;
}

TEST(Consistency, Examples) {
  const auto ci = system_of({{1, 2}, {2, 3}, {9}});
  EXPECT_TRUE(ci.consistent(idx({0, 1})));
  EXPECT_FALSE(ci.consistent(idx({0, 2})));
  EXPECT_TRUE(ci.consistent(std::vector<std::size_t>{}));
  EXPECT_THROW(ci.consistent(idx({3})), ArgumentError);
}

TEST(Consistency, KInconsistent) {
  const auto disjoint = system_of({{0}, {1}, {2}});
  const auto all = idx({0, 1, 2});
  EXPECT_TRUE(k_inconsistent(disjoint, all, 2));
  EXPECT_TRUE(k_inconsistent(disjoint, all, 4));
  EXPECT_FALSE(k_inconsistent(system_of({{1, 2}, {2, 3}, {9}}), all, 2));
  EXPECT_THROW(k_inconsistent(disjoint, all, 1), ArgumentError);
}

TEST(Consistency, CursorMatchesDirectQueries) {
  std::mt19937_64 rng(7);
  const auto ci = random_system(10, 12, 0.6, rng);
  auto cur = ci.cursor();
  for_each_hereditary_subset(
      10, 6, [](const std::vector<std::size_t>&, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& fam) {
        while (cur.family().size() >= fam.size()) cur.pop();
        cur.push(fam.back());
        EXPECT_EQ(cur.consistent(), ci.consistent(fam));
        return Walk::Descend;
      });
}

TEST(Consistency, OraclePullbackAndJson) {
  const auto ci = ConsistencyInterface::from_oracle(
      {"x", "y"}, [](std::span<const std::size_t> f) { return f.size() < 2; }, true);
  EXPECT_TRUE(ci.consistent(idx({1})));
  EXPECT_FALSE(ci.consistent(idx({0, 1})));
  EXPECT_EQ(ci.set_system(), nullptr);
  const std::vector<std::size_t> src{1, 1, 0};
  const auto pb = ci.pullback(src, {"p", "q", "r"});
  EXPECT_FALSE(pb.consistent(idx({0, 2})));

  const auto sys = system_of({{0}, {0, 1}}, {"u", "v"});
  const auto round = set_system_from_json(to_json(*sys.set_system()));
  EXPECT_EQ(round.labels, (std::vector<std::string>{"u", "v"}));
  EXPECT_EQ(round.sets, sys.set_system()->sets);
  EXPECT_THROW(align_labels(round, {"u", "w"}), ArgumentError);
  EXPECT_THROW(set_system_from_json(nlohmann::json::parse(R"({"universe":["a"],"family":[{"index":"0","set":["b"]}]})")),
               ArgumentError);
}

TEST(CheckWeave, WitnessExample) {
  const auto w = weave_witness(1, 2, SizeBound::finite(1), false);
  const WeaveParams p{1, 2, SizeBound::finite(1), SizeBound::finite(1), true};
  EXPECT_TRUE(check_weave(w, p).ok);
  EXPECT_TRUE(oracle::weave_holds(w, p));
  // No wide right comb contains an up pair.
  EXPECT_FALSE(w.consistent(idx({0, 1})));
  EXPECT_FALSE(w.consistent(idx({2, 3})));
}

TEST(CheckWeave, EmptySetAtDepthZero) {
  const auto ci = system_of({{}}, {"-"});
  const auto r = check_weave(ci, WeaveParams{0, 2, SizeBound::omega(), SizeBound::omega(), false});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::Consistency);
  EXPECT_EQ(r.violations[0].indices, idx({0}));
}

TEST(CheckWeave, DeletedAtomIsNamed) {
  SetSystem s = *weave_witness(1, 2, SizeBound::finite(1), false).set_system();
  const auto it = std::find(s.universe.begin(), s.universe.end(), "0+2");
  ASSERT_NE(it, s.universe.end());
  s.sets[0].reset(static_cast<std::size_t>(it - s.universe.begin()));
  const auto broken = ConsistencyInterface::from_sets(s);
  const auto r = check_weave(broken, WeaveParams{1, 2, SizeBound::finite(1), SizeBound::finite(1), true});
  ASSERT_FALSE(r.ok);
  const auto& v = r.violations.front();
  EXPECT_EQ(v.kind, ViolationKind::Consistency);
  EXPECT_EQ(v.indices, idx({0, 2}));
  EXPECT_EQ(v.certificate.at("class"), "WideRight(1,Recursive)");
  const auto j = to_json(r, broken.labels());
  EXPECT_EQ(j.at("violations")[0].at("indices"), nlohmann::json::parse(R"(["0","2"])"));
}

TEST(CheckWeave, ArgumentErrors) {
  const auto w = weave_witness(1, 2, SizeBound::finite(1), false);
  EXPECT_THROW(check_weave(w, WeaveParams{2, 2}), ArgumentError);
  EXPECT_THROW(check_weave(w, WeaveParams{1, 1}), ArgumentError);
}

TEST(CheckWeave, ViolationsAreTruncated) {
  const auto empty = system_of(std::vector<std::vector<std::size_t>>(16), level_labels(2));
  CheckOptions o;
  o.max_violations = 3;
  const auto r = check_weave(empty, WeaveParams{2, 2}, o);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.truncated);
  EXPECT_EQ(r.violations.size(), 3U);
  EXPECT_EQ(r.cap, 8U);
}

TEST(CheckWeave, AgreesWithUncappedOracleOnRandomSystems) {
  std::mt19937_64 rng(0xC0FFEE);
  std::size_t failing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t d = trial % 3 == 0 ? 2 : 1;
    const auto ci = random_system(level_size(d), 2 + rng() % 5, 0.3 + 0.1 * static_cast<double>(rng() % 6), rng);
    for (bool strong : {false, true}) {
      const WeaveParams p{d, 2 + rng() % 2, SizeBound::finite(1 + rng() % 2), SizeBound::omega(), strong};
      const bool got = check_weave(ci, p, CheckOptions::exhaustive()).ok;
      ASSERT_EQ(got, oracle::weave_holds(ci, p)) << "trial " << trial;
      failing += got ? 0 : 1;
    }
  }
  EXPECT_GT(failing, 0U);
}

TEST(CheckWeave, ParameterCollapseWhenMPlusOneReachesK) {
  std::vector<ConsistencyInterface> systems;
  for (std::size_t d = 0; d <= 2; ++d) {
    for (const auto& n : {SizeBound::finite(1), SizeBound::omega()}) {
      systems.push_back(weave_witness(d, 2, n, false));
      systems.push_back(weave_witness(d, 3, n, true));
    }
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) systems.push_back(random_system(i % 2 ? 16 : 4, 5, 0.6, rng));
  for (const auto& ci : systems) {
    const std::size_t d = ci.size() == 1 ? 0 : ci.size() == 4 ? 1 : 2;
    for (std::size_t k : {2, 3}) {
      for (std::size_t m = k - 1; m <= 3; ++m) {
        for (bool strong : {false, true}) {
          const WeaveParams a{d, k, SizeBound::finite(m), SizeBound::finite(1), strong};
          const WeaveParams b{d, k, SizeBound::omega(), SizeBound::finite(1), strong};
          ASSERT_EQ(check_weave(ci, a).ok, check_weave(ci, b).ok);
        }
      }
    }
  }
}

TEST(CheckGrid, Examples) {
  EXPECT_TRUE(check_grid(grid_witness(3, false), GridParams{3, 2, false}).ok);
  EXPECT_TRUE(check_grid(grid_witness(3, true), GridParams{3, 2, true}).ok);
  EXPECT_FALSE(check_grid(grid_witness(3, false), GridParams{3, 2, true}).ok);

  const auto constant = system_of({{0}, {0}, {0}, {0}}, grid_labels(2));
  const auto r = check_grid(constant, GridParams{2, 2, false});
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].kind, ViolationKind::Inconsistency);
  EXPECT_EQ(r.violations[0].indices, idx({1, 2}));
  EXPECT_EQ(r.violations[0].certificate.at("relation"), "antichain");
}

TEST(CheckGrid, AgreesWithOracleOnRandomSystems) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t s = 2 + trial % 2;
    const auto ci = random_system(s * s, 2 + rng() % 4, 0.5, rng);
    for (bool strong : {false, true}) {
      const GridParams p{s, 2 + rng() % 2, strong};
      ASSERT_EQ(check_grid(ci, p, CheckOptions::exhaustive()).ok, oracle::grid_holds(ci, p));
    }
  }
}

TEST(GridWitness, TwoByTwo) {
  const auto w = grid_witness(2, false);
  EXPECT_TRUE(w.consistent(idx({0, 3})));
  EXPECT_FALSE(w.consistent(idx({1, 2})));
  EXPECT_EQ(w.set_system()->universe.size(), 3U);
  EXPECT_EQ(w.labels(), (std::vector<std::string>{"0,0", "0,1", "1,0", "1,1"}));
}

TEST(CheckGraphPattern, Examples) {
  const Graph k2 = complete_graph(2);
  const auto w = graph_witness(k2, false);
  EXPECT_TRUE(check_graph_pattern(w, k2).ok);
  EXPECT_TRUE(w.consistent(idx({0})));
  EXPECT_FALSE(w.consistent(idx({0, 1})));
  EXPECT_TRUE(check_graph_pattern(graph_witness(path_graph(4), true), path_graph(4)).ok);

  const auto shared = system_of({{0}, {0}});
  const auto r = check_graph_pattern(shared, k2);
  ASSERT_FALSE(r.ok);
  EXPECT_EQ(r.violations[0].certificate.at("edge"), nlohmann::json::parse("[0,1]"));
}

TEST(CheckGraphPattern, AgreesWithOracleOnRandomSystems) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Graph g = oracle::random_graph(n, 1, 3, rng);
    const auto ci = trial % 4 == 0 ? graph_witness(g, true) : random_system(n, 3, 0.6, rng);
    ASSERT_EQ(check_graph_pattern(ci, g).ok, oracle::graph_pattern_holds(ci, g));
  }
}

TEST(Witnesses, AreMonotone) {
  for (std::size_t d = 0; d <= 2; ++d) {
    ASSERT_TRUE(monotone_on_all_subfamilies(weave_witness(d, 2, SizeBound::finite(1), false)));
    ASSERT_TRUE(monotone_on_all_subfamilies(weave_witness(d, 3, SizeBound::omega(), true)));
  }
  for (std::size_t s = 1; s <= 4; ++s) {
    ASSERT_TRUE(monotone_on_all_subfamilies(grid_witness(s, false)));
    ASSERT_TRUE(monotone_on_all_subfamilies(grid_witness(s, true)));
  }
  ASSERT_TRUE(monotone_on_all_subfamilies(graph_witness(cycle_graph(5), true)));
}

TEST(Witnesses, KInconsistencyIsMonotoneInK) {
  std::vector<ConsistencyInterface> systems{weave_witness(1, 3, SizeBound::omega(), true),
                                            weave_witness(2, 2, SizeBound::finite(1), false),
                                            grid_witness(3, false), grid_witness(3, true)};
  for (const auto& ci : systems) {
    const std::size_t n = std::min<std::size_t>(ci.size(), 12);
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<std::size_t> fam;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1U) fam.push_back(i);
      }
      if (fam.size() > 5) continue;
      for (std::size_t k = 2; k <= 4; ++k) {
        if (!k_inconsistent(ci, fam, k)) continue;
        for (std::size_t k2 = k; k2 <= 4; ++k2) ASSERT_TRUE(k_inconsistent(ci, fam, k2));
      }
    }
  }
}

TEST(Witnesses, GridAntichainsAreKInconsistentForEveryK) {
  for (std::size_t s = 2; s <= 4; ++s) {
    const auto w = grid_witness(s, false);
    for (std::uint32_t mask = 1; mask < (1U << (s * s)); ++mask) {
      std::vector<std::size_t> fam;
      for (std::size_t i = 0; i < s * s; ++i) {
        if (mask >> i & 1U) fam.push_back(i);
      }
      if (fam.size() > 4 || !k_inconsistent(w, fam, 2)) continue;
      for (std::size_t k = 3; k <= 4; ++k) ASSERT_TRUE(k_inconsistent(w, fam, k));
    }
  }
}

TEST(Witnesses, GenuineKIsNotSmallerKInconsistent) {
  const auto w = weave_witness(1, 3, SizeBound::omega(), true);
  // The up pair {0,1} shares the atom {0,1}; no wide comb holds all three of an up triple.
  EXPECT_TRUE(w.consistent(idx({0, 1})));
  EXPECT_TRUE(check_weave(w, WeaveParams{1, 3, SizeBound::omega(), SizeBound::omega(), true}).ok);
  EXPECT_FALSE(check_weave(w, WeaveParams{1, 2, SizeBound::omega(), SizeBound::omega(), true}).ok);
}

TEST(Witnesses, WeaveLabelsAndNames) {
  const auto w = weave_witness(1, 2, SizeBound::finite(1), false);
  EXPECT_EQ(w.labels(), level_labels(1));
  const auto& u = w.set_system()->universe;
  EXPECT_NE(std::find(u.begin(), u.end(), "0+3"), u.end());
  EXPECT_EQ(std::find(u.begin(), u.end(), "0+1"), u.end());
  EXPECT_EQ(w.set_system()->universe.size(), 8U);

}

TEST(Realizable, Examples) {
  Template conflict{{"a", "b"}, {{0, 1}}, {{0, 1}}, 2};
  EXPECT_FALSE(realizable(conflict));

  Template empty{{"a", "b", "c"}, {}, {}, 2};
  const auto s = realizable(empty);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->universe.empty());
  EXPECT_EQ(s->labels.size(), 3U);

  Template ok{{"a", "b", "c", "d"}, {{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, 2};
  const auto r = realizable(ok);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->universe, (std::vector<std::string>{"{a,b}", "{c,d}"}));

  // k = 3: two shared indices are allowed, three are not.
  EXPECT_TRUE(realizable(Template{{"a", "b", "c"}, {{0, 1}}, {{0, 1, 2}}, 3}));
  EXPECT_FALSE(realizable(Template{{"a", "b", "c"}, {{0, 1, 2}}, {{0, 1, 2}}, 3}));

  EXPECT_THROW(realizable(Template{{"a"}, {{1}}, {}, 2}), ArgumentError);
  EXPECT_THROW(realizable(Template{{"a"}, {}, {}, 1}), ArgumentError);
}

TEST(Realizable, JsonRoundTrip) {
  const Template t{{"a", "b", "c"}, {{0, 1}}, {{1, 2}}, 3};
  const auto back = template_from_json(to_json(t));
  EXPECT_EQ(back.labels, t.labels);
  EXPECT_EQ(back.must_consist, t.must_consist);
  EXPECT_EQ(back.must_k_inconsist, t.must_k_inconsist);
  EXPECT_EQ(back.k, 3U);
  EXPECT_THROW(template_from_json(nlohmann::json::parse(R"({"indices":["a"],"must_consist":[["z"]]})")),
               ArgumentError);
}

TEST(Realizable, AgreesWithAssignmentSearch) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    const Template t = oracle::random_template(rng, 4, 4);
    ASSERT_EQ(realizable(t).has_value(), oracle::realizable_with_atoms(t, 4)) << to_json(t).dump();
  }
}

TEST(TriangleFree, Examples) {
  const auto two = triangle_free_demo(2);
  EXPECT_FALSE(two.p.consistent(idx({0, 1})));
  EXPECT_TRUE(two.p_graph.adjacent(1, 2));

  const auto five = triangle_free_demo(5);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_TRUE(five.p.consistent(std::vector<std::size_t>{i}));
    for (std::size_t j = i + 1; j < 5; ++j) EXPECT_FALSE(five.p.consistent(idx({i, j})));
  }
  EXPECT_TRUE(five.q.consistent(idx({0, 1, 2, 3, 4})));
  EXPECT_EQ(five.q_graph.edge_count(), 0U);
  EXPECT_EQ(five.p.labels()[3], "P3");
  EXPECT_THROW(triangle_free_demo(1), ArgumentError);
}

}  // namespace
}  // namespace comblab
