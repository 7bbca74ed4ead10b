#include <gtest/gtest.h>

#include <set>

#include "comblab/combs.hpp"
#include "comblab/oracles.hpp"

namespace comblab {
namespace {

std::vector<Node> nodes(std::initializer_list<const char*> texts) {
  std::vector<Node> out;
  for (const char* t : texts) out.push_back(decode(t));
  return out;
}

std::vector<std::vector<Node>> all_subsets(std::size_t d) {
  const auto level = enumerate_level(d);
  std::vector<std::vector<Node>> out;
  for (std::uint32_t mask = 1; mask < (1U << level.size()); ++mask) {
    std::vector<Node> s;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (mask >> i & 1U) s.push_back(level[i]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

const SizeBound kOne = SizeBound::finite(1);
const SizeBound kTwo = SizeBound::finite(2);
const SizeBound kOmega = SizeBound::omega();

TEST(SizeBound, ParseAndPrint) {
  EXPECT_TRUE(SizeBound::parse("omega").is_omega());
  EXPECT_TRUE(SizeBound::parse("w").is_omega());
  EXPECT_EQ(SizeBound::parse("3"), SizeBound::finite(3));
  EXPECT_EQ(SizeBound::finite(2).to_string(), "2");
  EXPECT_THROW(SizeBound::parse("x"), ArgumentError);
  EXPECT_TRUE(kOmega.admits(1000000));
  EXPECT_FALSE(kOne.admits(2));
}

TEST(SplitRelation, Examples) {
  const auto a = nodes({"0"});
  const auto r1 = split_relation(a, nodes({"1"}));
  ASSERT_EQ(r1.size(), 1U);
  EXPECT_EQ(r1[0].kind, SplitKind::NarrowBelow);
  EXPECT_EQ(r1[0].bit, 0);
  EXPECT_TRUE(r1[0].tau.empty());

  const auto r2 = split_relation(a, nodes({"2"}));
  std::set<SplitKind> kinds;
  for (const auto& w : r2) kinds.insert(w.kind);
  EXPECT_EQ(kinds, (std::set<SplitKind>{SplitKind::NarrowLeft, SplitKind::WideLeft}));

  const auto r3 = split_relation(a, nodes({"3"}));
  ASSERT_EQ(r3.size(), 1U);
  EXPECT_EQ(r3[0].kind, SplitKind::WideLeft);

  EXPECT_THROW(split_relation({}, a), ArgumentError);
  EXPECT_THROW(split_relation(a, a), ArgumentError);
}

TEST(SplitRelation, AgreesWithDefinitionalChecks) {
  // All pairs of disjoint nonempty subsets of depth-1 nodes.
  const auto subsets = all_subsets(1);
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      bool disjoint = true;
      for (const auto& x : a) disjoint = disjoint && std::find(b.begin(), b.end(), x) == b.end();
      if (!disjoint) continue;
      const auto ws = split_relation(a, b);
      auto has = [&](SplitKind k) {
        return std::any_of(ws.begin(), ws.end(), [k](const SplitWitness& w) { return w.kind == k; });
      };
      ASSERT_EQ(has(SplitKind::NarrowBelow), oracle::narrowly_below(a, b));
      ASSERT_EQ(has(SplitKind::NarrowLeft), oracle::narrowly_left(a, b));
      ASSERT_EQ(has(SplitKind::WideLeft), oracle::widely_left(a, b));
      ASSERT_FALSE(has(SplitKind::NarrowBelow) && has(SplitKind::WideLeft));
    }
  }
}

TEST(ClassifyPair, Examples) {
  EXPECT_EQ(classify_pair(decode("0"), decode("1")), PairVerdict::UpOne);
  EXPECT_EQ(classify_pair(decode("00"), decode("01")), PairVerdict::UpOne);
  EXPECT_EQ(classify_pair(decode("03"), decode("20")), PairVerdict::WideRightOne);
  EXPECT_THROW(classify_pair(decode("0"), decode("0")), ArgumentError);
  EXPECT_THROW(classify_pair(decode("0"), decode("01")), ArgumentError);
}

TEST(ClassifyPair, ExactlyOneClassAtDepthThree) {
  const auto level = enumerate_level(3);
  for (std::size_t u = 0; u < level.size(); ++u) {
    for (std::size_t v = u + 1; v < level.size(); ++v) {
      const std::array<Node, 2> pair{level[u], level[v]};
      const bool up = is_comb(pair, CombClass::up(kOne)).has_value();
      const bool wide = is_comb(pair, CombClass::wide_right(kOne)).has_value();
      ASSERT_NE(up, wide);
      ASSERT_EQ(up, classify_pair(level[u], level[v]) == PairVerdict::UpOne);
      ASSERT_EQ(up, oracle::in_comb_class(pair, CombClass::up(kOne)));
    }
  }
}

TEST(IsComb, Examples) {
  const auto s = nodes({"00", "01", "10"});
  const auto cert = is_comb(s, CombClass::up(kTwo));
  ASSERT_TRUE(cert.has_value());
  ASSERT_EQ(cert->parts.size(), 2U);
  EXPECT_EQ(cert->parts[0].members, nodes({"00", "01"}));
  EXPECT_EQ(cert->parts[1].members, nodes({"10"}));
  EXPECT_EQ(cert->split->kind, SplitKind::NarrowBelow);
  EXPECT_TRUE(verify_certificate(*cert, CombClass::up(kTwo)));

  EXPECT_FALSE(is_comb(s, CombClass::up(kOne)));
  EXPECT_FALSE(is_comb(nodes({"00", "13", "20"}), CombClass::wide_right(kOmega)));
  EXPECT_THROW(is_comb(nodes({"0", "01"}), CombClass::up(kOne)), ArgumentError);
  EXPECT_THROW(is_comb(std::vector<Node>{}, CombClass::up(kOne)), ArgumentError);
}

TEST(IsComb, CertificateJson) {
  const auto cert = is_comb(nodes({"0", "2"}), CombClass::right(kOne));
  ASSERT_TRUE(cert);
  const auto j = certificate_to_json(*cert);
  EXPECT_EQ(j.at("A"), "0");
  EXPECT_EQ(j.at("B"), "2");
  EXPECT_EQ(j.at("split").at("tau"), "-");
  EXPECT_EQ(j.at("split").at("kind"), "NarrowLeft(0)");
}

TEST(IsComb, CertificatesDoNotVerifyForOtherClasses) {
  const auto cert = is_comb(nodes({"00", "01", "10"}), CombClass::up(kTwo));
  ASSERT_TRUE(cert);
  EXPECT_FALSE(verify_certificate(*cert, CombClass::up(kOne)));
  EXPECT_FALSE(verify_certificate(*cert, CombClass::right(kTwo)));
}

TEST(IsComb, WideReadingsDiffer) {
  // Wide parts that are not narrow right combs separate the two readings.
  bool differ = false;
  for (const auto& s : all_subsets(2)) {
    if (s.size() > 5) continue;
    const bool rec = is_comb(s, CombClass::wide_right(kOmega, WideReading::Recursive)).has_value();
    const bool lit = is_comb(s, CombClass::wide_right(kOmega, WideReading::Literal)).has_value();
    if (lit) {
      ASSERT_TRUE(rec) << "Literal accepts a set the Recursive reading rejects";
    }
    differ = differ || rec != lit;
  }
  EXPECT_TRUE(differ);
}

TEST(IsComb, WideCharacterizationAtDepthTwo) {
  for (const auto& s : all_subsets(2)) {
    bool up_pair = false;
    for (std::size_t i = 0; i < s.size() && !up_pair; ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (classify_pair(s[i], s[j]) == PairVerdict::UpOne) up_pair = true;
      }
    }
    ASSERT_EQ(is_comb(s, CombClass::wide_right(kOmega)).has_value(), !up_pair);
  }
}

TEST(IsComb, MatchesBuildTreeOracleAtDepthOne) {
  for (const auto& s : all_subsets(1)) {
    for (const auto& n : {kOne, kTwo, kOmega}) {
      for (const auto& c : {CombClass::up(n), CombClass::right(n), CombClass::wide_right(n),
                            CombClass::wide_right(n, WideReading::Literal)}) {
        ASSERT_EQ(is_comb(s, c).has_value(), oracle::in_comb_class(s, c)) << c.to_string();
      }
    }
  }
}

TEST(EnumerateCombs, UpOneAtDepthOne) {
  const auto got = enumerate_combs(1, CombClass::up(kOne), 2);
  const std::vector<std::vector<Node>> expected{
      nodes({"0"}), nodes({"0", "1"}), nodes({"1"}), nodes({"2"}), nodes({"2", "3"}), nodes({"3"})};
  EXPECT_EQ(got, expected);
}

TEST(EnumerateCombs, MatchesSubsetFilter) {
  for (std::size_t d = 0; d <= 2; ++d) {
    for (const auto& c : {CombClass::up(kOne), CombClass::right(kTwo), CombClass::wide_right(kOmega),
                          CombClass::wide_right(kOne, WideReading::Literal)}) {
      std::set<std::vector<Node>> expected;
      for (const auto& s : d == 0 ? std::vector<std::vector<Node>>{{Node{}}} : all_subsets(d)) {
        if (s.size() <= 4 && is_comb(s, c)) expected.insert(s);
      }
      const auto got = enumerate_combs(d, c, 4);
      ASSERT_EQ(std::set<std::vector<Node>>(got.begin(), got.end()), expected) << c.to_string() << " d=" << d;
      ASSERT_EQ(got.size(), expected.size()) << "duplicates";
      ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST(EnumerateCombs, WideOmegaAtDepthOneIsTheUpPairFreeSets) {
  // No two from {0,1}, no two from {2,3}: 3 * 3 - 1 = 8 sets.
  const auto got = enumerate_combs(1, CombClass::wide_right(kOmega), 4);
  EXPECT_EQ(got.size(), 8U);
  for (const auto& s : got) {
    const auto low = std::count_if(s.begin(), s.end(), [](const Node& x) { return x.code_at(0) < 2; });
    EXPECT_LE(low, 1);
    EXPECT_LE(static_cast<long>(s.size()) - low, 1);
  }
}

TEST(EnumerateCombs, DepthZeroAndLimits) {
  const auto got = enumerate_combs(0, CombClass::up(kOmega), 3);
  ASSERT_EQ(got.size(), 1U);
  EXPECT_TRUE(got[0][0].empty());
  EXPECT_THROW(enumerate_combs(kCombEnumerationDepthLimit + 1, CombClass::up(kOne), 2), ResourceError);
}

TEST(EnumerateCombs, IteratorMatchesVector) {
  CombEnumerator it(2, CombClass::up(kTwo), 3);
  std::vector<std::vector<Node>> seen;
  while (auto s = it.next()) seen.push_back(*s);
  EXPECT_EQ(seen, enumerate_combs(2, CombClass::up(kTwo), 3));
}

TEST(BinaryRightComb, Examples) {
  const std::vector<std::string> a{"0", "1"};
  const std::vector<std::string> b{"00", "01"};
  const std::vector<std::string> c{"0", "10", "11"};
  EXPECT_TRUE(is_binary_right_comb(a, kOne));
  EXPECT_TRUE(is_binary_right_comb(b, kOne));
  EXPECT_TRUE(is_binary_right_comb(c, kOne));
  const std::vector<std::string> bad{"0", "2"};
  EXPECT_THROW(is_binary_right_comb(bad, kOne), ArgumentError);
}

TEST(BinaryRightComb, MatchesBuildTreeOracle) {
  std::vector<std::string> strings;
  for (std::size_t len = 0; len <= 3; ++len) {
    for (std::uint32_t bits = 0; bits < (1U << len); ++bits) {
      std::string s;
      for (std::size_t i = 0; i < len; ++i) s.push_back((bits >> (len - 1 - i) & 1U) ? '1' : '0');
      strings.push_back(s);
    }
  }
  // All subsets of size <= 4 of the 15 strings.
  std::size_t checked = 0;
  for (std::uint32_t mask = 1; mask < (1U << strings.size()); ++mask) {
    if (std::popcount(mask) > 4) continue;
    std::vector<std::string> s;
    for (std::size_t i = 0; i < strings.size(); ++i) {
      if (mask >> i & 1U) s.push_back(strings[i]);
    }
    for (const auto& n : {kOne, kTwo, kOmega}) {
      ASSERT_EQ(is_binary_right_comb(s, n), oracle::in_binary_right_class(s, n));
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000U);
}

}  // namespace
}  // namespace comblab
