#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rbmg/graph.hpp"
#include "test_util.hpp"

using namespace rbmg;
using rbmg::test::make;

TEST(OracleTreeCount, SmallValues) {
  // 1 and 2 leaves: one tree each; 3 leaves: the star and three binary trees.
  EXPECT_EQ(oracle::count_trees(1), 1U);
  EXPECT_EQ(oracle::count_trees(2), 1U);
  EXPECT_EQ(oracle::count_trees(3), 4U);
  EXPECT_EQ(oracle::count_trees(4), 26U);
}

TEST(OracleTreeCount, HierarchiesMatchCountAndAreDistinct) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto hs = oracle::all_hierarchies(n);
    EXPECT_EQ(hs.size(), oracle::count_trees(n)) << n;
    std::set<std::string> forms;
    for (const auto& h : hs) forms.insert(oracle::canonical_form(h, n));
    EXPECT_EQ(forms.size(), hs.size()) << n;
  }
}

TEST(OracleRbmg, HandExamples) {
  EXPECT_TRUE(oracle::is_rbmg(make("AB", {{0, 1}})));
  EXPECT_FALSE(oracle::is_rbmg(make("AB")));
  EXPECT_FALSE(oracle::is_rbmg(test::p4()));
  EXPECT_TRUE(oracle::is_rbmg(test::c4()));
  EXPECT_TRUE(oracle::is_rbmg(make("AA")));
}

TEST(OracleHc, HandExamples) {
  EXPECT_FALSE(oracle::is_hc_cograph(make("AB")));
  EXPECT_TRUE(oracle::is_hc_cograph(make("AA")));
  EXPECT_TRUE(oracle::is_hc_cograph(test::c4()));
  EXPECT_FALSE(oracle::is_hc_cograph(test::p4()));
  EXPECT_FALSE(oracle::is_hc_cograph(make("AA", {{0, 1}})));  // join of two A parts
}

TEST(OracleModification, P4) {
  auto bicluster = [](const ColoredGraph& g) { return oracle::is_bicluster(g); };
  EXPECT_EQ(oracle::min_modification(test::p4(), EditMode::editing, bicluster, 3), std::optional<std::size_t>(1));
  EXPECT_EQ(oracle::min_modification(test::p4(), EditMode::deletion, bicluster, 3), std::optional<std::size_t>(1));
  EXPECT_EQ(oracle::min_modification(test::p4(), EditMode::completion, bicluster, 3), std::optional<std::size_t>(1));
  auto never = [](const ColoredGraph&) { return false; };
  EXPECT_EQ(oracle::min_modification(test::p4(), EditMode::deletion, never, 3), std::nullopt);
}

TEST(OracleGraphs, EnumerationCounts) {
  std::size_t count = 0;
  oracle::for_each_colored_graph(3, 2, [&](const ColoredGraph& g) {
    EXPECT_EQ(g.color_count(), 2U);
    ++count;
  });
  // Colorings AAB, ABA, ABB, each with two cross pairs.
  EXPECT_EQ(count, 12U);
}
