#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "rbmg/bench.hpp"
#include "rbmg/errors.hpp"
#include "rbmg/graph.hpp"
#include "rbmg/graph_io.hpp"
#include "test_util.hpp"

using namespace rbmg;
using rbmg::test::make;
using rbmg::test::pairs;

namespace {

ColoredGraph two_cluster_graph() { return make("ABCAB", {{0, 1}, {0, 2}, {1, 2}, {3, 4}}); }

std::vector<ColoredGraph> random_graphs(std::size_t count, std::uint64_t seed) {
  std::vector<ColoredGraph> out;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    GenSpec spec;
    spec.vertices = 1 + rng.below(8);
    spec.colors = 1 + rng.below(std::min<std::size_t>(spec.vertices, 4));
    spec.edge_probability = rng.uniform01();
    spec.seed = rng.next();
    out.push_back(random_colored_graph(spec));
  }
  return out;
}

}  // namespace

TEST(ColoredGraph, NormalizesColorsByFirstUse) {
  const ColoredGraph g({2, 0, 2, 1}, {}, {}, {"X", "Y", "Z"});
  EXPECT_EQ(g.color(0), 0U);
  EXPECT_EQ(g.color(1), 1U);
  EXPECT_EQ(g.color(3), 2U);
  EXPECT_EQ(g.color_name(0), "Z");
  EXPECT_EQ(g.color_name(1), "X");
  EXPECT_EQ(g.color_count(), 3U);
}

TEST(ColoredGraph, RejectsBadInput) {
  EXPECT_THROW(ColoredGraph({0, 2}, {}), GraphError);  // color 1 unused
  EXPECT_THROW(VertexPair::of(1, 1), GraphError);
  EXPECT_THROW(ColoredGraph({0, 1}, pairs({{0, 1}, {0, 1}})), GraphError);
  EXPECT_THROW(ColoredGraph({0, 1}, pairs({{0, 2}})), GraphError);
}

TEST(ColoredGraph, TracksProperColoring) {
  EXPECT_TRUE(make("AB", {{0, 1}}).is_properly_colored());
  EXPECT_FALSE(make("AA", {{0, 1}}).is_properly_colored());
}

TEST(InducedSubgraph, Examples) {
  const auto edge = make("AB", {{0, 1}});
  const std::vector<Vertex> a{0};
  const auto k1 = induced_subgraph(edge, a);
  EXPECT_EQ(k1.vertex_count(), 1U);
  EXPECT_EQ(k1.color_count(), 1U);
  EXPECT_EQ(k1.color_name(0), "A");

  // {a1, b2} of the two-cluster graph: two colors, no edge.
  const std::vector<Vertex> w{0, 4};
  const auto sub = induced_subgraph(two_cluster_graph(), w);
  EXPECT_EQ(sub.vertex_count(), 2U);
  EXPECT_EQ(sub.color_count(), 2U);
  EXPECT_EQ(sub.edge_count(), 0U);

  const auto g = two_cluster_graph();
  const std::vector<Vertex> all{0, 1, 2, 3, 4};
  EXPECT_EQ(induced_subgraph(g, all), g);

  const std::vector<Vertex> bad{0, 9};
  EXPECT_THROW(induced_subgraph(g, bad), GraphError);
}

TEST(InducedSubgraph, ReindexesColors) {
  const auto g = make("ABC", {{0, 2}});
  const std::vector<Vertex> w{0, 2};
  const auto sub = induced_subgraph(g, w);
  EXPECT_EQ(sub.color_count(), 2U);
  EXPECT_EQ(sub.color_name(1), "C");
  EXPECT_TRUE(sub.has_edge(0, 1));
}

TEST(HubVertex, Examples) {
  const auto p4 = test::p4();
  const auto plus = add_hub_vertex(p4, p4.color_count(), "x", "C");
  EXPECT_EQ(plus.vertex_count(), 5U);
  EXPECT_EQ(plus.degree(4), 4U);
  EXPECT_EQ(plus.color_count(), 3U);
  EXPECT_TRUE(same_colored_structure(remove_vertex(plus, 4), p4));

  const auto k2 = add_hub_vertex(make("A"), 1);
  EXPECT_EQ(k2.edge_count(), 1U);
  EXPECT_EQ(k2.color_count(), 2U);
  EXPECT_TRUE(k2.is_properly_colored());

  EXPECT_THROW(remove_vertex(p4, 7), GraphError);
  EXPECT_THROW(add_hub_vertex(p4, 5), GraphError);
}

TEST(JoinUnion, Examples) {
  const auto ab = colored_join(make("A"), make("B"));
  EXPECT_TRUE(same_colored_structure(ab, make("AB", {{0, 1}})));

  const auto aa = colored_union(make("A"), make("A"));
  EXPECT_EQ(aa.vertex_count(), 2U);
  EXPECT_EQ(aa.color_count(), 1U);
  EXPECT_EQ(aa.edge_count(), 0U);

  const auto c4 = colored_join(make("AA"), make("BB"));
  EXPECT_TRUE(same_colored_structure(c4, make("AABB", {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));
  EXPECT_EQ(c4.edge_count(), 4U);
  for (Vertex v = 0; v < 4; ++v) EXPECT_EQ(c4.degree(v), 2U);
}

TEST(ApplyEdits, Examples) {
  const auto p4 = test::p4();
  const auto split = apply_edits(p4, EditSet(EditMode::editing, pairs({{1, 2}})));
  EXPECT_EQ(split.edge_count(), 2U);
  EXPECT_EQ(connected_components(split).size(), 2U);

  EXPECT_EQ(apply_edits(p4, EditSet(EditMode::editing, {})), p4);

  const auto k3 = apply_edits(make("ABC"), EditSet(EditMode::editing, pairs({{0, 1}, {0, 2}, {1, 2}})));
  EXPECT_EQ(k3.edge_count(), 3U);
}

TEST(ApplyEdits, RejectsModeViolations) {
  const auto p4 = test::p4();
  EXPECT_THROW(apply_edits(p4, EditSet(EditMode::deletion, pairs({{0, 3}}))), GraphError);
  EXPECT_THROW(apply_edits(p4, EditSet(EditMode::completion, pairs({{0, 1}}))), GraphError);
  EXPECT_THROW(apply_edits(p4, EditSet(EditMode::editing, pairs({{0, 2}}))), GraphError);  // same color
  EXPECT_THROW(EditSet(EditMode::editing, pairs({{0, 1}, {1, 0}})), GraphError);
}

TEST(Components, HubsAndCrossPairs) {
  const auto star = make("ABBB", {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(hub_vertices(star), std::vector<Vertex>{0});
  EXPECT_TRUE(hub_vertices(test::c4()).empty());
  EXPECT_EQ(cross_pairs(make("AABBB")).size(), 6U);
  EXPECT_EQ(hub_vertices(make("A")), std::vector<Vertex>{0});
}

TEST(GraphProperties, EditIsInvolution) {
  Rng rng(11);
  for (const auto& g : random_graphs(300, 1)) {
    std::vector<VertexPair> f;
    for (const auto& p : cross_pairs(g)) {
      if (rng.bernoulli(0.3)) f.push_back(p);
    }
    const EditSet edits(EditMode::editing, f);
    EXPECT_EQ(apply_edits(apply_edits(g, edits), edits), g);
  }
}

TEST(GraphProperties, HubRemovalRestoresGraph) {
  for (const auto& g : random_graphs(300, 2)) {
    const auto plus = add_hub_vertex(g, g.color_count());
    std::vector<Vertex> original(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) original[v] = v;
    EXPECT_EQ(induced_subgraph(plus, original), g);
  }
}

TEST(GraphProperties, CrossPairCountAndComponents) {
  for (const auto& g : random_graphs(300, 3)) {
    const auto classes = g.color_classes();
    std::size_t expected = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) expected += classes[i].size() * classes[j].size();
    }
    EXPECT_EQ(cross_pairs(g).size(), expected);

    std::set<Vertex> seen;
    std::size_t total = 0;
    for (const auto& comp : connected_components(g)) {
      total += comp.size();
      seen.insert(comp.begin(), comp.end());
    }
    EXPECT_EQ(total, g.vertex_count());
    EXPECT_EQ(seen.size(), g.vertex_count());
  }
}

TEST(GraphIo, RoundTripIsByteIdentical) {
  for (const auto& g : random_graphs(200, 4)) {
    const auto text = format_graph(g);
    const auto back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(format_graph(back), text);
  }
}

TEST(GraphIo, ParsesCommentsAndNames) {
  const auto g = parse_graph(
      "# two-cluster graph\n"
      "p cgraph 3 2\n"
      "v x A\n"
      "v y B   # trailing comment\n"
      "\n"
      "v z A\n"
      "e x y\n"
      "e z y\n");
  EXPECT_EQ(g.vertex_count(), 3U);
  EXPECT_EQ(g.vertex_name(2), "z");
  EXPECT_EQ(g.color_name(1), "B");
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_EQ(g.find_vertex("y"), std::optional<Vertex>(1));
}

TEST(GraphIo, ReportsErrorsWithLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("p cgraph 2 2\nv a A\nv b B\ne a b\ne b a\n"), 5U);  // repeated edge
  EXPECT_EQ(line_of("p cgraph 2 2\nv a A\nv b B\ne a a\n"), 4U);         // self-loop
  EXPECT_EQ(line_of("p cgraph 2 2\nv a A\nv b B\ne a q\n"), 4U);         // unknown vertex
  EXPECT_NE(line_of("p cgraph 3 2\nv a A\nv b B\n"), 0U);                // count mismatch
  EXPECT_NE(line_of("p cgraph 2 1\nv a A\nv b B\n"), 0U);
  EXPECT_EQ(line_of("v a A\n"), 1U);                                     // missing header
  EXPECT_EQ(line_of("p cgraph 2 2\nv a A\nv a B\n"), 3U);                // duplicate name
}

TEST(GraphIo, AcceptsImproperColoring) {
  const auto g = parse_graph("p cgraph 2 1\nv a A\nv b A\ne a b\n");
  EXPECT_FALSE(g.is_properly_colored());
}
