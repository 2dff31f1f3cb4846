#include <gtest/gtest.h>

#include <fstream>

#include "oracles.hpp"
#include "rbmg/bench.hpp"
#include "rbmg/errors.hpp"
#include "rbmg/graph_io.hpp"
#include "rbmg/recognize.hpp"
#include "test_util.hpp"

using namespace rbmg;
using rbmg::test::make;

namespace {

ColoredGraph two_cluster_graph() {
  std::ifstream in(std::string(RBMG_TEST_DATA) + "/two_clusters.cg");
  return parse_graph(in);
}

std::vector<ColoredGraph> random_graphs(std::size_t count, std::size_t min_n, std::size_t max_n, std::size_t max_colors,
                                        std::uint64_t seed) {
  std::vector<ColoredGraph> out;
  Rng rng(seed);
  while (out.size() < count) {
    GenSpec spec;
    spec.vertices = min_n + rng.below(max_n - min_n + 1);
    spec.colors = 1 + rng.below(std::min(spec.vertices, max_colors));
    spec.edge_probability = 0.2 + 0.7 * rng.uniform01();
    spec.seed = rng.next();
    out.push_back(random_colored_graph(spec));
  }
  return out;
}

template <typename T>
const T& cert(const RecognitionReport& r) {
  return std::get<T>(r.certificate);
}

}  // namespace

TEST(IsBicluster, Examples) {
  EXPECT_TRUE(is_bicluster(test::c4()).verdict);

  const auto p4 = is_bicluster(test::p4());
  EXPECT_FALSE(p4.verdict);
  EXPECT_EQ(cert<Violation>(p4).kind, ViolationKind::induced_p4);
  EXPECT_EQ(cert<Violation>(p4).vertices, (std::vector<Vertex>{0, 1, 2, 3}));

  // K1 + K2 + K2,3
  const auto mixed = make("AABAABBB", {{1, 2}, {3, 5}, {3, 6}, {3, 7}, {4, 5}, {4, 6}, {4, 7}});
  const auto r = is_bicluster(mixed);
  EXPECT_TRUE(r.verdict);
  EXPECT_EQ(cert<BicliqueCover>(r).components.size(), 3U);

  const auto triangle = is_bicluster(make("ABC", {{0, 1}, {1, 2}, {0, 2}}));
  EXPECT_FALSE(triangle.verdict);
  EXPECT_EQ(cert<Violation>(triangle).kind, ViolationKind::non_bipartite_component);
}

TEST(Is2Rbmg, Examples) {
  EXPECT_TRUE(is_2rbmg(make("AB", {{0, 1}})).verdict);
  const auto edgeless = is_2rbmg(make("ABAB"));
  EXPECT_FALSE(edgeless.verdict);
  EXPECT_EQ(cert<Violation>(edgeless).kind, ViolationKind::no_edges);
  EXPECT_FALSE(is_2rbmg(test::p4()).verdict);
  EXPECT_EQ(cert<Violation>(is_2rbmg(make("ABC", {{0, 1}}))).kind, ViolationKind::wrong_color_count);
  EXPECT_EQ(cert<Violation>(is_2rbmg(make("AAB", {{0, 1}}))).kind, ViolationKind::improper_edge);
}

TEST(IsCograph, Examples) {
  EXPECT_FALSE(is_cograph(test::p4()).verdict);
  EXPECT_EQ(cert<Violation>(is_cograph(test::p4())).kind, ViolationKind::induced_p4);
  EXPECT_TRUE(is_cograph(test::c4()).verdict);
  EXPECT_TRUE(is_cograph(two_cluster_graph()).verdict);
}

TEST(IsHcCograph, Examples) {
  const auto distinct = is_hc_cograph(make("AB"));
  EXPECT_FALSE(distinct.verdict);
  EXPECT_EQ(cert<Violation>(distinct).kind, ViolationKind::union_colors_not_nested);
  EXPECT_TRUE(is_hc_cograph(make("AA")).verdict);
  EXPECT_TRUE(is_hc_cograph(test::c4()).verdict);
  EXPECT_TRUE(is_hc_cograph(two_cluster_graph()).verdict);

  const auto join = is_hc_cograph(make("AAB", {{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_FALSE(join.verdict);
  EXPECT_EQ(cert<Violation>(join).kind, ViolationKind::join_colors_overlap);
}

TEST(IsHcCograph, CotreeIsConsistent) {
  const auto r = is_hc_cograph(two_cluster_graph());
  const auto& cotree = cert<Cotree>(r);
  ASSERT_FALSE(cotree.nodes.empty());
  EXPECT_EQ(cotree.nodes[0].kind, Cotree::Kind::disjoint_union);
  EXPECT_EQ(cotree.nodes[0].vertices.size(), 5U);
  EXPECT_EQ(cotree.nodes[0].children.size(), 2U);
}

TEST(IsRbmgBruteforce, Examples) {
  const auto edge = is_rbmg_bruteforce(make("AB", {{0, 1}}));
  EXPECT_TRUE(edge.verdict);
  EXPECT_TRUE(same_colored_structure(best_match_graph_symmetric(cert<PhylogeneticTree>(edge)), make("AB", {{0, 1}})));
  EXPECT_FALSE(is_rbmg_bruteforce(make("AB")).verdict);
  const auto p4 = is_rbmg_bruteforce(test::p4());
  EXPECT_FALSE(p4.verdict);
  EXPECT_EQ(cert<Violation>(p4).kind, ViolationKind::no_explaining_tree);
  EXPECT_TRUE(is_rbmg_bruteforce(two_cluster_graph()).verdict);
}

TEST(IsRbmgBruteforce, CapAndColoringErrors) {
  const auto big = make("ABABABABAB");
  EXPECT_THROW(is_rbmg_bruteforce(big), InstanceTooLargeError);
  EXPECT_THROW(is_rbmg_bruteforce(big, 4), InstanceTooLargeError);
  const auto improper = is_rbmg_bruteforce(make("AAB", {{0, 1}}));
  EXPECT_FALSE(improper.verdict);
  EXPECT_EQ(cert<Violation>(improper).kind, ViolationKind::improper_edge);
}

TEST(IsNrbmgStructural, Examples) {
  const auto clusters = is_nrbmg_structural(two_cluster_graph());
  EXPECT_TRUE(clusters.verdict);
  EXPECT_EQ(cert<ComponentTrees>(clusters).components.size(), 2U);

  // Only the all-color component is a P4 (not an RBMG).
  const auto bad = make("ABABAB", {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  EXPECT_FALSE(is_nrbmg_structural(bad).verdict);

  // Components {A,B} and {A,B,C}: K2 and a rainbow triangle.
  const auto two = make("ABABC", {{0, 1}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_TRUE(is_nrbmg_structural(two).verdict);
  EXPECT_TRUE(oracle::is_rbmg(two));

  const auto missing = make("ABC", {{0, 1}});
  EXPECT_EQ(cert<Violation>(is_nrbmg_structural(missing)).kind, ViolationKind::no_full_color_component);
}

TEST(Recognizers, RejectEmptyGraph) {
  const ColoredGraph empty;
  EXPECT_THROW(is_bicluster(empty), GraphError);
  EXPECT_THROW(is_hc_cograph(empty), GraphError);
}

TEST(Recognizers, NonHereditaryExample) {
  // {a1, b2} of the two-cluster graph.
  const std::vector<Vertex> w{0, 4};
  const auto sub = induced_subgraph(two_cluster_graph(), w);
  EXPECT_FALSE(is_hc_cograph(sub).verdict);
  EXPECT_FALSE(is_rbmg_bruteforce(sub).verdict);
  EXPECT_TRUE(is_hc_cograph(two_cluster_graph()).verdict);
}

TEST(Recognizers, AgreeWithOraclesExhaustively) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k) {
      oracle::for_each_colored_graph(n, k, [&](const ColoredGraph& g) {
        EXPECT_EQ(is_bicluster(g).verdict, oracle::is_bicluster(g)) << format_graph(g);
        EXPECT_EQ(is_cograph(g).verdict, !oracle::has_induced_p4(g)) << format_graph(g);
        EXPECT_EQ(is_hc_cograph(g).verdict, oracle::is_hc_cograph(g)) << format_graph(g);
        if (n <= 4) EXPECT_EQ(is_rbmg_bruteforce(g).verdict, oracle::is_rbmg(g)) << format_graph(g);
      });
    }
  }
}

TEST(Recognizers, RbmgOracleOnSixVertices) {
  for (const auto& g : random_graphs(40, 6, 6, 3, 21)) {
    EXPECT_EQ(is_rbmg_bruteforce(g).verdict, oracle::is_rbmg(g)) << format_graph(g);
  }
}

TEST(Recognizers, CertificatesVerify) {
  const std::vector<GraphClass> classes{GraphClass::bicluster, GraphClass::two_rbmg,    GraphClass::cograph,
                                        GraphClass::hc_cograph, GraphClass::rbmg_oracle, GraphClass::nrbmg};
  for (const auto& g : random_graphs(150, 1, 7, 3, 22)) {
    for (auto cls : classes) {
      const auto report = recognize(g, cls);
      EXPECT_TRUE(verify_certificate(g, report)) << to_string(cls) << '\n' << format_graph(g);
    }
  }
}

TEST(Recognizers, ForgedCertificatesFail) {
  const auto p4 = test::p4();
  RecognitionReport forged{GraphClass::bicluster, true, BicliqueCover{{{{0, 2}, {1, 3}}}}};
  EXPECT_FALSE(verify_certificate(p4, forged));
  RecognitionReport wrong_p4{GraphClass::cograph, false, Violation{ViolationKind::induced_p4, {0, 1, 3, 2}, ""}};
  EXPECT_FALSE(verify_certificate(p4, wrong_p4));
  RecognitionReport bad_tree{GraphClass::rbmg_oracle, true, star_tree(LeafLabels::of({0, 1, 0, 1}))};
  EXPECT_FALSE(verify_certificate(p4, bad_tree));
}

TEST(Recognizers, NrbmgStructuralMatchesBruteforce) {
  for (const auto& g : random_graphs(300, 2, 7, 3, 23)) {
    EXPECT_EQ(is_nrbmg_structural(g).verdict, is_rbmg_bruteforce(g).verdict) << format_graph(g);
  }
}

TEST(Recognizers, GeneratedGraphsAreRbmgs) {
  Rng rng(24);
  for (int i = 0; i < 150; ++i) {
    GenSpec spec;
    spec.vertices = 1 + rng.below(7);
    spec.colors = 1 + rng.below(std::min<std::size_t>(spec.vertices, 3));
    spec.seed = rng.next();
    const auto g = best_match_graph_symmetric(random_tree(spec));
    EXPECT_TRUE(is_rbmg_bruteforce(g).verdict) << format_graph(g);
    EXPECT_TRUE(is_nrbmg_structural(g).verdict) << format_graph(g);
  }
}

TEST(Recognizers, HubLiftingPreservesMembership) {
  for (const auto& h : random_graphs(200, 1, 6, 3, 25)) {
    const auto plus = add_hub_vertex(h, h.color_count());
    EXPECT_EQ(is_rbmg_bruteforce(h).verdict, is_rbmg_bruteforce(plus).verdict) << format_graph(h);
    EXPECT_EQ(is_hc_cograph(h).verdict, is_hc_cograph(plus).verdict) << format_graph(h);
  }
}

TEST(Certificates, TextForm) {
  EXPECT_EQ(format_certificate(test::p4(), is_cograph(test::p4()).certificate), "violation induced-p4 {v0,v1,v2,v3}\n");
  const auto text = format_certificate(test::c4(), is_hc_cograph(test::c4()).certificate);
  EXPECT_EQ(text,
            "cotree\n"
            "  join {v0,v1,v2,v3}\n"
            "    union {v0,v2}\n"
            "      leaf v0\n"
            "      leaf v2\n"
            "    union {v1,v3}\n"
            "      leaf v1\n"
            "      leaf v3\n");
}

TEST(Recognizers, ImproperColoringCertificatesVerify) {
  const auto g = make("AABC", {{0, 1}, {1, 2}, {2, 3}});
  for (auto cls : {GraphClass::bicluster, GraphClass::two_rbmg, GraphClass::cograph, GraphClass::hc_cograph,
                   GraphClass::rbmg_oracle, GraphClass::nrbmg}) {
    const auto report = recognize(g, cls);
    EXPECT_TRUE(verify_certificate(g, report)) << to_string(cls);
    if (cls != GraphClass::bicluster && cls != GraphClass::cograph) EXPECT_FALSE(report.verdict) << to_string(cls);
  }
}
