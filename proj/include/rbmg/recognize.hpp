#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rbmg/graph.hpp"
#include "rbmg/tree.hpp"

namespace rbmg {

enum class GraphClass { bicluster, two_rbmg, cograph, hc_cograph, rbmg_oracle, nrbmg };

std::string_view to_string(GraphClass cls);
std::optional<GraphClass> parse_graph_class(std::string_view name);

// Decomposition of a cograph into single vertices, disjoint unions and joins.
// nodes[0] is the root; each node lists its vertex set (sorted).
struct Cotree {
  enum class Kind { leaf, disjoint_union, join };
  struct Node {
    Kind kind = Kind::leaf;
    std::vector<Vertex> vertices;
    std::vector<std::size_t> children;
  };
  std::vector<Node> nodes;
};

// One entry per connected component with its bipartition; side_b is empty
// for an isolated vertex.
struct BicliqueCover {
  struct Biclique {
    std::vector<Vertex> side_a;
    std::vector<Vertex> side_b;
  };
  std::vector<Biclique> components;
};

// An explaining tree for every connected component (leaf ids follow the
// sorted component vertex list).
struct ComponentTrees {
  std::vector<std::vector<Vertex>> components;
  std::vector<PhylogeneticTree> trees;
};

enum class ViolationKind {
  induced_p4,                // vertices: path a-b-c-d
  non_bipartite_component,   // vertices: the component
  improper_edge,             // vertices: the two endpoints
  wrong_color_count,
  no_edges,
  join_colors_overlap,       // vertices: the join node; two factors share a color
  union_colors_not_nested,   // vertices: the union node; no part holds every color
  no_explaining_tree,        // vertices: the instance searched exhaustively
  component_not_rbmg,        // vertices: the component
  no_full_color_component,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::no_edges;
  std::vector<Vertex> vertices;
  std::string detail;
};

using Certificate = std::variant<Cotree, BicliqueCover, PhylogeneticTree, ComponentTrees, Violation>;

struct RecognitionReport {
  GraphClass graph_class = GraphClass::bicluster;
  bool verdict = false;
  Certificate certificate;
};

// Every connected component is complete bipartite.
RecognitionReport is_bicluster(const ColoredGraph& g);

// Properly 2-colored bicluster graph with at least one edge.
RecognitionReport is_2rbmg(const ColoredGraph& g);

// P4-free, by recursive union/join decomposition.
RecognitionReport is_cograph(const ColoredGraph& g);

// Decomposition as for cographs with color conditions at every step: the
// factors of a join have pairwise disjoint color sets, and among the parts of
// a disjoint union one part's color set contains all others.
RecognitionReport is_hc_cograph(const ColoredGraph& g);

// Exhaustive search for a tree (T, sigma) with G(T, sigma) = G.
RecognitionReport is_rbmg_bruteforce(const ColoredGraph& g, std::size_t cap = kDefaultEnumerationCap);

// Properly colored, every component an RBMG (exhaustive search per
// component), and some component carries all colors. Components are first
// screened with the necessary condition that each pair of their colors
// induces a properly 2-colored bicluster graph with an edge.
RecognitionReport is_nrbmg_structural(const ColoredGraph& g, std::size_t cap = kDefaultEnumerationCap);

RecognitionReport recognize(const ColoredGraph& g, GraphClass cls, std::size_t cap = kDefaultEnumerationCap);

// Re-checks a certificate independently of how it was produced: positive
// certificates must rebuild or decompose `g` as claimed, negative ones must
// exhibit a real violation.
bool verify_certificate(const ColoredGraph& g, const RecognitionReport& report,
                        std::size_t cap = kDefaultEnumerationCap);

// Multi-line text rendering using vertex names; see README for the layout.
std::string format_certificate(const ColoredGraph& g, const Certificate& certificate);

}  // namespace rbmg
