#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rbmg/graph.hpp"

namespace rbmg {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

// Default bound on the number of leaves for exhaustive tree enumeration.
inline constexpr std::size_t kDefaultEnumerationCap = 9;

// Inner-node event label t: 0 marks a duplication, 1 a speciation.
enum class Event : std::uint8_t { duplication = 0, speciation = 1 };

// Names and colors of the leaves, indexed by leaf id.
struct LeafLabels {
  std::vector<std::string> names;        // empty: v0, v1, ...
  std::vector<ColorId> colors;
  std::vector<std::string> color_names;  // empty: c0, c1, ...

  std::size_t size() const noexcept { return colors.size(); }

  static LeafLabels uniform(std::size_t count);
  static LeafLabels of(std::vector<ColorId> colors);
  static LeafLabels from_graph(const ColoredGraph& g);
};

// Rooted phylogenetic tree: every inner vertex other than the root has at
// least two children, and the root has at least two children unless the tree
// is a single leaf. Leaves carry ids 0..m-1 (which become graph vertex ids),
// names and colors; inner nodes optionally all carry an Event.
class PhylogeneticTree {
 public:
  struct Node {
    NodeId parent = kNoNode;
    std::vector<NodeId> children;
    std::optional<Vertex> leaf;
    std::optional<Event> event;
  };

  PhylogeneticTree(std::vector<Node> nodes, NodeId root, LeafLabels labels);

  std::size_t node_count() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return root_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  bool is_leaf(NodeId id) const { return nodes_.at(id).leaf.has_value(); }
  std::size_t depth(NodeId id) const { return depth_.at(id); }

  std::size_t leaf_count() const noexcept { return leaf_nodes_.size(); }
  NodeId leaf_node(Vertex leaf) const { return leaf_nodes_.at(leaf); }
  std::string leaf_name(Vertex leaf) const;
  ColorId leaf_color(Vertex leaf) const { return labels_.colors.at(leaf); }
  std::size_t color_count() const noexcept { return color_count_; }
  std::string color_name(ColorId c) const;
  const LeafLabels& labels() const noexcept { return labels_; }

  bool has_event_labels() const noexcept { return has_events_; }

  // Deepest common ancestor of two nodes.
  NodeId lca_of_nodes(NodeId a, NodeId b) const;

 private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
  std::vector<NodeId> leaf_nodes_;
  std::vector<std::size_t> depth_;
  LeafLabels labels_;
  std::size_t color_count_ = 0;
  bool has_events_ = false;
};

// lca_T(x, y) for leaf ids; lca(x, x) is the leaf node itself.
NodeId lca(const PhylogeneticTree& t, Vertex x, Vertex y);

// T|L': minimal subtree spanning `leaves`, rooted at their lca, with
// degree-two vertices suppressed. Leaf ids are re-indexed in increasing
// order of the original ids; event labels of surviving nodes are kept.
PhylogeneticTree restrict(const PhylogeneticTree& t, std::span<const Vertex> leaves);

// G(T, sigma): edge xy iff x and y are reciprocal best matches.
ColoredGraph best_match_graph_symmetric(const PhylogeneticTree& t);

// Edge xy iff t(lca(x, y)) = speciation. Requires event labels.
ColoredGraph orthology_graph(const PhylogeneticTree& t);

// Root adjacent to every leaf; a single leaf yields the one-vertex tree.
PhylogeneticTree star_tree(LeafLabels labels);

// Visits every rooted phylogenetic tree on the given labelled leaf set
// exactly once in a fixed order, stopping early when `visit` returns false.
// Returns the number of trees visited. Throws InstanceTooLargeError above `cap`.
std::size_t enumerate_trees(const LeafLabels& labels,
                            const std::function<bool(const PhylogeneticTree&)>& visit,
                            std::size_t cap = kDefaultEnumerationCap);

// Newick-style single line: leaves `name=color`, optional inner label 0/1
// right after ')', terminated by ';'. Example: ((a=A,b=B)1,c=B)0;
PhylogeneticTree parse_newick(std::string_view text);
std::string format_newick(const PhylogeneticTree& t);

// One tree per non-blank line; lines starting with '#' are comments.
std::vector<PhylogeneticTree> parse_tree_file(std::istream& in);

}  // namespace rbmg
