#include "rbmg/tree.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <unordered_set>

#include "rbmg/errors.hpp"
#include "rbmg/tree_shapes.hpp"

namespace rbmg {

LeafLabels LeafLabels::uniform(std::size_t count) { return of(std::vector<ColorId>(count, 0)); }

LeafLabels LeafLabels::of(std::vector<ColorId> colors) {
  LeafLabels out;
  out.colors = std::move(colors);
  return out;
}

LeafLabels LeafLabels::from_graph(const ColoredGraph& g) {
  LeafLabels out;
  out.colors.assign(g.colors().begin(), g.colors().end());
  if (g.has_vertex_names()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.names.push_back(g.vertex_name(v));
  }
  if (g.has_color_names()) {
    for (ColorId c = 0; c < g.color_count(); ++c) out.color_names.push_back(g.color_name(c));
  }
  return out;
}

PhylogeneticTree::PhylogeneticTree(std::vector<Node> nodes, NodeId root, LeafLabels labels)
    : nodes_(std::move(nodes)), root_(root) {
  const std::size_t n = nodes_.size();
  if (root_ >= n) throw GraphError("tree root out of range");
  if (nodes_[root_].parent != kNoNode) throw GraphError("tree root has a parent");

  // Reachability and parent/child consistency, depth by BFS from the root.
  depth_.assign(n, std::size_t(-1));
  depth_[root_] = 0;
  std::vector<NodeId> order{root_};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const NodeId v = order[i];
    for (NodeId c : nodes_[v].children) {
      if (c >= n || nodes_[c].parent != v) throw GraphError("inconsistent parent/child links in tree");
      if (depth_[c] != std::size_t(-1)) throw GraphError("tree contains a cycle or shared child");
      depth_[c] = depth_[v] + 1;
      order.push_back(c);
    }
  }
  if (order.size() != n) throw GraphError("tree has unreachable nodes");

  std::size_t inner = 0;
  std::size_t labelled_inner = 0;
  std::size_t leaves = 0;
  for (NodeId v = 0; v < n; ++v) {
    const Node& node = nodes_[v];
    if (node.children.empty()) {
      if (!node.leaf) throw GraphError("childless node without leaf id");
      if (node.event) throw GraphError("leaves cannot carry event labels");
      ++leaves;
    } else {
      if (node.leaf) throw GraphError("inner node carries a leaf id");
      if (node.children.size() < 2) throw GraphError("inner node with fewer than two children");
      ++inner;
      if (node.event) ++labelled_inner;
    }
  }
  if (labelled_inner != 0 && labelled_inner != inner) {
    throw GraphError("event labels must be given on all inner nodes or none");
  }
  has_events_ = inner > 0 && labelled_inner == inner;

  if (labels.size() != leaves) throw GraphError("leaf label count does not match tree");
  leaf_nodes_.assign(leaves, kNoNode);
  for (NodeId v = 0; v < n; ++v) {
    if (!nodes_[v].leaf) continue;
    const Vertex id = *nodes_[v].leaf;
    if (id >= leaves || leaf_nodes_[id] != kNoNode) throw GraphError("leaf ids must be a permutation of 0..m-1");
    leaf_nodes_[id] = v;
  }
  if (!labels.names.empty() && labels.names.size() != leaves) throw GraphError("leaf name table size mismatch");

  // Same normalization as ColoredGraph: validates surjectivity and orders
  // colors by first appearance.
  const ColoredGraph palette(labels.colors, {}, labels.names, labels.color_names);
  labels.colors.assign(palette.colors().begin(), palette.colors().end());
  if (!labels.color_names.empty()) {
    for (ColorId c = 0; c < palette.color_count(); ++c) labels.color_names[c] = palette.color_name(c);
  }
  color_count_ = palette.color_count();
  labels_ = std::move(labels);
}

std::string PhylogeneticTree::leaf_name(Vertex leaf) const {
  if (leaf >= leaf_count()) throw GraphError("unknown leaf " + std::to_string(leaf));
  return labels_.names.empty() ? "v" + std::to_string(leaf) : labels_.names[leaf];
}

std::string PhylogeneticTree::color_name(ColorId c) const {
  if (c >= color_count_) throw GraphError("unknown color " + std::to_string(c));
  return labels_.color_names.empty() ? "c" + std::to_string(c) : labels_.color_names[c];
}

NodeId PhylogeneticTree::lca_of_nodes(NodeId a, NodeId b) const {
  while (depth_.at(a) > depth_.at(b)) a = nodes_[a].parent;
  while (depth_[b] > depth_[a]) b = nodes_[b].parent;
  while (a != b) {
    a = nodes_[a].parent;
    b = nodes_[b].parent;
  }
  return a;
}

NodeId lca(const PhylogeneticTree& t, Vertex x, Vertex y) {
  if (x >= t.leaf_count()) throw GraphError("unknown leaf " + std::to_string(x));
  if (y >= t.leaf_count()) throw GraphError("unknown leaf " + std::to_string(y));
  return t.lca_of_nodes(t.leaf_node(x), t.leaf_node(y));
}

PhylogeneticTree restrict(const PhylogeneticTree& t, std::span<const Vertex> leaves) {
  std::vector<Vertex> keep(leaves.begin(), leaves.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (keep.empty()) throw GraphError("cannot restrict a tree to an empty leaf set");
  for (Vertex x : keep) {
    if (x >= t.leaf_count()) throw GraphError("unknown leaf " + std::to_string(x));
  }

  // Count kept leaves below each node.
  std::vector<std::size_t> below(t.node_count(), 0);
  NodeId top = t.leaf_node(keep.front());
  for (Vertex x : keep) {
    for (NodeId u = t.leaf_node(x); u != kNoNode; u = t.node(u).parent) ++below[u];
    top = t.lca_of_nodes(top, t.leaf_node(x));
  }

  std::vector<PhylogeneticTree::Node> nodes;
  std::vector<Vertex> new_leaf_id(t.leaf_count(), Vertex(-1));
  for (Vertex i = 0; i < keep.size(); ++i) new_leaf_id[keep[i]] = i;

  // Copies the subtree at `v`, skipping nodes with a single kept child.
  auto copy = [&](auto&& self, NodeId v, NodeId new_parent) -> NodeId {
    for (;;) {
      const auto& node = t.node(v);
      if (node.leaf) break;
      std::size_t live = 0;
      NodeId only = kNoNode;
      for (NodeId c : node.children) {
        if (below[c] > 0) {
          ++live;
          only = c;
        }
      }
      if (live != 1) break;
      v = only;
    }
    const auto id = static_cast<NodeId>(nodes.size());
    nodes.push_back({});
    nodes[id].parent = new_parent;
    const auto& node = t.node(v);
    if (node.leaf) {
      nodes[id].leaf = new_leaf_id[*node.leaf];
      return id;
    }
    nodes[id].event = node.event;
    for (NodeId c : node.children) {
      if (below[c] == 0) continue;
      const NodeId child = self(self, c, id);
      nodes[id].children.push_back(child);
    }
    return id;
  };
  const NodeId root = copy(copy, top, kNoNode);

  LeafLabels labels;
  for (Vertex x : keep) {
    labels.colors.push_back(t.leaf_color(x));
    if (!t.labels().names.empty()) labels.names.push_back(t.leaf_name(x));
  }
  // Re-index colors densely; the constructor then orders them by first use.
  std::vector<ColorId> map(t.color_count(), ColorId(-1));
  for (ColorId& c : labels.colors) {
    if (map[c] == ColorId(-1)) {
      map[c] = static_cast<ColorId>(labels.color_names.size());
      labels.color_names.push_back(t.color_name(c));
    }
    c = map[c];
  }
  if (t.labels().color_names.empty()) labels.color_names.clear();
  return PhylogeneticTree(std::move(nodes), root, std::move(labels));
}

ColoredGraph best_match_graph_symmetric(const PhylogeneticTree& t) {
  const std::size_t m = t.leaf_count();
  std::vector<std::size_t> lca_depth(m * m);
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = x; y < m; ++y) lca_depth[x * m + y] = lca_depth[y * m + x] = t.depth(lca(t, x, y));
  }
  // best[x * colors + s]: deepest lca depth x reaches within color s.
  const std::size_t colors = t.color_count();
  std::vector<std::size_t> best(m * colors, 0);
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = 0; y < m; ++y) {
      auto& b = best[x * colors + t.leaf_color(y)];
      b = std::max(b, lca_depth[x * m + y]);
    }
  }
  auto is_best_match = [&](Vertex x, Vertex y) {
    return t.leaf_color(x) != t.leaf_color(y) && lca_depth[x * m + y] == best[x * colors + t.leaf_color(y)];
  };
  std::vector<VertexPair> edges;
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = x + 1; y < m; ++y) {
      if (is_best_match(x, y) && is_best_match(y, x)) edges.push_back({x, y});
    }
  }
  const auto& l = t.labels();
  return ColoredGraph(l.colors, std::move(edges), l.names, l.color_names);
}

ColoredGraph orthology_graph(const PhylogeneticTree& t) {
  if (!t.has_event_labels() && t.leaf_count() > 1) {
    throw GraphError("orthology graph needs event labels on every inner node");
  }
  std::vector<VertexPair> edges;
  for (Vertex x = 0; x < t.leaf_count(); ++x) {
    for (Vertex y = x + 1; y < t.leaf_count(); ++y) {
      if (t.node(lca(t, x, y)).event == Event::speciation) edges.push_back({x, y});
    }
  }
  const auto& l = t.labels();
  return ColoredGraph(l.colors, std::move(edges), l.names, l.color_names);
}

PhylogeneticTree star_tree(LeafLabels labels) {
  const std::size_t m = labels.size();
  if (m == 0) throw GraphError("star tree needs at least one leaf");
  std::vector<PhylogeneticTree::Node> nodes;
  if (m == 1) {
    nodes.push_back({});
    nodes[0].leaf = 0;
    return PhylogeneticTree(std::move(nodes), 0, std::move(labels));
  }
  nodes.resize(m + 1);
  for (Vertex i = 0; i < m; ++i) {
    nodes[i].parent = static_cast<NodeId>(m);
    nodes[i].leaf = i;
    nodes[m].children.push_back(i);
  }
  return PhylogeneticTree(std::move(nodes), static_cast<NodeId>(m), std::move(labels));
}

std::size_t enumerate_trees(const LeafLabels& labels, const std::function<bool(const PhylogeneticTree&)>& visit,
                            std::size_t cap) {
  if (labels.size() == 0) throw GraphError("cannot enumerate trees on an empty leaf set");
  if (labels.size() > cap) {
    throw InstanceTooLargeError("tree enumeration on " + std::to_string(labels.size()) +
                                " leaves exceeds the cap of " + std::to_string(cap));
  }
  return for_each_tree_shape(labels.size(), [&](const TreeShape& s) { return visit(tree_from_shape(s, labels)); });
}

namespace {

class NewickReader {
 public:
  explicit NewickReader(std::string_view text) : text_(text) {}

  PhylogeneticTree read() {
    skip_space();
    const NodeId root = subtree(kNoNode);
    skip_space();
    expect(';');
    skip_space();
    if (pos_ != text_.size()) fail("trailing characters after ';'");

    LeafLabels labels;
    std::vector<std::string> color_names;
    for (std::size_t i = 0; i < leaf_names_.size(); ++i) {
      auto it = std::find(color_names.begin(), color_names.end(), leaf_colors_[i]);
      if (it == color_names.end()) {
        color_names.push_back(leaf_colors_[i]);
        it = color_names.end() - 1;
      }
      labels.colors.push_back(static_cast<ColorId>(it - color_names.begin()));
    }
    labels.names = std::move(leaf_names_);
    labels.color_names = std::move(color_names);
    try {
      return PhylogeneticTree(std::move(nodes_), root, std::move(labels));
    } catch (const GraphError& e) {
      throw ParseError(1, e.what());
    }
  }

 private:
  static bool is_name_char(char c) {
    return c != '(' && c != ')' && c != ',' && c != ';' && c != '=' && c != '#' && c != ' ' && c != '\t' &&
           c != '\n' && c != '\r';
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, "newick column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  NodeId subtree(NodeId parent) {
    skip_space();
    const auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({});
    nodes_[id].parent = parent;
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      for (;;) {
        const NodeId child = subtree(id);
        nodes_[id].children.push_back(child);
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        expect(')');
        break;
      }
      skip_space();
      if (pos_ < text_.size() && is_name_char(text_[pos_])) {
        const std::string label = name();
        if (label == "0") {
          nodes_[id].event = Event::duplication;
        } else if (label == "1") {
          nodes_[id].event = Event::speciation;
        } else {
          fail("inner label must be 0 or 1, got '" + label + "'");
        }
      }
      return id;
    }
    std::string leaf = name();
    skip_space();
    expect('=');
    skip_space();
    std::string color = name();
    if (std::find(leaf_names_.begin(), leaf_names_.end(), leaf) != leaf_names_.end()) {
      fail("duplicate leaf '" + leaf + "'");
    }
    nodes_[id].leaf = static_cast<Vertex>(leaf_names_.size());
    leaf_names_.push_back(std::move(leaf));
    leaf_colors_.push_back(std::move(color));
    return id;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<PhylogeneticTree::Node> nodes_;
  std::vector<std::string> leaf_names_;
  std::vector<std::string> leaf_colors_;
};

void write_newick(std::ostream& out, const PhylogeneticTree& t, NodeId v) {
  const auto& node = t.node(v);
  if (node.leaf) {
    out << t.leaf_name(*node.leaf) << '=' << t.color_name(t.leaf_color(*node.leaf));
    return;
  }
  out << '(';
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) out << ',';
    write_newick(out, t, node.children[i]);
  }
  out << ')';
  if (node.event) out << (*node.event == Event::speciation ? '1' : '0');
}

}  // namespace

PhylogeneticTree parse_newick(std::string_view text) { return NewickReader(text).read(); }

std::string format_newick(const PhylogeneticTree& t) {
  std::ostringstream out;
  write_newick(out, t, t.root());
  out << ';';
  return out.str();
}

std::vector<PhylogeneticTree> parse_tree_file(std::istream& in) {
  std::vector<PhylogeneticTree> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    try {
      out.push_back(parse_newick(line));
    } catch (const ParseError& e) {
      std::string msg = e.what();
      if (msg.rfind("line 1: ", 0) == 0) msg = msg.substr(8);
      throw ParseError(line_no, msg);
    }
  }
  return out;
}

}  // namespace rbmg
