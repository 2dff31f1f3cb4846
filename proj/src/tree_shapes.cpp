#include "rbmg/tree_shapes.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "rbmg/errors.hpp"

namespace rbmg {

namespace {

struct ShapeBuilder {
  TreeShape shape;
  std::vector<std::uint32_t> child_count;
  std::size_t target = 0;
  std::size_t visited = 0;
  const std::function<bool(const TreeShape&)>* visit = nullptr;

  // Returns false once the visitor asked to stop.
  bool grow() {
    if (shape.leaf_node.size() == target) {
      ++visited;
      return (*visit)(shape);
    }
    const auto n = static_cast<NodeId>(shape.parent.size());
    for (NodeId u = 0; u < n; ++u) {
      if (child_count[u] > 0) {
        shape.parent.push_back(u);
        shape.leaf_node.push_back(n);
        child_count.push_back(0);
        ++child_count[u];
        const bool go_on = grow();
        --child_count[u];
        child_count.pop_back();
        shape.leaf_node.pop_back();
        shape.parent.pop_back();
        if (!go_on) return false;
      }
      // Subdivide the edge above u (or put a new root above it).
      const NodeId above = shape.parent[u];
      shape.parent.push_back(above);
      shape.parent[u] = n;
      shape.parent.push_back(n);
      shape.leaf_node.push_back(n + 1);
      child_count.push_back(2);
      child_count.push_back(0);
      const bool go_on = grow();
      child_count.pop_back();
      child_count.pop_back();
      shape.leaf_node.pop_back();
      shape.parent.pop_back();
      shape.parent.pop_back();
      shape.parent[u] = above;
      if (!go_on) return false;
    }
    return true;
  }
};

std::vector<std::size_t> node_depths(const TreeShape& shape) {
  std::vector<std::size_t> depth(shape.parent.size(), 0);
  for (NodeId v = 0; v < depth.size(); ++v) {
    for (NodeId u = shape.parent[v]; u != kNoNode; u = shape.parent[u]) ++depth[v];
  }
  return depth;
}

}  // namespace

std::size_t for_each_tree_shape(std::size_t leaves, const std::function<bool(const TreeShape&)>& visit) {
  if (leaves == 0) return 0;
  ShapeBuilder b;
  b.shape.parent = {kNoNode};
  b.shape.leaf_node = {0};
  b.child_count = {0};
  b.target = leaves;
  b.visit = &visit;
  b.grow();
  return b.visited;
}

PhylogeneticTree tree_from_shape(const TreeShape& shape, const LeafLabels& labels) {
  if (labels.size() != shape.leaf_count()) throw GraphError("leaf label count does not match tree shape");
  std::vector<PhylogeneticTree::Node> nodes(shape.parent.size());
  NodeId root = kNoNode;
  for (NodeId v = 0; v < nodes.size(); ++v) {
    nodes[v].parent = shape.parent[v];
    if (shape.parent[v] == kNoNode) {
      root = v;
    } else {
      nodes[shape.parent[v]].children.push_back(v);
    }
  }
  for (Vertex leaf = 0; leaf < shape.leaf_node.size(); ++leaf) nodes[shape.leaf_node[leaf]].leaf = leaf;
  return PhylogeneticTree(std::move(nodes), root, labels);
}

std::vector<std::uint8_t> lca_depth_matrix(const TreeShape& shape) {
  const std::size_t m = shape.leaf_count();
  const auto depth = node_depths(shape);
  std::vector<std::uint8_t> out(m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = x; y < m; ++y) {
      NodeId a = shape.leaf_node[x];
      NodeId b = shape.leaf_node[y];
      while (depth[a] > depth[b]) a = shape.parent[a];
      while (depth[b] > depth[a]) b = shape.parent[b];
      while (a != b) {
        a = shape.parent[a];
        b = shape.parent[b];
      }
      out[x * m + y] = out[y * m + x] = static_cast<std::uint8_t>(depth[a]);
    }
  }
  return out;
}

ShapeTable::ShapeTable(std::size_t leaves) : leaves_(leaves) {
  for_each_tree_shape(leaves, [this](const TreeShape& s) {
    shapes_.push_back(s);
    const auto d = lca_depth_matrix(s);
    depths_.insert(depths_.end(), d.begin(), d.end());
    return true;
  });
}

const ShapeTable& shape_table(std::size_t leaves) {
  if (leaves == 0 || leaves > kMaxCachedShapeLeaves) {
    throw InstanceTooLargeError("no cached shape table for " + std::to_string(leaves) + " leaves");
  }
  static std::array<std::once_flag, kMaxCachedShapeLeaves + 1> once;
  static std::array<std::unique_ptr<ShapeTable>, kMaxCachedShapeLeaves + 1> tables;
  std::call_once(once[leaves], [leaves] { tables[leaves] = std::make_unique<ShapeTable>(leaves); });
  return *tables[leaves];
}

}  // namespace rbmg
