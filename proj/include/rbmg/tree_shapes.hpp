#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rbmg/tree.hpp"

namespace rbmg {

// Tree topology on leaf ids 0..m-1 given as a parent array (kNoNode at the root).
struct TreeShape {
  std::vector<NodeId> parent;
  std::vector<NodeId> leaf_node;

  std::size_t leaf_count() const noexcept { return leaf_node.size(); }
};

// Generates every rooted phylogenetic tree shape on `leaves` labelled leaves by
// inserting leaf i into each tree on leaves 0..i-1: below any inner node, or
// on any edge, or above the root. Removing the last leaf inverts the step, so
// every tree appears exactly once. Returns the number of shapes visited.
std::size_t for_each_tree_shape(std::size_t leaves, const std::function<bool(const TreeShape&)>& visit);

PhylogeneticTree tree_from_shape(const TreeShape& shape, const LeafLabels& labels);

// Depth of lca(x, y) for every ordered leaf pair, row-major.
std::vector<std::uint8_t> lca_depth_matrix(const TreeShape& shape);

// All shapes on a fixed number of leaves with their lca depth matrices,
// built once per leaf count and shared read-only afterwards.
class ShapeTable {
 public:
  explicit ShapeTable(std::size_t leaves);

  std::size_t leaves() const noexcept { return leaves_; }
  std::size_t size() const noexcept { return shapes_.size(); }
  const TreeShape& shape(std::size_t i) const { return shapes_[i]; }
  std::span<const std::uint8_t> lca_depths(std::size_t i) const {
    return {depths_.data() + i * leaves_ * leaves_, leaves_ * leaves_};
  }

 private:
  std::size_t leaves_;
  std::vector<TreeShape> shapes_;
  std::vector<std::uint8_t> depths_;
};

inline constexpr std::size_t kMaxCachedShapeLeaves = 7;

// Thread-safe; leaves must not exceed kMaxCachedShapeLeaves.
const ShapeTable& shape_table(std::size_t leaves);

}  // namespace rbmg
