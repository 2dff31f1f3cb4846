#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rbmg {

using Vertex = std::uint32_t;
using ColorId = std::uint32_t;

// Unordered vertex pair stored with the smaller id first. Ordering is
// lexicographic on (first, second), which fixes every enumeration order
// downstream.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  static VertexPair of(Vertex a, Vertex b);

  bool touches(Vertex x) const noexcept { return first == x || second == x; }

  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Undirected simple graph with a surjective vertex coloring onto 0..color_count-1.
//
// Immutable after construction. Color ids are normalized so that they appear
// in increasing order of first use along the vertex ids (vertex 0 always has
// color 0, the next new color seen is 1, ...); supplied color names follow
// their ids. Vertex and color names are optional; without them vertices are
// called v0, v1, ... and colors c0, c1, ...
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(std::vector<ColorId> colors, std::vector<VertexPair> edges,
               std::vector<std::string> vertex_names = {},
               std::vector<std::string> color_names = {});

  std::size_t vertex_count() const noexcept { return colors_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t color_count() const noexcept { return color_count_; }

  ColorId color(Vertex v) const { return colors_.at(v); }
  std::span<const ColorId> colors() const noexcept { return colors_; }
  std::span<const VertexPair> edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const;
  bool is_properly_colored() const noexcept { return properly_colored_; }

  std::string vertex_name(Vertex v) const;
  std::string color_name(ColorId c) const;
  bool has_vertex_names() const noexcept { return !vertex_names_.empty(); }
  bool has_color_names() const noexcept { return !color_names_.empty(); }
  std::optional<Vertex> find_vertex(std::string_view name) const;

  // L[s] for every color s, each list sorted by vertex id.
  std::vector<std::vector<Vertex>> color_classes() const;

  // Equality of structure, colors and (resolved) names.
  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b);

 private:
  std::vector<ColorId> colors_;
  std::size_t color_count_ = 0;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint64_t> adjacency_bits_;
  std::size_t words_per_row_ = 0;
  std::vector<std::string> vertex_names_;
  std::vector<std::string> color_names_;
  bool properly_colored_ = true;
};

// Structure and coloring only; names are ignored.
bool same_colored_structure(const ColoredGraph& a, const ColoredGraph& b);

enum class EditMode { deletion, editing, completion };

std::string_view to_string(EditMode mode);

// The set F of vertex pairs to delete, toggle or add.
class EditSet {
 public:
  EditSet() = default;
  EditSet(EditMode mode, std::vector<VertexPair> pairs);

  EditMode mode() const noexcept { return mode_; }
  std::span<const VertexPair> pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  bool contains(VertexPair p) const;
  bool touches(Vertex x) const;

  // Throws GraphError if a pair is same-colored, names a missing vertex, or
  // breaks the mode (deleting a non-edge, completing an existing edge).
  void validate_against(const ColoredGraph& g) const;

  friend bool operator==(const EditSet&, const EditSet&) = default;

 private:
  EditMode mode_ = EditMode::editing;
  std::vector<VertexPair> pairs_;
};

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> subset);
ColoredGraph remove_vertex(const ColoredGraph& g, Vertex x);

// G + x: a new last vertex adjacent to every existing vertex. `color` may be
// an existing id or exactly color_count() for a fresh color.
ColoredGraph add_hub_vertex(const ColoredGraph& g, ColorId color,
                            std::string vertex_name = {}, std::string color_name = {});

// Colors of the two operands are matched by color name; vertices of `b` are
// shifted after those of `a`.
ColoredGraph colored_join(const ColoredGraph& a, const ColoredGraph& b);
ColoredGraph colored_union(const ColoredGraph& a, const ColoredGraph& b);

ColoredGraph apply_edits(const ColoredGraph& g, const EditSet& edits);

// Components sorted by their smallest vertex; each component sorted.
std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g);
std::vector<Vertex> hub_vertices(const ColoredGraph& g);
// Every {x, y} with sigma(x) != sigma(y), in canonical order.
std::vector<VertexPair> cross_pairs(const ColoredGraph& g);

}  // namespace rbmg
