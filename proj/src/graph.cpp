#include "rbmg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "rbmg/errors.hpp"

namespace rbmg {

VertexPair VertexPair::of(Vertex a, Vertex b) {
  if (a == b) throw GraphError("self-pair {" + std::to_string(a) + "," + std::to_string(a) + "}");
  return a < b ? VertexPair{a, b} : VertexPair{b, a};
}

namespace {

void check_unique_names(const std::vector<std::string>& names, const char* what) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw GraphError(std::string("empty ") + what + " name");
    if (!seen.insert(n).second) throw GraphError(std::string("duplicate ") + what + " name '" + n + "'");
  }
}

}  // namespace

ColoredGraph::ColoredGraph(std::vector<ColorId> colors, std::vector<VertexPair> edges,
                           std::vector<std::string> vertex_names,
                           std::vector<std::string> color_names) {
  const std::size_t n = colors.size();

  // Surjectivity onto 0..c-1, then relabel by first appearance.
  std::size_t c = 0;
  for (ColorId col : colors) c = std::max<std::size_t>(c, std::size_t{col} + 1);
  std::vector<ColorId> relabel(c, ColorId(-1));
  ColorId next = 0;
  for (ColorId col : colors) {
    if (relabel[col] == ColorId(-1)) relabel[col] = next++;
  }
  if (next != c) throw GraphError("coloring is not surjective onto 0.." + std::to_string(c - 1));
  for (ColorId& col : colors) col = relabel[col];
  if (!color_names.empty()) {
    if (color_names.size() != c) throw GraphError("color name table does not match color count");
    std::vector<std::string> reordered(c);
    for (std::size_t old = 0; old < c; ++old) reordered[relabel[old]] = std::move(color_names[old]);
    color_names = std::move(reordered);
    check_unique_names(color_names, "color");
  }
  if (!vertex_names.empty()) {
    if (vertex_names.size() != n) throw GraphError("vertex name table does not match vertex count");
    check_unique_names(vertex_names, "vertex");
  }

  for (const auto& e : edges) {
    if (e.first == e.second) throw GraphError("self-loop at vertex " + std::to_string(e.first));
    if (e.first > e.second) throw GraphError("edge pair not in canonical order");
    if (e.second >= n) throw GraphError("edge endpoint " + std::to_string(e.second) + " out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw GraphError("duplicate edge");
  }

  colors_ = std::move(colors);
  color_count_ = c;
  edges_ = std::move(edges);
  vertex_names_ = std::move(vertex_names);
  color_names_ = std::move(color_names);

  adjacency_.assign(n, {});
  words_per_row_ = (n + 63) / 64;
  adjacency_bits_.assign(n * words_per_row_, 0);
  for (const auto& e : edges_) {
    adjacency_[e.first].push_back(e.second);
    adjacency_[e.second].push_back(e.first);
    adjacency_bits_[e.first * words_per_row_ + e.second / 64] |= std::uint64_t{1} << (e.second % 64);
    adjacency_bits_[e.second * words_per_row_ + e.first / 64] |= std::uint64_t{1} << (e.first % 64);
    if (colors_[e.first] == colors_[e.second]) properly_colored_ = false;
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

bool ColoredGraph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  return (adjacency_bits_[a * words_per_row_ + b / 64] >> (b % 64)) & 1U;
}

std::string ColoredGraph::vertex_name(Vertex v) const {
  if (v >= vertex_count()) throw GraphError("unknown vertex " + std::to_string(v));
  return vertex_names_.empty() ? "v" + std::to_string(v) : vertex_names_[v];
}

std::string ColoredGraph::color_name(ColorId c) const {
  if (c >= color_count_) throw GraphError("unknown color " + std::to_string(c));
  return color_names_.empty() ? "c" + std::to_string(c) : color_names_[c];
}

std::optional<Vertex> ColoredGraph::find_vertex(std::string_view name) const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (vertex_name(v) == name) return v;
  }
  return std::nullopt;
}

std::vector<std::vector<Vertex>> ColoredGraph::color_classes() const {
  std::vector<std::vector<Vertex>> classes(color_count_);
  for (Vertex v = 0; v < vertex_count(); ++v) classes[colors_[v]].push_back(v);
  return classes;
}

bool same_colored_structure(const ColoredGraph& a, const ColoredGraph& b) {
  return std::ranges::equal(a.colors(), b.colors()) && std::ranges::equal(a.edges(), b.edges());
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
  if (!same_colored_structure(a, b)) return false;
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    if (a.vertex_name(v) != b.vertex_name(v)) return false;
  }
  for (ColorId c = 0; c < a.color_count(); ++c) {
    if (a.color_name(c) != b.color_name(c)) return false;
  }
  return true;
}

std::string_view to_string(EditMode mode) {
  switch (mode) {
    case EditMode::deletion: return "deletion";
    case EditMode::editing: return "editing";
    case EditMode::completion: return "completion";
  }
  return "?";
}

EditSet::EditSet(EditMode mode, std::vector<VertexPair> pairs) : mode_(mode), pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (p.first >= p.second) throw GraphError("edit pair not in canonical order");
  }
  std::sort(pairs_.begin(), pairs_.end());
  if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
    throw GraphError("duplicate pair in edit set");
  }
}

bool EditSet::contains(VertexPair p) const { return std::binary_search(pairs_.begin(), pairs_.end(), p); }

bool EditSet::touches(Vertex x) const {
  return std::ranges::any_of(pairs_, [x](const VertexPair& p) { return p.touches(x); });
}

void EditSet::validate_against(const ColoredGraph& g) const {
  for (const auto& p : pairs_) {
    if (p.second >= g.vertex_count()) throw GraphError("edit pair names unknown vertex " + std::to_string(p.second));
    if (g.color(p.first) == g.color(p.second)) {
      throw GraphError("edit pair {" + g.vertex_name(p.first) + "," + g.vertex_name(p.second) + "} is same-colored");
    }
    const bool present = g.has_edge(p.first, p.second);
    if (mode_ == EditMode::deletion && !present) {
      throw GraphError("cannot delete non-edge {" + g.vertex_name(p.first) + "," + g.vertex_name(p.second) + "}");
    }
    if (mode_ == EditMode::completion && present) {
      throw GraphError("cannot add existing edge {" + g.vertex_name(p.first) + "," + g.vertex_name(p.second) + "}");
    }
  }
}

namespace {

std::vector<std::string> names_of(const ColoredGraph& g, std::span<const Vertex> vs) {
  if (!g.has_vertex_names()) return {};
  std::vector<std::string> out;
  out.reserve(vs.size());
  for (Vertex v : vs) out.push_back(g.vertex_name(v));
  return out;
}

std::vector<std::string> all_color_names(const ColoredGraph& g) {
  std::vector<std::string> out;
  for (ColorId c = 0; c < g.color_count(); ++c) out.push_back(g.color_name(c));
  return out;
}

}  // namespace

ColoredGraph induced_subgraph(const ColoredGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> w(subset.begin(), subset.end());
  std::sort(w.begin(), w.end());
  w.erase(std::unique(w.begin(), w.end()), w.end());
  std::vector<Vertex> index(g.vertex_count(), Vertex(-1));
  for (Vertex i = 0; i < w.size(); ++i) {
    if (w[i] >= g.vertex_count()) throw GraphError("unknown vertex " + std::to_string(w[i]));
    index[w[i]] = i;
  }

  // Re-index colors densely in order of first use.
  std::vector<ColorId> color_map(g.color_count(), ColorId(-1));
  std::vector<ColorId> colors;
  std::vector<std::string> color_names;
  for (Vertex v : w) {
    ColorId& mapped = color_map[g.color(v)];
    if (mapped == ColorId(-1)) {
      mapped = static_cast<ColorId>(color_names.size());
      color_names.push_back(g.color_name(g.color(v)));
    }
    colors.push_back(mapped);
  }
  std::vector<VertexPair> edges;
  for (const auto& e : g.edges()) {
    if (index[e.first] != Vertex(-1) && index[e.second] != Vertex(-1)) {
      edges.push_back(VertexPair::of(index[e.first], index[e.second]));
    }
  }
  if (!g.has_color_names()) color_names.clear();
  return ColoredGraph(std::move(colors), std::move(edges), names_of(g, w), std::move(color_names));
}

ColoredGraph remove_vertex(const ColoredGraph& g, Vertex x) {
  if (x >= g.vertex_count()) throw GraphError("unknown vertex " + std::to_string(x));
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v != x) rest.push_back(v);
  }
  return induced_subgraph(g, rest);
}

ColoredGraph add_hub_vertex(const ColoredGraph& g, ColorId color, std::string vertex_name,
                            std::string color_name) {
  if (color > g.color_count()) {
    throw GraphError("hub color " + std::to_string(color) + " is neither existing nor the next fresh id");
  }
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::vector<ColorId> colors(g.colors().begin(), g.colors().end());
  colors.push_back(color);
  std::vector<VertexPair> edges(g.edges().begin(), g.edges().end());
  for (Vertex v = 0; v < n; ++v) edges.push_back({v, n});

  std::vector<std::string> vnames;
  if (g.has_vertex_names() || !vertex_name.empty()) {
    for (Vertex v = 0; v < n; ++v) vnames.push_back(g.vertex_name(v));
    std::string name = vertex_name.empty() ? "v" + std::to_string(n) : vertex_name;
    while (g.find_vertex(name)) name += "'";
    vnames.push_back(std::move(name));
  }
  std::vector<std::string> cnames;
  if (g.has_color_names() || !color_name.empty()) {
    cnames = all_color_names(g);
    if (color == g.color_count()) {
      std::string name = color_name.empty() ? "c" + std::to_string(color) : color_name;
      while (std::ranges::find(cnames, name) != cnames.end()) name += "'";
      cnames.push_back(std::move(name));
    }
  }
  return ColoredGraph(std::move(colors), std::move(edges), std::move(vnames), std::move(cnames));
}

namespace {

ColoredGraph combine(const ColoredGraph& a, const ColoredGraph& b, bool join) {
  std::vector<std::string> cnames = all_color_names(a);
  std::unordered_map<std::string, ColorId> by_name;
  for (ColorId c = 0; c < cnames.size(); ++c) by_name.emplace(cnames[c], c);

  std::vector<ColorId> colors(a.colors().begin(), a.colors().end());
  for (Vertex v = 0; v < b.vertex_count(); ++v) {
    const std::string name = b.color_name(b.color(v));
    auto [it, inserted] = by_name.emplace(name, static_cast<ColorId>(cnames.size()));
    if (inserted) cnames.push_back(name);
    colors.push_back(it->second);
  }

  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<VertexPair> edges(a.edges().begin(), a.edges().end());
  for (const auto& e : b.edges()) edges.push_back({e.first + shift, e.second + shift});
  if (join) {
    for (Vertex x = 0; x < a.vertex_count(); ++x) {
      for (Vertex y = 0; y < b.vertex_count(); ++y) edges.push_back({x, y + shift});
    }
  }

  std::vector<std::string> vnames;
  if (a.has_vertex_names() || b.has_vertex_names()) {
    std::unordered_set<std::string> seen;
    bool clash = false;
    for (Vertex v = 0; v < a.vertex_count(); ++v) {
      vnames.push_back(a.vertex_name(v));
      clash |= !seen.insert(vnames.back()).second;
    }
    for (Vertex v = 0; v < b.vertex_count(); ++v) {
      vnames.push_back(b.vertex_name(v));
      clash |= !seen.insert(vnames.back()).second;
    }
    if (clash) vnames.clear();
  }
  if (!a.has_color_names() && !b.has_color_names()) {
    // Default names are c<id>; keep them implicit when they still line up.
    bool implicit = true;
    for (ColorId c = 0; c < cnames.size(); ++c) implicit &= cnames[c] == "c" + std::to_string(c);
    if (implicit) cnames.clear();
  }
  return ColoredGraph(std::move(colors), std::move(edges), std::move(vnames), std::move(cnames));
}

}  // namespace

ColoredGraph colored_join(const ColoredGraph& a, const ColoredGraph& b) { return combine(a, b, true); }
ColoredGraph colored_union(const ColoredGraph& a, const ColoredGraph& b) { return combine(a, b, false); }

ColoredGraph apply_edits(const ColoredGraph& g, const EditSet& edits) {
  edits.validate_against(g);
  std::vector<VertexPair> edges;
  const auto& f = edits.pairs();
  switch (edits.mode()) {
    case EditMode::deletion:
      std::ranges::set_difference(g.edges(), f, std::back_inserter(edges));
      break;
    case EditMode::editing:
      std::ranges::set_symmetric_difference(g.edges(), f, std::back_inserter(edges));
      break;
    case EditMode::completion:
      std::ranges::set_union(g.edges(), f, std::back_inserter(edges));
      break;
  }
  std::vector<std::string> vnames;
  if (g.has_vertex_names()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) vnames.push_back(g.vertex_name(v));
  }
  std::vector<std::string> cnames;
  if (g.has_color_names()) cnames = all_color_names(g);
  return ColoredGraph(std::vector<ColorId>(g.colors().begin(), g.colors().end()), std::move(edges),
                      std::move(vnames), std::move(cnames));
}

std::vector<std::vector<Vertex>> connected_components(const ColoredGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> hub_vertices(const ColoredGraph& g) {
  std::vector<Vertex> hubs;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) + 1 == g.vertex_count()) hubs.push_back(v);
  }
  return hubs;
}

std::vector<VertexPair> cross_pairs(const ColoredGraph& g) {
  std::vector<VertexPair> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    for (Vertex y = x + 1; y < g.vertex_count(); ++y) {
      if (g.color(x) != g.color(y)) out.push_back({x, y});
    }
  }
  return out;
}

}  // namespace rbmg
