#include "rbmg/recognize.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

#include "rbmg/errors.hpp"
#include "rbmg/tree_shapes.hpp"

namespace rbmg {

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::bicluster: return "bicluster";
    case GraphClass::two_rbmg: return "2rbmg";
    case GraphClass::cograph: return "cograph";
    case GraphClass::hc_cograph: return "hc-cograph";
    case GraphClass::rbmg_oracle: return "rbmg-oracle";
    case GraphClass::nrbmg: return "nrbmg";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  for (auto cls : {GraphClass::bicluster, GraphClass::two_rbmg, GraphClass::cograph, GraphClass::hc_cograph,
                   GraphClass::rbmg_oracle, GraphClass::nrbmg}) {
    if (to_string(cls) == name) return cls;
  }
  return std::nullopt;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::induced_p4: return "induced-p4";
    case ViolationKind::non_bipartite_component: return "non-bipartite-component";
    case ViolationKind::improper_edge: return "improper-edge";
    case ViolationKind::wrong_color_count: return "wrong-color-count";
    case ViolationKind::no_edges: return "no-edges";
    case ViolationKind::join_colors_overlap: return "join-colors-overlap";
    case ViolationKind::union_colors_not_nested: return "union-colors-not-nested";
    case ViolationKind::no_explaining_tree: return "no-explaining-tree";
    case ViolationKind::component_not_rbmg: return "component-not-rbmg";
    case ViolationKind::no_full_color_component: return "no-full-color-component";
  }
  return "?";
}

namespace {

void require_vertices(const ColoredGraph& g) {
  if (g.vertex_count() == 0) throw GraphError("graph has no vertices");
}

RecognitionReport reject(GraphClass cls, ViolationKind kind, std::vector<Vertex> vertices, std::string detail = {}) {
  return {cls, false, Violation{kind, std::move(vertices), std::move(detail)}};
}

// Components of G[subset] (or of its complement), sorted by smallest vertex.
std::vector<std::vector<Vertex>> components_within(const ColoredGraph& g, std::span<const Vertex> subset,
                                                   bool complement) {
  std::vector<bool> done(subset.size(), false);
  std::vector<std::vector<Vertex>> out;
  for (std::size_t s = 0; s < subset.size(); ++s) {
    if (done[s]) continue;
    std::vector<std::size_t> queue{s};
    done[s] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = subset[queue[i]];
      for (std::size_t j = 0; j < subset.size(); ++j) {
        if (!done[j] && g.has_edge(v, subset[j]) != complement) {
          done[j] = true;
          queue.push_back(j);
        }
      }
    }
    std::vector<Vertex> comp;
    for (std::size_t i : queue) comp.push_back(subset[i]);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ColorId> colors_of(const ColoredGraph& g, std::span<const Vertex> vs) {
  std::vector<ColorId> out;
  for (Vertex v : vs) out.push_back(g.color(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_induced_p4(const ColoredGraph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  return g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, d) && !g.has_edge(a, c) && !g.has_edge(b, d) &&
         !g.has_edge(a, d);
}

// Lexicographically least (a, b, c, d) spanning an induced P4 within subset.
std::optional<std::array<Vertex, 4>> find_induced_p4(const ColoredGraph& g, std::span<const Vertex> subset) {
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  for (Vertex a : s) {
    for (Vertex b : s) {
      if (!g.has_edge(a, b)) continue;
      for (Vertex c : s) {
        if (c == a || !g.has_edge(b, c) || g.has_edge(a, c)) continue;
        for (Vertex d : s) {
          if (d == a || d == b || d == c) continue;
          if (is_induced_p4(g, a, b, c, d)) return std::array<Vertex, 4>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

std::string describe_parts(const ColoredGraph& g, const std::vector<std::vector<Vertex>>& parts) {
  std::ostringstream out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out << ' ';
    out << '{';
    const auto cols = colors_of(g, parts[i]);
    for (std::size_t j = 0; j < cols.size(); ++j) out << (j ? "," : "") << g.color_name(cols[j]);
    out << '}';
  }
  return "part colors " + out.str();
}

class Decomposer {
 public:
  Decomposer(const ColoredGraph& g, bool colored) : g_(g), colored_(colored) {}

  RecognitionReport run(GraphClass cls) {
    std::vector<Vertex> all(g_.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    build(std::move(all));
    if (failure_) return {cls, false, std::move(*failure_)};
    return {cls, true, std::move(tree_)};
  }

 private:
  std::size_t build(std::vector<Vertex> s) {
    const std::size_t id = tree_.nodes.size();
    tree_.nodes.push_back({Cotree::Kind::leaf, s, {}});
    if (s.size() == 1) return id;

    auto parts = components_within(g_, s, false);
    Cotree::Kind kind = Cotree::Kind::disjoint_union;
    if (parts.size() == 1) {
      parts = components_within(g_, s, true);
      kind = Cotree::Kind::join;
      if (parts.size() == 1) {
        const auto p4 = find_induced_p4(g_, s);
        failure_ = Violation{ViolationKind::induced_p4, {p4->begin(), p4->end()}, {}};
        return id;
      }
    }
    if (colored_ && !colors_compatible(s, parts, kind)) return id;

    tree_.nodes[id].kind = kind;
    for (auto& part : parts) {
      const std::size_t child = build(std::move(part));
      if (failure_) return id;
      tree_.nodes[id].children.push_back(child);
    }
    return id;
  }

  bool colors_compatible(const std::vector<Vertex>& s, const std::vector<std::vector<Vertex>>& parts,
                         Cotree::Kind kind) {
    const std::size_t total = colors_of(g_, s).size();
    if (kind == Cotree::Kind::join) {
      std::size_t sum = 0;
      for (const auto& p : parts) sum += colors_of(g_, p).size();
      if (sum != total) {
        failure_ = Violation{ViolationKind::join_colors_overlap, s, describe_parts(g_, parts)};
        return false;
      }
      return true;
    }
    for (const auto& p : parts) {
      if (colors_of(g_, p).size() == total) return true;
    }
    failure_ = Violation{ViolationKind::union_colors_not_nested, s, describe_parts(g_, parts)};
    return false;
  }

  const ColoredGraph& g_;
  bool colored_;
  Cotree tree_;
  std::optional<Violation> failure_;
};

// Fixed-size view of a colored graph for the exhaustive tree search.
struct SearchTarget {
  std::size_t m = 0;
  std::vector<std::uint8_t> colors;
  std::size_t color_count = 0;
  std::vector<std::uint64_t> adjacency;

  explicit SearchTarget(const ColoredGraph& g)
      : m(g.vertex_count()), colors(g.colors().begin(), g.colors().end()), color_count(g.color_count()),
        adjacency(m, 0) {
    for (const auto& e : g.edges()) {
      adjacency[e.first] |= std::uint64_t{1} << e.second;
      adjacency[e.second] |= std::uint64_t{1} << e.first;
    }
  }

  bool explained_by(std::span<const std::uint8_t> depths) const {
    std::array<std::uint64_t, 64> out{};
    std::array<std::uint8_t, 64> best{};
    for (std::size_t x = 0; x < m; ++x) {
      std::fill_n(best.begin(), color_count, std::uint8_t{0});
      const auto row = depths.subspan(x * m, m);
      for (std::size_t y = 0; y < m; ++y) {
        if (colors[y] != colors[x]) best[colors[y]] = std::max(best[colors[y]], row[y]);
      }
      std::uint64_t mask = 0;
      for (std::size_t y = 0; y < m; ++y) {
        if (colors[y] != colors[x] && row[y] == best[colors[y]]) mask |= std::uint64_t{1} << y;
      }
      if (adjacency[x] & ~mask) return false;
      out[x] = mask;
    }
    for (std::size_t x = 0; x < m; ++x) {
      std::uint64_t reciprocal = 0;
      for (std::size_t y = 0; y < m; ++y) {
        if (((out[x] >> y) & 1U) && ((out[y] >> x) & 1U)) reciprocal |= std::uint64_t{1} << y;
      }
      if (reciprocal != adjacency[x]) return false;
    }
    return true;
  }
};

std::optional<PhylogeneticTree> find_explaining_tree(const ColoredGraph& g, std::size_t cap) {
  const std::size_t m = g.vertex_count();
  if (m > cap) {
    throw InstanceTooLargeError("instance too large: " + std::to_string(m) + " vertices exceed the oracle cap of " +
                                std::to_string(cap));
  }
  if (m > 64 || g.color_count() > 255) throw InstanceTooLargeError("instance too large for exhaustive tree search");
  if (!g.is_properly_colored()) return std::nullopt;

  const SearchTarget target(g);
  if (m <= kMaxCachedShapeLeaves) {
    const auto& table = shape_table(m);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (target.explained_by(table.lca_depths(i))) return tree_from_shape(table.shape(i), LeafLabels::from_graph(g));
    }
    return std::nullopt;
  }
  std::optional<PhylogeneticTree> found;
  for_each_tree_shape(m, [&](const TreeShape& shape) {
    if (!target.explained_by(lca_depth_matrix(shape))) return true;
    found.emplace(tree_from_shape(shape, LeafLabels::from_graph(g)));
    return false;
  });
  return found;
}

std::optional<std::pair<Vertex, Vertex>> first_improper_edge(const ColoredGraph& g) {
  for (const auto& e : g.edges()) {
    if (g.color(e.first) == g.color(e.second)) return std::pair{e.first, e.second};
  }
  return std::nullopt;
}

// Necessary condition for a connected RBMG: every two of its colors induce a
// 2-RBMG. Returns a description of the first failing color pair.
std::optional<std::string> failing_color_pair(const ColoredGraph& component) {
  const auto classes = component.color_classes();
  for (ColorId s = 0; s < classes.size(); ++s) {
    for (ColorId t = s + 1; t < classes.size(); ++t) {
      std::vector<Vertex> both = classes[s];
      both.insert(both.end(), classes[t].begin(), classes[t].end());
      if (!is_2rbmg(induced_subgraph(component, both)).verdict) {
        return "colors " + component.color_name(s) + "," + component.color_name(t) + " do not induce a 2-RBMG";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

RecognitionReport is_bicluster(const ColoredGraph& g) {
  require_vertices(g);
  BicliqueCover cover;
  std::vector<int> side(g.vertex_count(), -1);
  for (const auto& comp : connected_components(g)) {
    // BFS 2-coloring from the smallest vertex.
    std::vector<Vertex> queue{comp.front()};
    side[comp.front()] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Vertex v = queue[i];
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          return reject(GraphClass::bicluster, ViolationKind::non_bipartite_component, comp);
        }
      }
    }
    BicliqueCover::Biclique b;
    for (Vertex v : comp) (side[v] == 0 ? b.side_a : b.side_b).push_back(v);
    for (Vertex u : b.side_a) {
      for (Vertex v : b.side_b) {
        if (g.has_edge(u, v)) continue;
        // A shortest u-v path has odd length >= 3; its first four vertices
        // induce a P4.
        std::vector<Vertex> prev(g.vertex_count(), Vertex(-1));
        std::vector<Vertex> bfs{u};
        prev[u] = u;
        for (std::size_t i = 0; i < bfs.size() && prev[v] == Vertex(-1); ++i) {
          for (Vertex w : g.neighbors(bfs[i])) {
            if (prev[w] == Vertex(-1)) {
              prev[w] = bfs[i];
              bfs.push_back(w);
            }
          }
        }
        std::vector<Vertex> path{v};
        while (path.back() != u) path.push_back(prev[path.back()]);
        std::reverse(path.begin(), path.end());
        return reject(GraphClass::bicluster, ViolationKind::induced_p4, {path[0], path[1], path[2], path[3]});
      }
    }
    cover.components.push_back(std::move(b));
  }
  return {GraphClass::bicluster, true, std::move(cover)};
}

RecognitionReport is_2rbmg(const ColoredGraph& g) {
  require_vertices(g);
  if (g.color_count() != 2) {
    return reject(GraphClass::two_rbmg, ViolationKind::wrong_color_count, {},
                  "uses " + std::to_string(g.color_count()) + " colors");
  }
  if (auto bad = first_improper_edge(g)) {
    return reject(GraphClass::two_rbmg, ViolationKind::improper_edge, {bad->first, bad->second});
  }
  auto report = is_bicluster(g);
  report.graph_class = GraphClass::two_rbmg;
  if (!report.verdict) return report;
  if (g.edge_count() == 0) return reject(GraphClass::two_rbmg, ViolationKind::no_edges, {});
  return report;
}

RecognitionReport is_cograph(const ColoredGraph& g) {
  require_vertices(g);
  return Decomposer(g, false).run(GraphClass::cograph);
}

RecognitionReport is_hc_cograph(const ColoredGraph& g) {
  require_vertices(g);
  return Decomposer(g, true).run(GraphClass::hc_cograph);
}

RecognitionReport is_rbmg_bruteforce(const ColoredGraph& g, std::size_t cap) {
  require_vertices(g);
  if (g.vertex_count() > cap) {
    throw InstanceTooLargeError("instance too large: " + std::to_string(g.vertex_count()) +
                                " vertices exceed the oracle cap of " + std::to_string(cap));
  }
  if (auto bad = first_improper_edge(g)) {
    return reject(GraphClass::rbmg_oracle, ViolationKind::improper_edge, {bad->first, bad->second});
  }
  auto tree = find_explaining_tree(g, cap);
  if (!tree) {
    std::vector<Vertex> all(g.vertex_count());
    for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
    return reject(GraphClass::rbmg_oracle, ViolationKind::no_explaining_tree, std::move(all));
  }
  return {GraphClass::rbmg_oracle, true, std::move(*tree)};
}

RecognitionReport is_nrbmg_structural(const ColoredGraph& g, std::size_t cap) {
  require_vertices(g);
  const auto components = connected_components(g);
  for (const auto& comp : components) {
    if (comp.size() > cap) {
      throw InstanceTooLargeError("instance too large: component of " + std::to_string(comp.size()) +
                                  " vertices exceeds the oracle cap of " + std::to_string(cap));
    }
  }
  if (auto bad = first_improper_edge(g)) {
    return reject(GraphClass::nrbmg, ViolationKind::improper_edge, {bad->first, bad->second});
  }
  bool full = false;
  for (const auto& comp : components) full |= colors_of(g, comp).size() == g.color_count();
  if (!full) return reject(GraphClass::nrbmg, ViolationKind::no_full_color_component, {});

  std::vector<ColoredGraph> parts;
  for (const auto& comp : components) {
    parts.push_back(induced_subgraph(g, comp));
    if (auto why = failing_color_pair(parts.back())) {
      return reject(GraphClass::nrbmg, ViolationKind::component_not_rbmg, comp, *why);
    }
  }
  ComponentTrees trees;
  for (std::size_t i = 0; i < components.size(); ++i) {
    auto tree = find_explaining_tree(parts[i], cap);
    if (!tree) return reject(GraphClass::nrbmg, ViolationKind::component_not_rbmg, components[i], "no explaining tree");
    trees.components.push_back(components[i]);
    trees.trees.push_back(std::move(*tree));
  }
  return {GraphClass::nrbmg, true, std::move(trees)};
}

RecognitionReport recognize(const ColoredGraph& g, GraphClass cls, std::size_t cap) {
  switch (cls) {
    case GraphClass::bicluster: return is_bicluster(g);
    case GraphClass::two_rbmg: return is_2rbmg(g);
    case GraphClass::cograph: return is_cograph(g);
    case GraphClass::hc_cograph: return is_hc_cograph(g);
    case GraphClass::rbmg_oracle: return is_rbmg_bruteforce(g, cap);
    case GraphClass::nrbmg: return is_nrbmg_structural(g, cap);
  }
  throw GraphError("unknown graph class");
}

namespace {

bool is_component(const ColoredGraph& g, const std::vector<Vertex>& vs) {
  if (vs.empty()) return false;
  for (const auto& comp : connected_components(g)) {
    if (comp == vs) return true;
  }
  return false;
}

bool verify_cotree(const ColoredGraph& g, const Cotree& tree, bool colored) {
  if (tree.nodes.empty() || tree.nodes[0].vertices.size() != g.vertex_count()) return false;
  for (const auto& node : tree.nodes) {
    if (node.kind == Cotree::Kind::leaf) {
      if (node.vertices.size() != 1 || !node.children.empty()) return false;
      continue;
    }
    if (node.children.size() < 2) return false;
    std::vector<Vertex> covered;
    std::vector<std::vector<Vertex>> parts;
    for (std::size_t c : node.children) {
      if (c >= tree.nodes.size()) return false;
      parts.push_back(tree.nodes[c].vertices);
      covered.insert(covered.end(), parts.back().begin(), parts.back().end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != node.vertices) return false;
    const bool join = node.kind == Cotree::Kind::join;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = i + 1; j < parts.size(); ++j) {
        for (Vertex x : parts[i]) {
          for (Vertex y : parts[j]) {
            if (g.has_edge(x, y) != join) return false;
          }
        }
      }
    }
    if (!colored) continue;
    const std::size_t total = colors_of(g, node.vertices).size();
    if (join) {
      std::size_t sum = 0;
      for (const auto& p : parts) sum += colors_of(g, p).size();
      if (sum != total) return false;
    } else if (std::ranges::none_of(parts, [&](const auto& p) { return colors_of(g, p).size() == total; })) {
      return false;
    }
  }
  return true;
}

bool verify_bicliques(const ColoredGraph& g, const BicliqueCover& cover, GraphClass cls) {
  std::vector<Vertex> covered;
  for (const auto& b : cover.components) {
    std::vector<Vertex> comp = b.side_a;
    comp.insert(comp.end(), b.side_b.begin(), b.side_b.end());
    std::sort(comp.begin(), comp.end());
    if (!is_component(g, comp)) return false;
    if (b.side_a.empty() || (b.side_b.empty() && comp.size() != 1)) return false;
    std::size_t edges = 0;
    for (Vertex u : b.side_a) {
      for (Vertex v : b.side_b) {
        if (!g.has_edge(u, v)) return false;
        ++edges;
      }
    }
    std::size_t inside = 0;
    for (Vertex v : comp) inside += g.degree(v);
    if (inside != 2 * edges) return false;
    covered.insert(covered.end(), comp.begin(), comp.end());
  }
  if (covered.size() != g.vertex_count()) return false;
  if (cls == GraphClass::two_rbmg) {
    return g.color_count() == 2 && g.is_properly_colored() && g.edge_count() > 0;
  }
  return true;
}

bool verify_violation(const ColoredGraph& g, const Violation& v, GraphClass cls, std::size_t cap) {
  const auto& vs = v.vertices;
  switch (v.kind) {
    case ViolationKind::induced_p4:
      return vs.size() == 4 && is_induced_p4(g, vs[0], vs[1], vs[2], vs[3]);
    case ViolationKind::non_bipartite_component:
      return is_component(g, vs) && !is_bicluster(induced_subgraph(g, vs)).verdict &&
             std::get<Violation>(is_bicluster(induced_subgraph(g, vs)).certificate).kind ==
                 ViolationKind::non_bipartite_component;
    case ViolationKind::improper_edge:
      return vs.size() == 2 && g.has_edge(vs[0], vs[1]) && g.color(vs[0]) == g.color(vs[1]);
    case ViolationKind::wrong_color_count:
      return cls == GraphClass::two_rbmg && g.color_count() != 2;
    case ViolationKind::no_edges:
      return g.edge_count() == 0;
    case ViolationKind::join_colors_overlap: {
      const auto parts = components_within(g, vs, true);
      if (vs.empty() || components_within(g, vs, false).size() != 1 || parts.size() < 2) return false;
      std::size_t sum = 0;
      for (const auto& p : parts) sum += colors_of(g, p).size();
      return sum != colors_of(g, vs).size();
    }
    case ViolationKind::union_colors_not_nested: {
      const auto parts = components_within(g, vs, false);
      if (vs.empty() || parts.size() < 2) return false;
      const std::size_t total = colors_of(g, vs).size();
      return std::ranges::none_of(parts, [&](const auto& p) { return colors_of(g, p).size() == total; });
    }
    case ViolationKind::no_explaining_tree:
      return vs.size() == g.vertex_count() && !find_explaining_tree(g, cap);
    case ViolationKind::component_not_rbmg:
      return is_component(g, vs) && !find_explaining_tree(induced_subgraph(g, vs), cap);
    case ViolationKind::no_full_color_component:
      return std::ranges::none_of(connected_components(g),
                                  [&](const auto& c) { return colors_of(g, c).size() == g.color_count(); });
  }
  return false;
}

}  // namespace

bool verify_certificate(const ColoredGraph& g, const RecognitionReport& report, std::size_t cap) {
  return std::visit(
      [&](const auto& cert) -> bool {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, Violation>) {
          return !report.verdict && verify_violation(g, cert, report.graph_class, cap);
        } else if constexpr (std::is_same_v<T, Cotree>) {
          return report.verdict && verify_cotree(g, cert, report.graph_class == GraphClass::hc_cograph);
        } else if constexpr (std::is_same_v<T, BicliqueCover>) {
          return report.verdict && verify_bicliques(g, cert, report.graph_class);
        } else if constexpr (std::is_same_v<T, PhylogeneticTree>) {
          return report.verdict && same_colored_structure(best_match_graph_symmetric(cert), g);
        } else {
          if (!report.verdict || cert.components != connected_components(g)) return false;
          bool full = false;
          for (std::size_t i = 0; i < cert.components.size(); ++i) {
            const auto part = induced_subgraph(g, cert.components[i]);
            if (!same_colored_structure(best_match_graph_symmetric(cert.trees[i]), part)) return false;
            full |= part.color_count() == g.color_count();
          }
          return full && g.is_properly_colored();
        }
      },
      report.certificate);
}

namespace {

std::string vertex_set(const ColoredGraph& g, std::span<const Vertex> vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i > 0) out += ',';
    out += g.vertex_name(vs[i]);
  }
  return out + "}";
}

}  // namespace

std::string format_certificate(const ColoredGraph& g, const Certificate& certificate) {
  std::ostringstream out;
  std::visit(
      [&](const auto& cert) {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, Violation>) {
          out << "violation " << to_string(cert.kind);
          if (!cert.vertices.empty()) out << ' ' << vertex_set(g, cert.vertices);
          out << '\n';
          if (!cert.detail.empty()) out << "detail " << cert.detail << '\n';
        } else if constexpr (std::is_same_v<T, Cotree>) {
          out << "cotree\n";
          auto walk = [&](auto&& self, std::size_t id, std::size_t indent) -> void {
            const auto& node = cert.nodes[id];
            out << std::string(2 * indent, ' ');
            if (node.kind == Cotree::Kind::leaf) {
              out << "leaf " << g.vertex_name(node.vertices.front()) << '\n';
              return;
            }
            out << (node.kind == Cotree::Kind::join ? "join " : "union ") << vertex_set(g, node.vertices) << '\n';
            for (std::size_t c : node.children) self(self, c, indent + 1);
          };
          if (!cert.nodes.empty()) walk(walk, 0, 1);
        } else if constexpr (std::is_same_v<T, BicliqueCover>) {
          out << "bicliques\n";
          for (const auto& b : cert.components) {
            out << "  component " << vertex_set(g, b.side_a) << " | " << vertex_set(g, b.side_b) << '\n';
          }
        } else if constexpr (std::is_same_v<T, PhylogeneticTree>) {
          out << "tree " << format_newick(cert) << '\n';
        } else {
          out << "component-trees\n";
          for (std::size_t i = 0; i < cert.components.size(); ++i) {
            out << "  component " << vertex_set(g, cert.components[i]) << ' ' << format_newick(cert.trees[i]) << '\n';
          }
        }
      },
      certificate);
  return out.str();
}

}  // namespace rbmg
