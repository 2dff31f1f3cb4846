#include "rbmg/graph_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "rbmg/errors.hpp"

namespace rbmg {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '#') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_count(std::string_view field, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char ch : name) {
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '#') return false;
  }
  return true;
}

}  // namespace

ColoredGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_vertices = 0;
  std::size_t declared_colors = 0;

  std::vector<std::string> vertex_names;
  std::vector<std::string> color_names;
  std::vector<ColorId> colors;
  std::unordered_map<std::string, Vertex> vertex_index;
  std::unordered_map<std::string, ColorId> color_index;
  std::vector<VertexPair> edges;
  std::set<VertexPair> seen_edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    const std::string_view kind = fields[0];
    if (kind == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header line");
      if (fields.size() != 4 || fields[1] != "cgraph") {
        throw ParseError(line_no, "header must read 'p cgraph <num_vertices> <num_colors>'");
      }
      declared_vertices = parse_count(fields[2], line_no);
      declared_colors = parse_count(fields[3], line_no);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "record before 'p cgraph' header");

    if (kind == "v") {
      if (fields.size() != 3) throw ParseError(line_no, "vertex record must read 'v <name> <color>'");
      std::string name(fields[1]);
      if (vertex_index.contains(name)) throw ParseError(line_no, "duplicate vertex '" + name + "'");
      auto [it, inserted] = color_index.emplace(std::string(fields[2]), static_cast<ColorId>(color_names.size()));
      if (inserted) color_names.emplace_back(fields[2]);
      vertex_index.emplace(name, static_cast<Vertex>(vertex_names.size()));
      vertex_names.push_back(std::move(name));
      colors.push_back(it->second);
    } else if (kind == "e") {
      if (fields.size() != 3) throw ParseError(line_no, "edge record must read 'e <name> <name>'");
      auto a = vertex_index.find(std::string(fields[1]));
      auto b = vertex_index.find(std::string(fields[2]));
      if (a == vertex_index.end()) throw ParseError(line_no, "unknown vertex '" + std::string(fields[1]) + "'");
      if (b == vertex_index.end()) throw ParseError(line_no, "unknown vertex '" + std::string(fields[2]) + "'");
      if (a->second == b->second) throw ParseError(line_no, "self-loop at '" + a->first + "'");
      const auto pair = VertexPair::of(a->second, b->second);
      if (!seen_edges.insert(pair).second) {
        throw ParseError(line_no, "repeated edge {" + a->first + "," + b->first + "}");
      }
      edges.push_back(pair);
    } else {
      throw ParseError(line_no, "unknown record type '" + std::string(kind) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing 'p cgraph' header");
  if (vertex_names.size() != declared_vertices) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_vertices) + " vertices, found " +
                                  std::to_string(vertex_names.size()));
  }
  if (color_names.size() != declared_colors) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_colors) + " colors, found " +
                                  std::to_string(color_names.size()));
  }
  return ColoredGraph(std::move(colors), std::move(edges), std::move(vertex_names), std::move(color_names));
}

ColoredGraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_graph(in);
}

void write_graph(std::ostream& out, const ColoredGraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!valid_name(g.vertex_name(v))) throw GraphError("vertex name '" + g.vertex_name(v) + "' is not writable");
  }
  for (ColorId c = 0; c < g.color_count(); ++c) {
    if (!valid_name(g.color_name(c))) throw GraphError("color name '" + g.color_name(c) + "' is not writable");
  }
  out << "p cgraph " << g.vertex_count() << ' ' << g.color_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "v " << g.vertex_name(v) << ' ' << g.color_name(g.color(v)) << '\n';
  }
  for (const auto& e : g.edges()) {
    out << "e " << g.vertex_name(e.first) << ' ' << g.vertex_name(e.second) << '\n';
  }
}

std::string format_graph(const ColoredGraph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

}  // namespace rbmg
