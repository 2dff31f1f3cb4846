#include "rbmg/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "rbmg/errors.hpp"
#include "rbmg/tree_shapes.hpp"

namespace rbmg {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

double Rng::uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

std::vector<ColorId> surjective_colors(Rng& rng, std::size_t count, std::size_t colors) {
  if (colors == 0 && count > 0) throw GraphError("at least one color is needed");
  if (colors > count) {
    throw GraphError("cannot use " + std::to_string(colors) + " colors on " + std::to_string(count) + " vertices");
  }
  std::vector<ColorId> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = static_cast<ColorId>(i < colors ? i : rng.below(colors));
  }
  rng.shuffle(out);
  return out;
}

// Inserts leaves one at a time, each above a uniformly chosen node or below a
// uniformly chosen inner node.
TreeShape grow_shape(Rng& rng, std::size_t leaves) {
  TreeShape shape;
  shape.parent.push_back(kNoNode);
  shape.leaf_node.push_back(0);
  std::vector<bool> inner{false};
  for (std::size_t leaf = 1; leaf < leaves; ++leaf) {
    std::vector<NodeId> inner_nodes;
    for (NodeId v = 0; v < inner.size(); ++v) {
      if (inner[v]) inner_nodes.push_back(v);
    }
    const std::size_t nodes = shape.parent.size();
    const std::size_t pick = rng.below(nodes + inner_nodes.size());
    const auto leaf_id = static_cast<NodeId>(nodes);
    if (pick < nodes) {
      const auto v = static_cast<NodeId>(pick);
      const auto w = static_cast<NodeId>(nodes + 1);
      shape.parent.push_back(w);                // new leaf
      shape.parent.push_back(shape.parent[v]);  // new inner node w
      shape.parent[v] = w;
      inner.push_back(false);
      inner.push_back(true);
    } else {
      shape.parent.push_back(inner_nodes[pick - nodes]);
      inner.push_back(false);
    }
    shape.leaf_node.push_back(leaf_id);
  }
  return shape;
}

}  // namespace

PhylogeneticTree random_tree(const GenSpec& spec) {
  if (spec.vertices == 0) throw GraphError("a tree needs at least one leaf");
  Rng rng(spec.seed);
  const auto colors = surjective_colors(rng, spec.vertices, spec.colors);
  const LeafLabels labels = LeafLabels::of(colors);
  PhylogeneticTree tree = spec.vertices <= kMaxCachedShapeLeaves
                              ? [&] {
                                  const auto& table = shape_table(spec.vertices);
                                  return tree_from_shape(table.shape(rng.below(table.size())), labels);
                                }()
                              : tree_from_shape(grow_shape(rng, spec.vertices), labels);
  if (!spec.speciation_probability || spec.vertices == 1) return tree;

  std::vector<PhylogeneticTree::Node> nodes;
  for (NodeId v = 0; v < tree.node_count(); ++v) {
    nodes.push_back(tree.node(v));
    if (!nodes.back().leaf) {
      nodes.back().event = rng.bernoulli(*spec.speciation_probability) ? Event::speciation : Event::duplication;
    }
  }
  return PhylogeneticTree(std::move(nodes), tree.root(), labels);
}

ColoredGraph random_colored_graph(const GenSpec& spec) {
  if (spec.vertices == 0) throw GraphError("a graph needs at least one vertex");
  Rng rng(spec.seed);
  const auto colors = surjective_colors(rng, spec.vertices, spec.colors);
  std::vector<VertexPair> edges;
  for (Vertex a = 0; a < spec.vertices; ++a) {
    for (Vertex b = a + 1; b < spec.vertices; ++b) {
      if (colors[a] != colors[b] && rng.bernoulli(spec.edge_probability)) edges.push_back(VertexPair::of(a, b));
    }
  }
  return ColoredGraph(colors, std::move(edges));
}

std::vector<VertexPair> perturbation_pairs(const ColoredGraph& g, std::size_t flip_count, std::uint64_t seed) {
  auto candidates = cross_pairs(g);
  if (flip_count > candidates.size()) {
    throw GraphError("cannot flip " + std::to_string(flip_count) + " pairs: only " +
                     std::to_string(candidates.size()) + " cross pairs exist");
  }
  Rng rng(seed);
  // Partial Fisher-Yates: the first flip_count slots are a uniform sample.
  for (std::size_t i = 0; i < flip_count; ++i) {
    std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
  }
  candidates.resize(flip_count);
  std::sort(candidates.begin(), candidates.end());
  return candidates;
}

ColoredGraph perturb(const ColoredGraph& g, std::size_t flip_count, std::uint64_t seed) {
  return apply_edits(g, EditSet(EditMode::editing, perturbation_pairs(g, flip_count, seed)));
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

template <typename T>
T parse_number(const std::string& value, std::size_t line) {
  T out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" + value + "'");
  }
  return out;
}

bool parse_bool(const std::string& value, std::size_t line) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw ParseError(line, "expected true or false, got '" + value + "'");
}

EditMode parse_mode(const std::string& value, std::size_t line) {
  if (value == "edit" || value == "editing") return EditMode::editing;
  if (value == "delete" || value == "deletion") return EditMode::deletion;
  throw ParseError(line, "mode must be edit or delete, got '" + value + "'");
}

}  // namespace

BenchSuite parse_bench_suite(std::istream& in) {
  BenchSuite suite;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (const auto hash = text.find('#'); hash != std::string::npos) text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError(line, "expected 'key = value'");
    const std::string key = trim(std::string_view(text).substr(0, eq));
    std::string value = trim(std::string_view(text).substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);

    if (key == "seed") {
      suite.seed = parse_number<std::uint64_t>(value, line);
    } else if (key == "trials") {
      suite.trials = parse_number<std::size_t>(value, line);
    } else if (key == "leaves" || key == "vertices") {
      suite.leaves = parse_number<std::size_t>(value, line);
    } else if (key == "colors") {
      suite.colors = parse_number<std::size_t>(value, line);
    } else if (key == "flips") {
      suite.flips = parse_number<std::size_t>(value, line);
    } else if (key == "target") {
      suite.target = parse_target(value);
      if (!suite.target) throw ParseError(line, "unknown target '" + value + "'");
    } else if (key == "mode") {
      suite.mode = parse_mode(value, line);
    } else if (key == "k_max") {
      suite.k_max = parse_number<std::size_t>(value, line);
    } else if (key == "oracle_cap") {
      suite.oracle_cap = parse_number<std::size_t>(value, line);
    } else if (key == "threads") {
      suite.threads = parse_number<unsigned>(value, line);
    } else if (key == "jobs") {
      suite.jobs = parse_number<unsigned>(value, line);
    } else if (key == "with_timing") {
      suite.with_timing = parse_bool(value, line);
    } else {
      throw ParseError(line, "unknown key '" + key + "'");
    }
  }
  return suite;
}

namespace {

BenchRow run_trial(const BenchSuite& suite, std::size_t trial, std::uint64_t seed) {
  BenchRow row;
  row.trial = trial;
  row.seed = seed;
  row.vertices = suite.leaves;
  row.colors = suite.colors;
  row.planted_flips = suite.flips;
  try {
    Rng rng(seed);
    GenSpec spec;
    spec.vertices = suite.leaves;
    spec.colors = suite.colors;
    spec.seed = rng.next();
    const auto planted = best_match_graph_symmetric(random_tree(spec));
    const auto perturbed = perturb(planted, suite.flips, rng.next());

    SolveConfig config;
    config.target = suite.target.value_or(suite.colors == 2 ? Target::two_rbmg : Target::nrbmg);
    config.mode = suite.mode;
    config.k_max = suite.k_max;
    config.oracle_cap = suite.oracle_cap;
    config.threads = suite.threads;
    const auto result = solve(perturbed, config);
    row.status = std::string(to_string(result.status));
    row.recovered_size = result.optimal_size;
    row.nodes_expanded = result.stats.nodes_expanded;
    row.reductions_applied = result.stats.reductions_applied;
    row.wall_seconds = result.stats.wall_seconds;
    if (result.status == SolveStatus::solved) {
      row.exact_recovery = same_colored_structure(apply_edits(perturbed, result.witness), planted);
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  return row;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out + '"';
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchSuite& suite) {
  Rng seeds(suite.seed);
  std::vector<std::uint64_t> row_seeds(suite.trials);
  for (auto& s : row_seeds) s = seeds.next();

  std::vector<BenchRow> rows(suite.trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < suite.trials; i = next++) rows[i] = run_trial(suite, i, row_seeds[i]);
  };
  const unsigned jobs = std::max(1U, suite.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  return rows;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing) {
  out << "trial,seed,n,colors,planted_flips,status,recovered_size,exact_recovery,nodes_expanded,reductions_applied";
  if (with_timing) out << ",wall_seconds";
  out << ",error\n";
  for (const auto& r : rows) {
    out << r.trial << ',' << r.seed << ',' << r.vertices << ',' << r.colors << ',' << r.planted_flips << ','
        << r.status << ',' << r.recovered_size << ',' << (r.exact_recovery ? 1 : 0) << ',' << r.nodes_expanded << ','
        << r.reductions_applied;
    if (with_timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", r.wall_seconds);
      out << ',' << buf;
    }
    out << ',' << csv_field(r.error) << '\n';
  }
}

}  // namespace rbmg
