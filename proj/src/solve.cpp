#include "rbmg/solve.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <thread>

#include "rbmg/errors.hpp"
#include "rbmg/recognize.hpp"

namespace rbmg {

std::string_view to_string(Target target) {
  switch (target) {
    case Target::bicluster: return "bicluster";
    case Target::two_rbmg: return "2rbmg";
    case Target::hc_cograph: return "hc-cograph";
    case Target::nrbmg: return "nrbmg";
  }
  return "?";
}

std::optional<Target> parse_target(std::string_view name) {
  for (auto t : {Target::bicluster, Target::two_rbmg, Target::hc_cograph, Target::nrbmg}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::solved: return "solved";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_proper(const ColoredGraph& g) {
  if (!g.is_properly_colored()) throw ImproperColoringError("input graph is not properly colored");
}

void require_bipartite_coloring(const ColoredGraph& g) {
  require_proper(g);
  if (g.color_count() > 2) {
    throw ImproperColoringError("bicluster targets need a proper coloring with at most two colors, got " +
                                std::to_string(g.color_count()));
  }
}

SolveResult infeasible(EditMode mode) { return {SolveStatus::infeasible, 0, EditSet(mode, {}), {}}; }

// Search state for one connected component. Vertices are local ids; the
// graph stays bipartite with respect to `side` because only cross pairs are
// ever toggled.
class BiclusterSearch {
 public:
  BiclusterSearch(const ColoredGraph& g, const std::vector<Vertex>& component, EditMode mode)
      : n_(component.size()), words_((n_ + 63) / 64), mode_(mode), original_(component),
        rows_(n_ * words_, 0), fixed_(n_ * n_, 0) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (g.has_edge(component[i], component[j])) set_bit(i, j);
      }
    }
  }

  // DFS with at most k further edits; on success the edits are left in path().
  bool search(std::size_t k) {
    ++nodes_;
    const auto p4 = least_p4();
    if (!p4) return true;
    if (k == 0) return false;
    const auto [a, b, c, d] = *p4;
    std::array<std::pair<std::size_t, std::size_t>, 4> branches{{{a, b}, {b, c}, {c, d}, {a, d}}};
    const std::size_t count = mode_ == EditMode::editing ? 4 : 3;
    for (std::size_t i = 0; i < count; ++i) {
      auto [x, y] = branches[i];
      if (is_fixed(x, y)) continue;
      apply(x, y);
      if (search(k - 1)) return true;
      undo(x, y);
    }
    return false;
  }

  // Root branches as separate searches, for parallel exploration.
  std::vector<std::pair<std::size_t, std::size_t>> root_branches() {
    const auto p4 = least_p4();
    if (!p4) return {};
    const auto [a, b, c, d] = *p4;
    std::vector<std::pair<std::size_t, std::size_t>> out{{a, b}, {b, c}, {c, d}};
    if (mode_ == EditMode::editing) out.emplace_back(a, d);
    return out;
  }

  void apply(std::size_t x, std::size_t y) {
    flip(x, y);
    fixed_[x * n_ + y] = fixed_[y * n_ + x] = 1;
    path_.push_back(VertexPair::of(original_[x], original_[y]));
  }

  void undo(std::size_t x, std::size_t y) {
    path_.pop_back();
    fixed_[x * n_ + y] = fixed_[y * n_ + x] = 0;
    flip(x, y);
  }

  bool has_p4() const { return least_p4().has_value(); }
  const std::vector<VertexPair>& path() const noexcept { return path_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  std::size_t vertex_count() const noexcept { return n_; }

 private:
  bool bit(std::size_t i, std::size_t j) const { return (rows_[i * words_ + j / 64] >> (j % 64)) & 1U; }
  void set_bit(std::size_t i, std::size_t j) { rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  void flip(std::size_t x, std::size_t y) {
    rows_[x * words_ + y / 64] ^= std::uint64_t{1} << (y % 64);
    rows_[y * words_ + x / 64] ^= std::uint64_t{1} << (x % 64);
  }
  bool is_fixed(std::size_t x, std::size_t y) const { return fixed_[x * n_ + y] != 0; }

  // Lexicographically least (a, b, c, d) with a-b-c-d an induced P4. In a
  // bipartite graph a, c share a side and b, d share the other, so only
  // a-d needs checking besides the path edges.
  std::optional<std::array<std::size_t, 4>> least_p4() const {
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (!bit(a, b)) continue;
        for (std::size_t c = 0; c < n_; ++c) {
          if (c == a || !bit(b, c)) continue;
          for (std::size_t w = 0; w < words_; ++w) {
            const std::uint64_t cand = rows_[c * words_ + w] & ~rows_[a * words_ + w];
            if (cand != 0) {
              const std::size_t d = w * 64 + static_cast<std::size_t>(std::countr_zero(cand));
              return std::array<std::size_t, 4>{a, b, c, d};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  std::size_t n_;
  std::size_t words_;
  EditMode mode_;
  std::vector<Vertex> original_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::uint8_t> fixed_;
  std::vector<VertexPair> path_;
  std::uint64_t nodes_ = 0;
};

struct ComponentOutcome {
  bool found = false;
  std::vector<VertexPair> edits;
  std::uint64_t nodes = 0;
};

// Iterative deepening for one component, k = 1 .. budget.
ComponentOutcome solve_component(const BiclusterSearch& start, std::size_t budget, unsigned threads) {
  ComponentOutcome out;
  for (std::size_t k = 1; k <= budget; ++k) {
    if (threads <= 1) {
      BiclusterSearch s = start;
      const bool ok = s.search(k);
      out.nodes += s.nodes();
      if (ok) {
        out.found = true;
        out.edits = s.path();
        return out;
      }
      continue;
    }
    // Root branches in parallel; the first successful branch in branch order wins.
    BiclusterSearch root = start;
    const auto branches = root.root_branches();
    ++out.nodes;
    std::vector<std::optional<std::vector<VertexPair>>> found(branches.size());
    std::vector<std::uint64_t> nodes(branches.size(), 0);
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(branches.size()));
    for (unsigned t = 0; t < workers; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < branches.size(); i = next++) {
          BiclusterSearch s = start;
          s.apply(branches[i].first, branches[i].second);
          if (s.search(k - 1)) found[i] = s.path();
          nodes[i] = s.nodes();
        }
      });
    }
    pool.clear();
    for (auto n : nodes) out.nodes += n;
    for (auto& f : found) {
      if (f) {
        out.found = true;
        out.edits = std::move(*f);
        return out;
      }
    }
  }
  return out;
}

}  // namespace

SolveResult bicluster_completion(const ColoredGraph& g) {
  const auto start = Clock::now();
  require_bipartite_coloring(g);
  SolveResult result;
  std::vector<VertexPair> added;
  for (const auto& comp : connected_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        if (g.color(comp[i]) != g.color(comp[j]) && !g.has_edge(comp[i], comp[j])) {
          added.push_back(VertexPair::of(comp[i], comp[j]));
        }
      }
    }
  }
  result.optimal_size = added.size();
  result.witness = EditSet(EditMode::completion, std::move(added));
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

SolveResult bicluster_edit_fpt(const ColoredGraph& g, const SolveConfig& config) {
  const auto start = Clock::now();
  require_bipartite_coloring(g);
  if (config.mode == EditMode::completion) throw GraphError("completion is handled by bicluster_completion");

  SolveResult result;
  std::size_t remaining = config.k_max.value_or(std::size_t(-1));
  std::vector<VertexPair> witness;
  for (const auto& comp : connected_components(g)) {
    BiclusterSearch search(g, comp, config.mode);
    ++result.stats.nodes_expanded;
    if (!search.has_p4()) {
      ++result.stats.reductions_applied;
      continue;
    }
    const auto outcome = solve_component(search, remaining, std::max(1U, config.threads));
    result.stats.nodes_expanded += outcome.nodes;
    if (!outcome.found) {
      result.status = SolveStatus::budget_exhausted;
      result.witness = EditSet(config.mode, {});
      result.stats.wall_seconds = seconds_since(start);
      return result;
    }
    remaining -= outcome.edits.size();
    witness.insert(witness.end(), outcome.edits.begin(), outcome.edits.end());
  }
  result.optimal_size = witness.size();
  result.witness = EditSet(config.mode, std::move(witness));
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

SolveResult two_rbmg_modify(const ColoredGraph& g, const SolveConfig& config) {
  require_proper(g);
  if (g.color_count() != 2) {
    throw ImproperColoringError("2-RBMG modification needs exactly two colors, got " +
                                std::to_string(g.color_count()));
  }
  if (config.mode == EditMode::completion) throw GraphError("completion is only defined for the bicluster target");
  if (g.edge_count() > 0) return bicluster_edit_fpt(g, config);
  if (config.mode == EditMode::deletion) return infeasible(config.mode);
  auto result = edgeless_edit(g);
  if (config.k_max && result.optimal_size > *config.k_max) {
    return {SolveStatus::budget_exhausted, 0, EditSet(config.mode, {}), result.stats};
  }
  return result;
}

HubReduction hub_reduce(const ColoredGraph& g, Target /*target*/) {
  // Same rule for both targets: an optimal set for G - x is optimal for G and
  // never touches x.
  require_proper(g);
  HubReduction out{g, {}, {}};
  out.kept.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.kept[v] = v;
  while (out.reduced.vertex_count() > 1) {
    const auto hubs = hub_vertices(out.reduced);
    if (hubs.empty()) break;
    const Vertex x = hubs.front();
    out.stripped.push_back(out.kept[x]);
    out.kept.erase(out.kept.begin() + x);
    out.reduced = remove_vertex(out.reduced, x);
  }
  return out;
}

SolveResult edgeless_edit(const ColoredGraph& g) {
  const auto start = Clock::now();
  if (g.edge_count() != 0) throw GraphError("edgeless_edit needs an edge-less input");
  std::vector<Vertex> representatives;
  for (const auto& cls : g.color_classes()) representatives.push_back(cls.front());
  std::sort(representatives.begin(), representatives.end());
  std::vector<VertexPair> added;
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < representatives.size(); ++j) {
      added.push_back(VertexPair::of(representatives[i], representatives[j]));
    }
  }
  SolveResult result;
  result.optimal_size = added.size();
  result.witness = EditSet(EditMode::editing, std::move(added));
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

namespace {

// Lexicographically first subset of `candidates` of size k whose application
// makes the graph a member; indices into `candidates`.
std::optional<std::vector<std::size_t>> first_member_subset(const ColoredGraph& h,
                                                            const std::vector<VertexPair>& candidates, std::size_t k,
                                                            const SolveConfig& config, std::atomic<std::uint64_t>& tests) {
  const std::size_t m = candidates.size();
  if (k > m) return std::nullopt;

  auto member = [&](const std::vector<std::size_t>& idx) {
    std::vector<VertexPair> pairs;
    for (std::size_t i : idx) pairs.push_back(candidates[i]);
    const auto modified = apply_edits(h, EditSet(config.mode, std::move(pairs)));
    ++tests;
    return config.target == Target::nrbmg ? is_nrbmg_structural(modified, config.oracle_cap).verdict
                                          : is_hc_cograph(modified).verdict;
  };
  if (k == 0) {
    if (member({})) return std::vector<std::size_t>{};
    return std::nullopt;
  }

  // Scans all combinations whose first index is `head`, in lexicographic order.
  auto scan_block = [&](std::size_t head) -> std::optional<std::vector<std::size_t>> {
    std::vector<std::size_t> idx(k);
    idx[0] = head;
    for (std::size_t i = 1; i < k; ++i) idx[i] = head + i;
    if (idx[k - 1] >= m) return std::nullopt;
    for (;;) {
      if (member(idx)) return idx;
      std::size_t i = k - 1;
      while (i > 0 && idx[i] == m - k + i) --i;
      if (i == 0) return std::nullopt;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  const std::size_t heads = m - k + 1;
  const unsigned threads = std::max(1U, config.threads);
  if (threads == 1) {
    for (std::size_t head = 0; head < heads; ++head) {
      if (auto found = scan_block(head)) return found;
    }
    return std::nullopt;
  }
  // Blocks are claimed in order; a block is skipped once a smaller block has
  // succeeded, so the reported subset is the same as in the sequential scan.
  std::vector<std::optional<std::vector<std::size_t>>> results(heads);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{heads};
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t head = next++; head < heads; head = next++) {
          if (head > best.load()) break;
          results[head] = scan_block(head);
          if (results[head]) {
            std::size_t cur = best.load();
            while (head < cur && !best.compare_exchange_weak(cur, head)) {
            }
          }
        }
      });
    }
  }
  if (best.load() < heads) return results[best.load()];
  return std::nullopt;
}

SolveResult solve_reduced(const ColoredGraph& h, const SolveConfig& config) {
  if (config.shortcuts && h.vertex_count() > 0) {
    if (h.edge_count() == 0 && h.color_count() >= 2) {
      if (config.mode == EditMode::deletion) return infeasible(config.mode);
      auto result = edgeless_edit(h);
      if (config.k_max && result.optimal_size > *config.k_max) {
        return {SolveStatus::budget_exhausted, 0, EditSet(config.mode, {}), result.stats};
      }
      return result;
    }
    if (h.color_count() == 2 && config.target == Target::nrbmg) return two_rbmg_modify(h, config);
  }
  if (config.target == Target::nrbmg && h.vertex_count() > config.oracle_cap) {
    throw InstanceTooLargeError("instance too large: " + std::to_string(h.vertex_count()) +
                                " vertices after hub reduction exceed the oracle cap of " +
                                std::to_string(config.oracle_cap));
  }

  const auto candidates = config.mode == EditMode::deletion
                              ? std::vector<VertexPair>(h.edges().begin(), h.edges().end())
                              : cross_pairs(h);
  const std::size_t budget = config.k_max.value_or(kDefaultOracleBudget);
  std::atomic<std::uint64_t> tests{0};
  SolveResult result;
  for (std::size_t k = 0; k <= std::min(budget, candidates.size()); ++k) {
    if (auto idx = first_member_subset(h, candidates, k, config, tests)) {
      std::vector<VertexPair> pairs;
      for (std::size_t i : *idx) pairs.push_back(candidates[i]);
      result.optimal_size = pairs.size();
      result.witness = EditSet(config.mode, std::move(pairs));
      result.stats.nodes_expanded = tests.load();
      return result;
    }
  }
  result.status = budget >= candidates.size() ? SolveStatus::infeasible : SolveStatus::budget_exhausted;
  result.witness = EditSet(config.mode, {});
  result.stats.nodes_expanded = tests.load();
  return result;
}

}  // namespace

SolveResult exact_modify_oracle(const ColoredGraph& g, const SolveConfig& config) {
  const auto start = Clock::now();
  if (config.target != Target::nrbmg && config.target != Target::hc_cograph) {
    throw GraphError("exact_modify_oracle handles the nrbmg and hc-cograph targets only");
  }
  if (config.mode == EditMode::completion) throw GraphError("completion is only defined for the bicluster target");
  require_proper(g);
  if (g.vertex_count() == 0) throw GraphError("graph has no vertices");

  HubReduction reduction{g, {}, {}};
  if (config.hub_reduction) {
    reduction = hub_reduce(g, config.target);
  } else {
    reduction.kept.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) reduction.kept[v] = v;
  }

  SolveResult result = solve_reduced(reduction.reduced, config);
  // Lift the witness back to the original ids; stripped hubs carry no edits.
  std::vector<VertexPair> lifted;
  for (const auto& p : result.witness.pairs()) {
    lifted.push_back(VertexPair::of(reduction.kept[p.first], reduction.kept[p.second]));
  }
  result.witness = EditSet(config.mode, std::move(lifted));
  result.stats.reductions_applied += reduction.stripped.size();
  result.stats.wall_seconds = seconds_since(start);
  return result;
}

SolveResult solve(const ColoredGraph& g, const SolveConfig& config) {
  switch (config.target) {
    case Target::bicluster:
      return config.mode == EditMode::completion ? bicluster_completion(g) : bicluster_edit_fpt(g, config);
    case Target::two_rbmg:
      return two_rbmg_modify(g, config);
    case Target::hc_cograph:
    case Target::nrbmg:
      return exact_modify_oracle(g, config);
  }
  throw GraphError("unknown target");
}

}  // namespace rbmg
