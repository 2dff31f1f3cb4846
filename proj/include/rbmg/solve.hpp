#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "rbmg/graph.hpp"
#include "rbmg/tree.hpp"

namespace rbmg {

enum class Target { bicluster, two_rbmg, hc_cograph, nrbmg };

std::string_view to_string(Target target);
std::optional<Target> parse_target(std::string_view name);

// Budget applied to the subset search of exact_modify_oracle when none is given.
inline constexpr std::size_t kDefaultOracleBudget = 6;

struct SolveConfig {
  Target target = Target::bicluster;
  EditMode mode = EditMode::editing;
  // Largest admissible |F|. Unset: unlimited, except kDefaultOracleBudget for
  // the exhaustive subset search.
  std::optional<std::size_t> k_max;
  std::size_t oracle_cap = kDefaultEnumerationCap;
  bool deterministic = true;
  unsigned threads = 1;
  // Strip hub vertices before searching (exact_modify_oracle).
  bool hub_reduction = true;
  // Hand 2-colored and edge-less reduced instances to the closed-form routes
  // (exact_modify_oracle).
  bool shortcuts = true;
};

enum class SolveStatus { solved, infeasible, budget_exhausted };

std::string_view to_string(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t reductions_applied = 0;
  double wall_seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::solved;
  std::size_t optimal_size = 0;
  EditSet witness;
  SolveStats stats;
};

// Adds the missing cross pairs inside every component. Requires a proper
// coloring with at most two colors.
SolveResult bicluster_completion(const ColoredGraph& g);

// Bounded search tree for bicluster deletion (branches on the three edges of
// the least induced P4) or editing (adds the end-pair as a fourth branch),
// with iterative deepening on k per connected component. Components that are
// already bicliques are dropped first.
SolveResult bicluster_edit_fpt(const ColoredGraph& g, const SolveConfig& config);

// 2-RBMG deletion/editing: bicluster search when the input has an edge;
// a single edge for edge-less editing; edge-less deletion is infeasible.
SolveResult two_rbmg_modify(const ColoredGraph& g, const SolveConfig& config);

struct HubReduction {
  ColoredGraph reduced;
  // Original ids of the removed hubs, in removal order.
  std::vector<Vertex> stripped;
  // kept[i] is the original id of reduced vertex i.
  std::vector<Vertex> kept;
};

// Repeatedly removes the smallest hub vertex until none is left or a single
// vertex remains. Requires a proper coloring.
HubReduction hub_reduce(const ColoredGraph& g, Target target);

// Rainbow clique on the first vertex of each color; |F| = n(n-1)/2.
SolveResult edgeless_edit(const ColoredGraph& g);

// Exact n-RBMG / n-hc-cograph deletion or editing: hub reduction, closed
// forms for 2-colored and edge-less instances, otherwise iterative deepening
// over subsets of candidate pairs in lexicographic order.
SolveResult exact_modify_oracle(const ColoredGraph& g, const SolveConfig& config);

// Dispatches on config.target and config.mode.
SolveResult solve(const ColoredGraph& g, const SolveConfig& config);

}  // namespace rbmg
