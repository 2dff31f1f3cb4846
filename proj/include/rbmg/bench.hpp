#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rbmg/graph.hpp"
#include "rbmg/solve.hpp"
#include "rbmg/tree.hpp"

namespace rbmg {

// MT19937-64 (the engine's output sequence is fixed by the C++ standard) with
// bounded draws done here rather than through std distributions, whose
// algorithms differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [0, 1) with 53 random bits.
  double uniform01();
  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct GenSpec {
  enum class Kind { random_tree, random_colored_graph, planted_perturbation };
  Kind kind = Kind::random_tree;
  std::size_t vertices = 4;  // leaves for trees
  std::size_t colors = 2;
  double edge_probability = 0.5;
  std::size_t flip_count = 0;
  // Probability of a speciation label per inner node; unset leaves the tree unlabelled.
  std::optional<double> speciation_probability;
  std::uint64_t seed = 0;
};

// Uniform over all trees when the leaf count is at most kMaxCachedShapeLeaves,
// otherwise grown by inserting leaves at uniformly chosen positions. Colors are
// surjective onto spec.colors.
PhylogeneticTree random_tree(const GenSpec& spec);

// Properly colored: surjective random coloring, then each cross pair becomes
// an edge with spec.edge_probability.
ColoredGraph random_colored_graph(const GenSpec& spec);

// Toggles flip_count distinct cross pairs drawn without replacement.
ColoredGraph perturb(const ColoredGraph& g, std::size_t flip_count, std::uint64_t seed);

// The pairs perturb would toggle, sorted.
std::vector<VertexPair> perturbation_pairs(const ColoredGraph& g, std::size_t flip_count, std::uint64_t seed);

struct BenchSuite {
  std::uint64_t seed = 1;
  std::size_t trials = 10;
  std::size_t leaves = 12;
  std::size_t colors = 2;
  std::size_t flips = 2;
  // Unset: 2rbmg for two colors, nrbmg otherwise.
  std::optional<Target> target;
  EditMode mode = EditMode::editing;
  std::optional<std::size_t> k_max;
  std::size_t oracle_cap = kDefaultEnumerationCap;
  unsigned threads = 1;  // per solve
  unsigned jobs = 1;     // trials in flight
  bool with_timing = false;
};

// `key = value` lines (a TOML subset: integers, booleans, bare or quoted
// strings, '#' comments). Unknown keys are rejected.
BenchSuite parse_bench_suite(std::istream& in);

struct BenchRow {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t vertices = 0;
  std::size_t colors = 0;
  std::size_t planted_flips = 0;
  std::string status;  // solve status, or "error"
  std::size_t recovered_size = 0;
  bool exact_recovery = false;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t reductions_applied = 0;
  double wall_seconds = 0.0;
  std::string error;
};

// Per trial: random tree -> RBMG -> perturb -> solve. Row seeds are drawn in
// order from the suite seed; solver errors are recorded in the row.
std::vector<BenchRow> run_benchmark(const BenchSuite& suite);

// Fixed header, LF line ends, wall time (6 decimals) only with with_timing.
void write_bench_csv(std::ostream& out, const std::vector<BenchRow>& rows, bool with_timing);

}  // namespace rbmg
