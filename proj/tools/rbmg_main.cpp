#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "rbmg/bench.hpp"
#include "rbmg/errors.hpp"
#include "rbmg/graph_io.hpp"
#include "rbmg/recognize.hpp"
#include "rbmg/solve.hpp"
#include "rbmg/tree.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

enum Exit : int { kYes = 0, kNo = 1, kUsage = 2, kInfeasible = 3, kBudget = 4 };

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rbmg::Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rbmg::Error("cannot write '" + path + "'");
  out << text;
}

json names(const rbmg::ColoredGraph& g, const std::vector<rbmg::Vertex>& vs) {
  json out = json::array();
  for (auto v : vs) out.push_back(g.vertex_name(v));
  return out;
}

json certificate_json(const rbmg::ColoredGraph& g, const rbmg::Certificate& certificate) {
  return std::visit(
      [&](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, rbmg::Violation>) {
          return {{"type", "violation"},
                  {"kind", std::string(to_string(cert.kind))},
                  {"vertices", names(g, cert.vertices)},
                  {"detail", cert.detail}};
        } else if constexpr (std::is_same_v<T, rbmg::Cotree>) {
          json nodes = json::array();
          for (const auto& n : cert.nodes) {
            const char* kind = n.kind == rbmg::Cotree::Kind::leaf   ? "leaf"
                               : n.kind == rbmg::Cotree::Kind::join ? "join"
                                                                    : "union";
            nodes.push_back({{"kind", kind}, {"vertices", names(g, n.vertices)}, {"children", n.children}});
          }
          return {{"type", "cotree"}, {"nodes", nodes}};
        } else if constexpr (std::is_same_v<T, rbmg::BicliqueCover>) {
          json comps = json::array();
          for (const auto& b : cert.components) {
            comps.push_back({{"side_a", names(g, b.side_a)}, {"side_b", names(g, b.side_b)}});
          }
          return {{"type", "bicliques"}, {"components", comps}};
        } else if constexpr (std::is_same_v<T, rbmg::PhylogeneticTree>) {
          return {{"type", "tree"}, {"newick", rbmg::format_newick(cert)}};
        } else {
          json comps = json::array();
          for (std::size_t i = 0; i < cert.components.size(); ++i) {
            comps.push_back({{"vertices", names(g, cert.components[i])}, {"newick", rbmg::format_newick(cert.trees[i])}});
          }
          return {{"type", "component-trees"}, {"components", comps}};
        }
      },
      certificate);
}

struct RecognizeOptions {
  std::string input = "-";
  std::string cls;
  bool certificate = false;
  bool quiet = false;
  bool json = false;
  std::size_t oracle_cap = rbmg::kDefaultEnumerationCap;
};

int run_recognize(const RecognizeOptions& opt) {
  const auto cls = rbmg::parse_graph_class(opt.cls);
  if (!cls) throw CLI::ValidationError("--class", "unknown class '" + opt.cls + "'");
  const auto g = rbmg::parse_graph(read_input(opt.input));
  const auto report = rbmg::recognize(g, *cls, opt.oracle_cap);
  if (!opt.quiet) {
    if (opt.json) {
      json out{{"class", std::string(to_string(report.graph_class))}, {"verdict", report.verdict}};
      if (opt.certificate) out["certificate"] = certificate_json(g, report.certificate);
      std::cout << out.dump(2) << '\n';
    } else {
      std::cout << "class " << to_string(report.graph_class) << '\n';
      std::cout << "verdict " << (report.verdict ? "yes" : "no") << '\n';
      if (opt.certificate) std::cout << rbmg::format_certificate(g, report.certificate);
    }
  }
  return report.verdict ? kYes : kNo;
}

struct SolveOptions {
  std::string input = "-";
  std::string target;
  std::string mode = "edit";
  std::optional<std::size_t> k_max;
  std::size_t oracle_cap = rbmg::kDefaultEnumerationCap;
  unsigned threads = 1;
  bool json = false;
};

rbmg::EditMode parse_mode(const std::string& mode) {
  if (mode == "delete") return rbmg::EditMode::deletion;
  if (mode == "edit") return rbmg::EditMode::editing;
  if (mode == "complete") return rbmg::EditMode::completion;
  throw CLI::ValidationError("--mode", "expected delete, edit or complete");
}

int run_solve(const SolveOptions& opt) {
  const auto target = rbmg::parse_target(opt.target);
  if (!target) throw CLI::ValidationError("--target", "unknown target '" + opt.target + "'");
  rbmg::SolveConfig config;
  config.target = *target;
  config.mode = parse_mode(opt.mode);
  config.k_max = opt.k_max;
  config.oracle_cap = opt.oracle_cap;
  config.threads = opt.threads;
  if (config.mode == rbmg::EditMode::completion && config.target != rbmg::Target::bicluster) {
    throw CLI::ValidationError("--mode", "complete is only available for --target bicluster");
  }
  const auto g = rbmg::parse_graph(read_input(opt.input));
  const auto result = rbmg::solve(g, config);
  const bool solved = result.status == rbmg::SolveStatus::solved;

  if (opt.json) {
    json witness = json::array();
    for (const auto& p : result.witness.pairs()) witness.push_back({g.vertex_name(p.first), g.vertex_name(p.second)});
    json out{{"status", std::string(to_string(result.status))},
             {"size", solved ? json(result.optimal_size) : json(nullptr)},
             {"mode", std::string(to_string(result.witness.mode()))},
             {"witness", witness},
             {"stats",
              {{"nodes_expanded", result.stats.nodes_expanded},
               {"reductions_applied", result.stats.reductions_applied},
               {"wall_seconds", result.stats.wall_seconds}}}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "status " << to_string(result.status) << '\n';
    if (solved) std::cout << "size " << result.optimal_size << '\n';
    for (const auto& p : result.witness.pairs()) {
      std::cout << "pair " << g.vertex_name(p.first) << ' ' << g.vertex_name(p.second) << '\n';
    }
    char wall[32];
    std::snprintf(wall, sizeof wall, "%.6f", result.stats.wall_seconds);
    std::cout << "stats nodes_expanded " << result.stats.nodes_expanded << '\n'
              << "stats reductions_applied " << result.stats.reductions_applied << '\n'
              << "stats wall_seconds " << wall << '\n';
  }
  switch (result.status) {
    case rbmg::SolveStatus::solved: return kYes;
    case rbmg::SolveStatus::infeasible: return kInfeasible;
    case rbmg::SolveStatus::budget_exhausted: return kBudget;
  }
  return kUsage;
}

struct TreeToGraphOptions {
  std::string input = "-";
  std::string relation = "rbmg";
  std::size_t index = 0;
  std::string out;
};

int run_tree_to_graph(const TreeToGraphOptions& opt) {
  std::istringstream in(read_input(opt.input));
  const auto trees = rbmg::parse_tree_file(in);
  if (opt.index >= trees.size()) {
    throw rbmg::Error("tree index " + std::to_string(opt.index) + " out of range (" + std::to_string(trees.size()) +
                      " trees)");
  }
  const auto& t = trees[opt.index];
  const auto g = opt.relation == "orthology" ? rbmg::orthology_graph(t) : rbmg::best_match_graph_symmetric(t);
  write_output(opt.out, rbmg::format_graph(g));
  return kYes;
}

struct GenOptions {
  std::uint64_t seed = 0;
  std::size_t size = 6;
  std::size_t colors = 2;
  std::optional<double> speciation;
  double edge_probability = 0.5;
  bool planted = false;
  std::size_t flips = 0;
  std::string out;
};

int run_gen_tree(const GenOptions& opt) {
  rbmg::GenSpec spec;
  spec.kind = rbmg::GenSpec::Kind::random_tree;
  spec.vertices = opt.size;
  spec.colors = opt.colors;
  spec.speciation_probability = opt.speciation;
  spec.seed = opt.seed;
  write_output(opt.out, rbmg::format_newick(rbmg::random_tree(spec)) + "\n");
  return kYes;
}

int run_gen_graph(const GenOptions& opt) {
  rbmg::GenSpec spec;
  spec.vertices = opt.size;
  spec.colors = opt.colors;
  spec.edge_probability = opt.edge_probability;
  spec.flip_count = opt.flips;
  spec.seed = opt.seed;
  rbmg::ColoredGraph g = rbmg::ColoredGraph({0}, {});
  if (opt.planted) {
    // Same derivation of sub-seeds as a benchmark trial.
    spec.kind = rbmg::GenSpec::Kind::planted_perturbation;
    rbmg::Rng rng(opt.seed);
    spec.seed = rng.next();
    g = rbmg::perturb(rbmg::best_match_graph_symmetric(rbmg::random_tree(spec)), opt.flips, rng.next());
  } else {
    spec.kind = rbmg::GenSpec::Kind::random_colored_graph;
    g = rbmg::random_colored_graph(spec);
  }
  write_output(opt.out, rbmg::format_graph(g));
  return kYes;
}

struct BenchOptions {
  std::string suite_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials, leaves, colors, flips, k_max, oracle_cap;
  std::optional<std::string> target, mode;
  std::optional<unsigned> threads, jobs;
  bool with_timing = false;
};

int run_bench(const BenchOptions& opt) {
  rbmg::BenchSuite suite;
  if (!opt.suite_path.empty()) {
    std::istringstream in(read_input(opt.suite_path));
    suite = rbmg::parse_bench_suite(in);
  }
  if (opt.seed) suite.seed = *opt.seed;
  if (opt.trials) suite.trials = *opt.trials;
  if (opt.leaves) suite.leaves = *opt.leaves;
  if (opt.colors) suite.colors = *opt.colors;
  if (opt.flips) suite.flips = *opt.flips;
  if (opt.k_max) suite.k_max = *opt.k_max;
  if (opt.oracle_cap) suite.oracle_cap = *opt.oracle_cap;
  if (opt.threads) suite.threads = *opt.threads;
  if (opt.jobs) suite.jobs = *opt.jobs;
  if (opt.with_timing) suite.with_timing = true;
  if (opt.target) {
    suite.target = rbmg::parse_target(*opt.target);
    if (!suite.target) throw CLI::ValidationError("--target", "unknown target '" + *opt.target + "'");
  }
  if (opt.mode) {
    suite.mode = parse_mode(*opt.mode);
    if (suite.mode == rbmg::EditMode::completion) throw CLI::ValidationError("--mode", "expected delete or edit");
  }
  std::ostringstream csv;
  rbmg::write_bench_csv(csv, rbmg::run_benchmark(suite), suite.with_timing);
  write_output(opt.out, csv.str());
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recognition and exact modification of reciprocal best match graphs and hc-cographs", "rbmg"};
  app.set_version_flag("--version", std::string("rbmg ") + kVersion + " (graph format " +
                                        std::to_string(rbmg::kGraphFormatVersion) + ")");
  app.require_subcommand(1);

  int code = kYes;

  RecognizeOptions rec;
  auto* recognize = app.add_subcommand("recognize", "Decide membership in a graph class");
  recognize->add_option("--class", rec.cls, "bicluster, 2rbmg, cograph, hc-cograph, rbmg-oracle or nrbmg")->required();
  recognize->add_flag("--certificate", rec.certificate, "Print the certificate");
  recognize->add_flag("--quiet", rec.quiet, "Print nothing; the exit code carries the verdict");
  recognize->add_flag("--json", rec.json, "JSON output");
  recognize->add_option("--oracle-cap", rec.oracle_cap, "Largest component for exhaustive tree search");
  recognize->add_option("graph", rec.input, "Colored-graph file, '-' for stdin");
  recognize->callback([&] { code = run_recognize(rec); });

  SolveOptions sol;
  auto* solve = app.add_subcommand("solve", "Optimal edge deletion, editing or completion");
  solve->add_option("--target", sol.target, "bicluster, 2rbmg, hc-cograph or nrbmg")->required();
  solve->add_option("--mode", sol.mode, "delete, edit or complete")->capture_default_str();
  solve->add_option("--k-max", sol.k_max, "Largest admissible edit set");
  solve->add_option("--oracle-cap", sol.oracle_cap, "Largest instance for exhaustive tree search");
  solve->add_option("--threads", sol.threads, "Worker threads")->capture_default_str();
  solve->add_flag("--json", sol.json, "JSON output");
  solve->add_option("graph", sol.input, "Colored-graph file, '-' for stdin");
  solve->callback([&] { code = run_solve(sol); });

  TreeToGraphOptions t2g;
  auto* tree_to_graph = app.add_subcommand("tree-to-graph", "Best match or orthology graph of a tree");
  tree_to_graph->add_option("--relation", t2g.relation, "rbmg or orthology")
      ->check(CLI::IsMember({"rbmg", "orthology"}))
      ->capture_default_str();
  tree_to_graph->add_option("--index", t2g.index, "Which tree of the file to convert (0-based)");
  tree_to_graph->add_option("--out,-o", t2g.out, "Output file (default stdout)");
  tree_to_graph->add_option("tree", t2g.input, "Tree file, '-' for stdin");
  tree_to_graph->callback([&] { code = run_tree_to_graph(t2g); });

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate random instances");
  gen_cmd->require_subcommand(1);
  auto add_common = [&](CLI::App* sub, const char* size_help) {
    sub->add_option("--seed", gen.seed, "Random seed")->required();
    sub->add_option("--size,-n", gen.size, size_help)->capture_default_str();
    sub->add_option("--colors", gen.colors, "Number of colors")->capture_default_str();
    sub->add_option("--out,-o", gen.out, "Output file (default stdout)");
  };
  auto* gen_tree = gen_cmd->add_subcommand("tree", "Random leaf-colored tree in Newick form");
  add_common(gen_tree, "Number of leaves");
  gen_tree->add_option("--speciation", gen.speciation, "Label inner nodes, speciation with this probability")
      ->check(CLI::Range(0.0, 1.0));
  gen_tree->callback([&] { code = run_gen_tree(gen); });
  auto* gen_graph = gen_cmd->add_subcommand("graph", "Random properly colored graph");
  add_common(gen_graph, "Number of vertices");
  gen_graph->add_option("--edge-probability", gen.edge_probability, "Probability of each cross pair")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_graph->add_flag("--planted", gen.planted, "RBMG of a random tree, then perturbed by --flips");
  gen_graph->add_option("--flips", gen.flips, "Cross pairs toggled in --planted mode")->capture_default_str();
  gen_graph->callback([&] { code = run_gen_graph(gen); });

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Planted perturbation benchmark, CSV output");
  bench_cmd->add_option("--suite", bench.suite_path, "Suite file with 'key = value' lines");
  bench_cmd->add_option("--out,-o", bench.out, "CSV file (default stdout)");
  bench_cmd->add_option("--seed", bench.seed, "Suite seed");
  bench_cmd->add_option("--trials", bench.trials, "Number of trials");
  bench_cmd->add_option("--leaves", bench.leaves, "Leaves per planted tree");
  bench_cmd->add_option("--colors", bench.colors, "Number of colors");
  bench_cmd->add_option("--flips", bench.flips, "Planted flips per trial");
  bench_cmd->add_option("--target", bench.target, "Solver target (default: 2rbmg for two colors, else nrbmg)");
  bench_cmd->add_option("--mode", bench.mode, "delete or edit");
  bench_cmd->add_option("--k-max", bench.k_max, "Solver budget");
  bench_cmd->add_option("--oracle-cap", bench.oracle_cap, "Largest instance for exhaustive tree search");
  bench_cmd->add_option("--threads", bench.threads, "Solver threads per trial");
  bench_cmd->add_option("--jobs", bench.jobs, "Trials run concurrently");
  bench_cmd->add_flag("--with-timing", bench.with_timing, "Add a wall_seconds column");
  bench_cmd->callback([&] { code = run_bench(bench); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kYes : kUsage;
  } catch (const rbmg::Error& e) {
    std::cerr << "rbmg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "rbmg: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}
