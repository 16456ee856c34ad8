// crossmin command-line tool. Exit codes: 0 success, 1 usage error, 2 data error.

#include "crossmin/crossings.hpp"
#include "crossmin/experiment.hpp"
#include "crossmin/graph_io.hpp"
#include "crossmin/mover.hpp"
#include "crossmin/parallel.hpp"
#include "crossmin/stats.hpp"
#include "crossmin/stress.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace crossmin;

namespace {

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot read '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write '" + path + "'");
  return out;
}

std::shared_ptr<const Graph> load_graph(const std::string& path) {
  std::ifstream in = open_in(path);
  return std::make_shared<const Graph>(parse_edge_list(in).graph);
}

Drawing load_drawing(const std::string& path, std::shared_ptr<const Graph> g) {
  std::ifstream in = open_in(path);
  return read_drawing(in, format_for_path(path), std::move(g));
}

void save_drawing(const std::string& path, const Drawing& d) {
  std::ofstream out = open_out(path);
  write_drawing(out, d, format_for_path(path));
}

void save_svg(const std::string& path, const Drawing& d, bool markers) {
  std::ofstream out = open_out(path);
  out << to_svg(d, {markers});
}

std::size_t parse_count(const std::string& text, const char* flag) {
  if (text == "all" || text == "inf") return kUnbounded;
  std::size_t value = 0;
  std::istringstream in(text);
  if (!(in >> value) || !in.eof()) {
    throw CLI::ValidationError(flag, "expected a non-negative integer, 'all' or 'inf'");
  }
  return value;
}

nlohmann::json count_json(std::size_t x) {
  if (x == kUnbounded) return "all";
  return x;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossing minimization for straight-line graph drawings by vertex movement"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads,
                 "Worker threads (default: $CROSSMIN_THREADS, else all cores)");

  // prep
  auto* prep = app.add_subcommand("prep", "Keep the largest component and peel degree-1 vertices");
  std::string prep_in, prep_out;
  prep->add_option("--input", prep_in, "Edge list")->required();
  prep->add_option("--output", prep_out, "Write the preprocessed edge list here");

  // layout
  auto* layout = app.add_subcommand("layout", "Random grid placement followed by stress majorization");
  std::string lay_graph, lay_out, lay_svg;
  std::uint64_t lay_seed = 1;
  StressParams stress_params;
  layout->add_option("--graph", lay_graph, "Edge list of a connected graph")->required();
  layout->add_option("--output", lay_out, "Drawing file (.json or .csv)")->required();
  layout->add_option("--svg", lay_svg, "Also write an SVG rendering");
  layout->add_option("--seed", lay_seed, "RNG seed");
  layout->add_option("--iterations", stress_params.max_iterations, "Maximum stress sweeps")
      ->check(CLI::PositiveNumber);
  layout->add_option("--tolerance", stress_params.tolerance, "Relative stress decrease to stop at")
      ->check(CLI::PositiveNumber);
  layout->add_option("--grid-side", stress_params.grid_side, "Initial grid side (default |E|)");

  // minimize
  auto* mini = app.add_subcommand("minimize", "Move vertices to reduce crossings");
  std::string min_graph, min_drawing, min_out, min_report, min_svg, min_config, min_strategy;
  std::string min_samples = "512", min_points = "1000", min_cap = "100";
  int min_passes = 1;
  std::uint64_t min_seed = 0;
  mini->add_option("--graph", min_graph, "Edge list")->required();
  mini->add_option("--drawing", min_drawing, "Initial drawing (.json or .csv)")->required();
  mini->add_option("--output", min_out, "Final drawing");
  mini->add_option("--report", min_report, "Move report (JSON)");
  mini->add_option("--svg", min_svg, "SVG of the final drawing with crossing markers");
  auto* opt_config = mini->add_option("--config", min_config, "Named configuration: S512, S0, R0, R512, W512");
  auto* opt_strategy = mini->add_option("--strategy", min_strategy, "restricted, primal or weighted");
  auto* opt_samples = mini->add_option("--samples", min_samples, "Edge sample size |S| (or 'all')");
  auto* opt_points = mini->add_option("--points", min_points, "Candidate points |P|");
  auto* opt_cap = mini->add_option("--degree-cap", min_cap, "Neighbors per arrangement K (or 'inf')");
  opt_config->excludes(opt_strategy)->excludes(opt_samples)->excludes(opt_points)->excludes(opt_cap);
  mini->add_option("--passes", min_passes, "Sweeps over all vertices")->check(CLI::PositiveNumber);
  mini->add_option("--seed", min_seed, "RNG seed");

  // count
  auto* count = app.add_subcommand("count", "Count crossings of a drawing");
  std::string cnt_graph, cnt_drawing;
  bool cnt_per_vertex = false;
  count->add_option("--graph", cnt_graph, "Edge list")->required();
  count->add_option("--drawing", cnt_drawing, "Drawing file")->required();
  count->add_flag("--per-vertex", cnt_per_vertex, "Also print 'vertex crossings' lines");

  // bench
  auto* bench = app.add_subcommand("bench", "Run configurations over graphs and repetitions");
  std::vector<std::string> bench_graphs;
  std::string bench_configs = "R0,R512", bench_records, bench_summary, bench_comparison;
  std::size_t bench_reps = 10;
  std::uint64_t bench_seed = 1;
  int bench_iterations = 200;
  bench->add_option("--graph", bench_graphs, "Edge lists (repeatable)")->required();
  bench->add_option("--configs", bench_configs, "Comma-separated configuration names");
  bench->add_option("--reps", bench_reps, "Repetitions per graph")->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_seed, "Base seed");
  bench->add_option("--stress-iterations", bench_iterations, "Stress sweeps per layout")
      ->check(CLI::PositiveNumber);
  bench->add_option("--records", bench_records, "Per-pass records CSV (default stdout)");
  bench->add_option("--summary", bench_summary, "Summary CSV");
  bench->add_option("--comparison", bench_comparison, "Mann-Whitney comparison CSV");

  // stats
  auto* stats = app.add_subcommand("stats", "Degree histogram and mean degree");
  std::string st_graph;
  bool st_prep = false;
  stats->add_option("--graph", st_graph, "Edge list")->required();
  stats->add_flag("--preprocess", st_prep, "Preprocess before counting");

  // validate
  auto* validate = app.add_subcommand("validate", "Check the sampled co-crossing estimate");
  std::string val_graph, val_drawing;
  VertexId val_vertex = 0;
  CocrossingOptions val;
  std::size_t val_samples = 0;
  validate->add_option("--graph", val_graph, "Edge list")->required();
  validate->add_option("--drawing", val_drawing, "Drawing file (default: stress layout)");
  validate->add_option("--vertex", val_vertex, "Vertex to probe");
  validate->add_option("--delta", val.delta, "Relative accuracy")->check(CLI::PositiveNumber);
  validate->add_option("--gamma", val.gamma, "Failure probability")->check(CLI::Range(0.0, 1.0));
  validate->add_option("--epsilon", val.epsilon, "Well-behavedness parameter")
      ->check(CLI::Range(0.0, 1.0));
  validate->add_option("--c", val.c, "Sample size constant")->check(CLI::PositiveNumber);
  validate->add_option("--trials", val.trials, "Probe positions");
  validate->add_option("--samples", val_samples, "Sample size override (0 = computed)");
  validate->add_option("--seed", val.seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (threads <= 0) {
    if (const char* env = std::getenv("CROSSMIN_THREADS")) threads = std::atoi(env);
  }
  set_thread_count(threads);

  try {
    if (*prep) {
      std::ifstream in = open_in(prep_in);
      const ParsedGraph parsed = parse_edge_list(in);
      std::cout << "raw n=" << parsed.graph.vertex_count() << " m=" << parsed.graph.edge_count()
                << " duplicates_dropped=" << parsed.duplicates_dropped
                << " loops_dropped=" << parsed.loops_dropped << '\n';
      const PreprocessResult pre = preprocess(parsed.graph);
      std::cout << "preprocessed n=" << pre.graph.vertex_count() << " m=" << pre.graph.edge_count()
                << '\n';
      if (!prep_out.empty()) {
        std::ofstream out = open_out(prep_out);
        write_edge_list(out, pre.graph);
      }
    } else if (*layout) {
      auto g = load_graph(lay_graph);
      std::mt19937_64 rng(lay_seed);
      std::vector<double> trace;
      const Drawing d = stress_layout(g, stress_params, rng, &trace);
      save_drawing(lay_out, d);
      if (!lay_svg.empty()) save_svg(lay_svg, d, false);
      std::cout << "stress " << trace.front() << " -> " << trace.back() << " in "
                << trace.size() - 1 << " sweeps; crossings " << count_all(d).total << '\n';
    } else if (*mini) {
      auto g = load_graph(min_graph);
      Drawing d = load_drawing(min_drawing, g);
      MoveConfig cfg;
      if (!min_config.empty()) {
        auto named = MoveConfig::named(min_config);
        if (!named) throw CLI::ValidationError("--config", "unknown configuration " + min_config);
        cfg = *named;
      } else {
        cfg.samples = parse_count(min_samples, "--samples");
        cfg.points = parse_count(min_points, "--points");
        cfg.degree_cap = parse_count(min_cap, "--degree-cap");
        if (!min_strategy.empty()) {
          auto s = parse_strategy(min_strategy);
          if (!s) throw CLI::ValidationError("--strategy", "unknown strategy " + min_strategy);
          cfg.strategy = *s;
        } else {
          cfg.strategy = cfg.samples == 0 ? Strategy::Primal : Strategy::Restricted;
        }
      }
      cfg.passes = min_passes;
      cfg.seed = min_seed;
      try {
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        throw CLI::ValidationError("minimize", e.what());
      }
      const MoveReport report = minimize(d, cfg);
      if (!min_out.empty()) save_drawing(min_out, d);
      if (!min_svg.empty()) save_svg(min_svg, d, true);
      const std::uint64_t before = report.passes.front().crossings_before;
      const std::uint64_t after = report.passes.back().crossings_after;
      if (!min_report.empty()) {
        nlohmann::json j;
        j["config"] = {{"samples", count_json(cfg.samples)},
                       {"points", count_json(cfg.points)},
                       {"degree_cap", count_json(cfg.degree_cap)},
                       {"strategy", std::string(to_string(cfg.strategy))},
                       {"passes", cfg.passes},
                       {"seed", cfg.seed}};
        j["cr_before"] = before;
        j["cr_after"] = after;
        j["wall_ms"] = report.wall_ms;
        for (const PassSummary& p : report.passes) {
          j["passes"].push_back({{"cr_before", p.crossings_before},
                                 {"cr_after", p.crossings_after},
                                 {"time_ms", p.time_ms}});
        }
        j["moves"] = nlohmann::json::array();
        for (const MoveRecord& r : report.moves) {
          j["moves"].push_back({{"vertex", r.vertex},
                                {"pass", r.pass + 1},
                                {"old", {r.old_position.x(), r.old_position.y()}},
                                {"new", {r.new_position.x(), r.new_position.y()}},
                                {"old_cr", r.old_crossings},
                                {"new_cr", r.new_crossings},
                                {"accepted", r.accepted}});
        }
        std::ofstream out = open_out(min_report);
        out << j.dump(1) << '\n';
      }
      std::cout << "crossings " << before << " -> " << after << '\n';
    } else if (*count) {
      auto g = load_graph(cnt_graph);
      const Drawing d = load_drawing(cnt_drawing, g);
      const CrossingTally t = count_all(d);
      std::cout << t.total << '\n';
      if (cnt_per_vertex) {
        for (VertexId v = 0; v < t.per_vertex.size(); ++v) {
          std::cout << v << ' ' << t.per_vertex[v] << '\n';
        }
      }
    } else if (*bench) {
      std::vector<NamedGraph> graphs;
      for (const std::string& path : bench_graphs) {
        std::ifstream in = open_in(path);
        std::string name = path.substr(path.find_last_of('/') + 1);
        name = name.substr(0, name.find('.'));
        graphs.push_back({name, parse_edge_list(in).graph});
      }
      std::vector<NamedConfig> configs;
      std::istringstream list(bench_configs);
      for (std::string name; std::getline(list, name, ',');) {
        auto cfg = MoveConfig::named(name);
        if (!cfg) throw CLI::ValidationError("--configs", "unknown configuration " + name);
        configs.push_back({name, *cfg});
      }
      ExperimentOptions options;
      options.repetitions = bench_reps;
      options.base_seed = bench_seed;
      options.stress.max_iterations = bench_iterations;
      options.log = &std::cerr;
      const ExperimentResult result = run_experiment(graphs, configs, options);
      if (bench_records.empty()) {
        write_records_csv(std::cout, result.records);
      } else {
        std::ofstream out = open_out(bench_records);
        write_records_csv(out, result.records);
      }
      if (!bench_summary.empty()) {
        std::ofstream out = open_out(bench_summary);
        write_summary_csv(out, result.summary);
      }
      if (!bench_comparison.empty()) {
        std::ofstream out = open_out(bench_comparison);
        write_comparison_csv(out, result.comparisons);
      }
      if (!result.failures.empty()) return 2;
    } else if (*stats) {
      auto g = load_graph(st_graph);
      const Graph graph = st_prep ? preprocess(*g).graph : *g;
      const DegreeHistogram h = degree_histogram(graph);
      std::cout << "n=" << graph.vertex_count() << " m=" << graph.edge_count()
                << " mean_degree=" << h.mean << '\n';
      for (const auto& [degree, n] : h.counts) std::cout << degree << ' ' << n << '\n';
    } else if (*validate) {
      auto g = load_graph(val_graph);
      if (val_vertex >= g->vertex_count()) {
        throw CLI::ValidationError("--vertex", "vertex id out of range");
      }
      std::mt19937_64 rng(val.seed);
      const Drawing d = val_drawing.empty() ? stress_layout(g, {}, rng) : load_drawing(val_drawing, g);
      if (val_samples > 0) val.sample_size = val_samples;
      const CocrossingReport r = validate_cocrossing_approx(d, val_vertex, val);
      nlohmann::json j = {{"vertex", val_vertex},       {"sample_size", r.sample_size},
                          {"trials", r.trials},         {"within", r.within},
                          {"fraction", r.fraction},     {"delta", val.delta},
                          {"max_crossed_fraction", r.max_crossed_fraction}};
      std::cout << j.dump() << '\n';
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
