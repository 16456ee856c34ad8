#include "crossmin/experiment.hpp"

#include "crossmin/crossings.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>

namespace crossmin {

std::uint64_t repetition_seed(std::uint64_t base, std::size_t rep) {
  // splitmix64 finalizer
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (rep + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

struct TaskOutput {
  std::vector<ExperimentRecord> records;
  std::string failure;
};

TaskOutput run_repetition(const NamedGraph& graph, std::span<const NamedConfig> configs,
                          std::size_t rep, const ExperimentOptions& options) {
  using Clock = std::chrono::steady_clock;
  TaskOutput out;
  const std::uint64_t seed = repetition_seed(options.base_seed, rep);
  try {
    auto g = std::make_shared<const Graph>(preprocess(graph.graph).graph);
    std::mt19937_64 rng(seed);
    const auto t0 = Clock::now();
    const Drawing initial = stress_layout(g, options.stress, rng);
    const double layout_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    const std::uint64_t base = count_all(initial).total;
    out.records.push_back({graph.name, kStressBaseline, seed, 0, base, base, layout_ms});
    for (const NamedConfig& c : configs) {
      Drawing d = initial;
      MoveConfig cfg = c.config;
      cfg.seed = seed;
      const MoveReport report = minimize(d, cfg);
      for (std::size_t p = 0; p < report.passes.size(); ++p) {
        out.records.push_back({graph.name, c.name, seed, static_cast<int>(p) + 1,
                               report.passes[p].crossings_before, report.passes[p].crossings_after,
                               report.passes[p].time_ms});
      }
    }
  } catch (const std::exception& e) {
    out.records.clear();
    out.failure = graph.name + " rep " + std::to_string(rep) + ": " + e.what();
  }
  return out;
}

}  // namespace

ExperimentResult run_experiment(std::span<const NamedGraph> graphs,
                                std::span<const NamedConfig> configs,
                                const ExperimentOptions& options) {
  const std::size_t tasks = graphs.size() * options.repetitions;
  std::vector<TaskOutput> outputs(tasks);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks); ++t) {
    const auto task = static_cast<std::size_t>(t);
    outputs[task] = run_repetition(graphs[task / options.repetitions], configs,
                                   task % options.repetitions, options);
  }

  ExperimentResult result;
  for (TaskOutput& o : outputs) {
    result.records.insert(result.records.end(), o.records.begin(), o.records.end());
    if (!o.failure.empty()) {
      if (options.log) *options.log << "experiment failure: " << o.failure << '\n';
      result.failures.push_back(std::move(o.failure));
    }
  }

  std::vector<std::string> names{kStressBaseline};
  for (const NamedConfig& c : configs) names.push_back(c.name);
  for (const NamedGraph& g : graphs) {
    // Final crossings per (config, seed): the last pass wins.
    std::map<std::string, std::map<std::uint64_t, double>> finals;
    for (const ExperimentRecord& r : result.records) {
      if (r.graph == g.name) finals[r.config][r.seed] = static_cast<double>(r.cr_after);
    }
    std::map<std::string, std::vector<double>> samples;
    for (const std::string& name : names) {
      std::vector<double> values;
      for (const auto& [seed, cr] : finals[name]) values.push_back(cr);
      if (values.empty()) continue;
      result.summary.push_back({g.name, name, mean_std(values)});
      samples[name] = std::move(values);
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (!samples.count(names[i]) || !samples.count(names[j])) continue;
        result.comparisons.push_back(
            {g.name, names[i], names[j], mann_whitney_u(samples[names[i]], samples[names[j]])});
      }
    }
  }
  return result;
}

namespace {

std::string number(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

}  // namespace

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records) {
  out << "graph,config,seed,pass,cr_before,cr_after,time_ms\n";
  for (const ExperimentRecord& r : records) {
    out << r.graph << ',' << r.config << ',' << r.seed << ',' << r.pass << ',' << r.cr_before
        << ',' << r.cr_after << ',' << number(r.time_ms) << '\n';
  }
}

void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows) {
  out << "graph,config,mean,std,n\n";
  for (const SummaryRow& r : rows) {
    out << r.graph << ',' << r.config << ',' << number(r.crossings.mean) << ','
        << number(r.crossings.std) << ',' << r.crossings.n << '\n';
  }
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  out << "graph,config_a,config_b,U,p\n";
  for (const ComparisonRow& r : rows) {
    out << r.graph << ',' << r.config_a << ',' << r.config_b << ',' << number(r.test.u) << ','
        << number(r.test.p_two_sided) << '\n';
  }
}

std::size_t approximation_sample_size(double epsilon, double gamma, double delta, double c) {
  if (!(epsilon > 0 && epsilon <= 1 && gamma > 0 && gamma < 1 && delta > 0 && c > 0)) {
    throw std::invalid_argument("approximation_sample_size: parameters out of range");
  }
  const double s = c * (std::log(1.0 / epsilon) + std::log(1.0 / gamma)) / (epsilon * delta * delta);
  return static_cast<std::size_t>(std::ceil(s));
}

CocrossingReport validate_cocrossing_approx(const Drawing& d, VertexId v,
                                            const CocrossingOptions& options) {
  const Graph& g = d.graph();
  const std::size_t m = g.edge_count();
  if (m == 0 || g.degree(v) == 0) {
    throw std::invalid_argument("validate_cocrossing_approx: vertex has no edges");
  }
  const BoundingBox box = movement_square(d);
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> ux(box.min().x(), box.max().x());
  std::uniform_real_distribution<double> uy(box.min().y(), box.max().y());
  const auto probe = [&] {
    const double x = ux(rng);
    return Point(x, uy(rng));
  };

  CocrossingReport report;
  std::vector<EdgeId> all(m);
  std::iota(all.begin(), all.end(), EdgeId{0});
  const auto nbrs = g.neighbors(v);
  for (std::size_t i = 0; i <= options.well_behaved_probes; ++i) {
    const Point p = i == 0 ? d.position(v) : probe();
    for (VertexId u : nbrs) {
      const std::uint64_t crossed = count_spokes_at(d, v, std::span(&u, 1), p, all);
      report.max_crossed_fraction =
          std::max(report.max_crossed_fraction, static_cast<double>(crossed) / static_cast<double>(m));
    }
  }
  if (report.max_crossed_fraction > 1.0 - options.epsilon) {
    std::ostringstream msg;
    msg << "drawing is not " << options.epsilon << "-well behaved at vertex " << v
        << ": an incident edge crosses " << report.max_crossed_fraction << " of all edges";
    throw NotWellBehavedError(msg.str());
  }

  report.sample_size = std::min(
      m, options.sample_size.value_or(approximation_sample_size(options.epsilon, options.gamma,
                                                                options.delta, options.c)));
  report.trials = options.trials;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const Point p = probe();
    const std::vector<EdgeId> sample = sample_without_replacement(all, report.sample_size, rng);
    const double lambda = estimate_co_crossing(d, v, p, sample);
    const double exact = static_cast<double>(co_crossing_at(d, v, p));
    if (std::abs(lambda - exact) <= options.delta * exact + 1e-9 * exact) ++report.within;
  }
  report.fraction = options.trials ? static_cast<double>(report.within) /
                                         static_cast<double>(options.trials)
                                   : 0.0;
  return report;
}

}  // namespace crossmin
