#pragma once

#include "crossmin/mover.hpp"
#include "crossmin/stats.hpp"
#include "crossmin/stress.hpp"

#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossmin {

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedConfig {
  std::string name;
  MoveConfig config;
};

/// Name of the summary/comparison rows describing the stress layout itself.
inline constexpr const char* kStressBaseline = "Stress";

struct ExperimentRecord {
  std::string graph;
  std::string config;
  std::uint64_t seed = 0;
  int pass = 0;
  std::uint64_t cr_before = 0;
  std::uint64_t cr_after = 0;
  double time_ms = 0.0;
};

struct SummaryRow {
  std::string graph;
  std::string config;
  MeanStd crossings;
};

struct ComparisonRow {
  std::string graph;
  std::string config_a;
  std::string config_b;
  MannWhitneyResult test;
};

struct ExperimentOptions {
  std::size_t repetitions = 10;
  std::uint64_t base_seed = 1;
  StressParams stress;
  /// Receives one line per failed (graph, repetition); may be null.
  std::ostream* log = nullptr;
};

struct ExperimentResult {
  /// Sorted by graph input order, repetition, config input order, pass.
  std::vector<ExperimentRecord> records;
  std::vector<SummaryRow> summary;
  std::vector<ComparisonRow> comparisons;
  std::vector<std::string> failures;
};

/// Seed of repetition `rep`, decorrelated from neighboring repetitions.
std::uint64_t repetition_seed(std::uint64_t base, std::size_t rep);

/// For every graph and repetition: preprocess, random grid + stress layout,
/// then every config on a copy of that layout. Repetitions run in parallel.
ExperimentResult run_experiment(std::span<const NamedGraph> graphs,
                                std::span<const NamedConfig> configs,
                                const ExperimentOptions& options);

void write_records_csv(std::ostream& out, std::span<const ExperimentRecord> records);
void write_summary_csv(std::ostream& out, std::span<const SummaryRow> rows);
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

/// Sample size c (ln 1/eps + ln 1/gamma) / (eps delta^2), rounded up.
std::size_t approximation_sample_size(double epsilon, double gamma, double delta, double c);

struct CocrossingOptions {
  double delta = 0.25;
  double gamma = 0.1;
  double epsilon = 0.1;
  double c = 1.0;
  std::size_t trials = 200;
  /// Overrides the computed sample size.
  std::optional<std::size_t> sample_size;
  std::size_t well_behaved_probes = 1000;
  std::uint64_t seed = 0;
};

struct CocrossingReport {
  std::size_t sample_size = 0;
  std::size_t trials = 0;
  std::size_t within = 0;
  double fraction = 0.0;
  /// Largest fraction of |E| crossed by one incident edge over all probes.
  double max_crossed_fraction = 0.0;
};

class NotWellBehavedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fraction of uniform probe positions p in the movement square at which the
/// sampled estimate lies within a factor (1 +- delta) of the co-crossing
/// number. Throws NotWellBehavedError if some probe makes an incident edge
/// cross more than (1 - epsilon)|E| edges.
CocrossingReport validate_cocrossing_approx(const Drawing& d, VertexId v,
                                            const CocrossingOptions& options);

}  // namespace crossmin
