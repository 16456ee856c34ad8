#pragma once

#include "crossmin/graph.hpp"

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace crossmin {

enum class Strategy { Restricted, Primal, Weighted };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

inline constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

struct MoveConfig {
  /// Edge sample size; 0 means no sampling, kUnbounded the full edge set.
  std::size_t samples = 0;
  std::size_t points = 1000;
  /// Neighbors per arrangement; kUnbounded for no cap.
  std::size_t degree_cap = kUnbounded;
  Strategy strategy = Strategy::Primal;
  int passes = 1;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument when the fields are inconsistent.
  void validate() const;

  static MoveConfig S512();
  static MoveConfig S0();
  static MoveConfig R0();
  static MoveConfig R512();
  static MoveConfig W512();
  /// Restricted strategy over every edge, one point, no degree cap.
  static MoveConfig full_sample();
  /// One of S512, S0, R0, R512, W512.
  static std::optional<MoveConfig> named(std::string_view name);
};

struct MoveRecord {
  VertexId vertex = 0;
  int pass = 0;
  Point old_position = Point::Zero();
  Point new_position = Point::Zero();
  std::uint64_t old_crossings = 0;
  std::uint64_t new_crossings = 0;
  bool accepted = false;
  std::size_t candidates = 0;
  /// Arrangements that could not be built and were skipped.
  std::size_t degenerate_arrangements = 0;
  /// Total crossings of the drawing after this record.
  std::uint64_t total_after = 0;
};

struct PassSummary {
  std::uint64_t crossings_before = 0;
  std::uint64_t crossings_after = 0;
  double time_ms = 0.0;
};

struct MoveReport {
  std::vector<MoveRecord> moves;
  std::vector<PassSummary> passes;
  double wall_ms = 0.0;
  int general_position_rounds = 0;

  /// Accepted records strictly improve and running totals never increase.
  bool consistent() const;
};

/// Vertices by descending crossing count, ties by ascending id.
std::vector<VertexId> order_vertices(std::span<const std::uint64_t> per_vertex_crossings);
std::vector<VertexId> order_vertices(const Drawing& d);

/// Candidate positions for v, computed from the arrangement of the given
/// neighbor group (primal: uniform in the box).
std::vector<Point> candidate_positions(const Drawing& d, VertexId v,
                                       std::span<const VertexId> neighbors, const MoveConfig& cfg,
                                       const BoundingBox& box, std::mt19937_64& rng,
                                       std::size_t* degenerate = nullptr);

std::vector<Point> candidate_positions(const Drawing& d, VertexId v, const MoveConfig& cfg,
                                       const BoundingBox& box, std::mt19937_64& rng);

/// True if placing v at p puts it on another vertex or edge, or makes one of
/// its edges pass through a vertex or overlap another edge.
bool creates_defect(const Drawing& d, VertexId v, const Point& p);

/// Generates candidates (per neighbor group when deg(v) > K), scores them and
/// the current position against every edge, and moves v to the strict best.
MoveRecord move_vertex(Drawing& d, VertexId v, const MoveConfig& cfg, const BoundingBox& box,
                       std::mt19937_64& rng);

/// Runs cfg.passes sweeps in order_vertices order within the movement square
/// of the input drawing.
MoveReport minimize(Drawing& d, const MoveConfig& cfg);

}  // namespace crossmin
