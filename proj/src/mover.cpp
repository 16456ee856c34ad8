#include "crossmin/mover.hpp"

#include "crossmin/arrangement.hpp"
#include "crossmin/crossings.hpp"
#include "crossmin/regions.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace crossmin {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Restricted: return "restricted";
    case Strategy::Primal: return "primal";
    case Strategy::Weighted: return "weighted";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  if (name == "restricted") return Strategy::Restricted;
  if (name == "primal") return Strategy::Primal;
  if (name == "weighted") return Strategy::Weighted;
  return std::nullopt;
}

void MoveConfig::validate() const {
  if (passes < 1) throw std::invalid_argument("passes must be at least 1");
  if (degree_cap < 1) throw std::invalid_argument("degree cap must be at least 1");
  if (points < 1) throw std::invalid_argument("points must be at least 1");
  if (strategy != Strategy::Primal && samples < 1) {
    throw std::invalid_argument("restricted and weighted strategies need a nonempty edge sample");
  }
}

MoveConfig MoveConfig::S512() { return {512, 1, 100, Strategy::Restricted, 1, 0}; }
MoveConfig MoveConfig::S0() { return {0, 1000, kUnbounded, Strategy::Primal, 1, 0}; }
MoveConfig MoveConfig::R0() { return {0, 1000, kUnbounded, Strategy::Primal, 1, 0}; }
MoveConfig MoveConfig::R512() { return {512, 1000, 100, Strategy::Restricted, 1, 0}; }
MoveConfig MoveConfig::W512() { return {512, 1000, 100, Strategy::Weighted, 1, 0}; }
MoveConfig MoveConfig::full_sample() {
  return {kUnbounded, 1, kUnbounded, Strategy::Restricted, 1, 0};
}

std::optional<MoveConfig> MoveConfig::named(std::string_view name) {
  if (name == "S512") return S512();
  if (name == "S0") return S0();
  if (name == "R0") return R0();
  if (name == "R512") return R512();
  if (name == "W512") return W512();
  return std::nullopt;
}

bool MoveReport::consistent() const {
  for (std::size_t i = 0; i < moves.size(); ++i) {
    const MoveRecord& r = moves[i];
    if (r.accepted && !(r.new_crossings < r.old_crossings)) return false;
    if (!r.accepted && (r.new_crossings != r.old_crossings || r.new_position != r.old_position)) {
      return false;
    }
    if (i > 0 && moves[i - 1].pass == r.pass && r.total_after > moves[i - 1].total_after) {
      return false;
    }
  }
  for (const PassSummary& p : passes) {
    if (p.crossings_after > p.crossings_before) return false;
  }
  return true;
}

std::vector<VertexId> order_vertices(std::span<const std::uint64_t> per_vertex_crossings) {
  std::vector<VertexId> order(per_vertex_crossings.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return per_vertex_crossings[a] > per_vertex_crossings[b];
  });
  return order;
}

std::vector<VertexId> order_vertices(const Drawing& d) {
  return order_vertices(count_all(d).per_vertex);
}

namespace {

Point uniform_in_box(const BoundingBox& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(box.min().x(), box.max().x());
  std::uniform_real_distribution<double> uy(box.min().y(), box.max().y());
  const double x = ux(rng);
  return {x, uy(rng)};
}

Point clamp_to_box(Point p, const BoundingBox& box) {
  for (int k = 0; k < 2; ++k) p[k] = std::clamp(p[k], box.min()[k], box.max()[k]);
  return p;
}

std::vector<EdgeId> edge_sample(const Drawing& d, VertexId v, std::size_t samples,
                                std::mt19937_64& rng) {
  const Graph& g = d.graph();
  std::vector<EdgeId> pool;
  pool.reserve(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).incident_to(v)) pool.push_back(e);
  }
  if (samples >= pool.size()) return pool;
  std::vector<EdgeId> s = sample_without_replacement(pool, samples, rng);
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<Point> candidate_positions(const Drawing& d, VertexId v,
                                       std::span<const VertexId> neighbors, const MoveConfig& cfg,
                                       const BoundingBox& box, std::mt19937_64& rng,
                                       std::size_t* degenerate) {
  std::vector<Point> out;
  if (cfg.strategy == Strategy::Primal) {
    out.reserve(cfg.points);
    for (std::size_t i = 0; i < cfg.points; ++i) out.push_back(uniform_in_box(box, rng));
    return out;
  }
  const std::vector<EdgeId> sample = edge_sample(d, v, cfg.samples, rng);
  std::optional<VisibilityArrangement> arr;
  FaceCounts counts;
  try {
    arr = build_visibility_arrangement(d, v, neighbors, sample, box);
    const std::uint32_t seed_face = choose_seed_face(arr->dual, arr->faces, box);
    const FacePolygon seed_poly =
        extract_face_polygon(arr->dual, arr->faces.cycle(seed_face).front());
    const std::int64_t seed = seed_count(d, v, seed_poly.vertices, neighbors, sample);
    counts = propagate_counts(arr->dual, arr->faces, seed_face, seed);
  } catch (const DegeneracyError&) {
    if (degenerate) ++*degenerate;
    return out;
  }

  std::unordered_map<std::uint32_t, std::vector<Triangle>> triangles;
  const auto sample_in = [&](std::uint32_t face) -> std::optional<Point> {
    auto it = triangles.find(face);
    if (it == triangles.end()) {
      const FacePolygon poly = extract_face_polygon(arr->dual, arr->faces.cycle(face).front());
      it = triangles.emplace(face, triangulate(poly.vertices)).first;
    }
    if (it->second.empty()) return std::nullopt;
    return clamp_to_box(sample_point_in_triangles(it->second, rng), box);
  };

  if (cfg.strategy == Strategy::Restricted) {
    const auto mins = min_faces(counts);
    for (std::size_t i = 0; i < cfg.points && !mins.empty(); ++i) {
      if (auto p = sample_in(mins[i % mins.size()].first)) out.push_back(*p);
    }
  } else {
    const std::vector<double> w = face_weights(counts);
    std::discrete_distribution<std::uint32_t> pick(w.begin(), w.end());
    for (std::size_t i = 0; i < cfg.points; ++i) {
      if (auto p = sample_in(pick(rng))) out.push_back(*p);
    }
  }
  return out;
}

std::vector<Point> candidate_positions(const Drawing& d, VertexId v, const MoveConfig& cfg,
                                       const BoundingBox& box, std::mt19937_64& rng) {
  return candidate_positions(d, v, d.graph().neighbors(v), cfg, box, rng);
}

bool creates_defect(const Drawing& d, VertexId v, const Point& p) {
  const Graph& g = d.graph();
  for (VertexId w = 0; w < g.vertex_count(); ++w) {
    if (w != v && d.position(w) == p) return true;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!g.edge(e).incident_to(v) && on_segment(p, d.segment(e))) return true;
  }
  const auto nbrs = g.neighbors(v);
  const auto inc = g.incident_edges(v);
  for (std::size_t k = 0; k < nbrs.size(); ++k) {
    const Segment spoke(d.position(nbrs[k]), p);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      if (w != v && w != nbrs[k] && on_segment(d.position(w), spoke)) return true;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (e == inc[k] || g.edge(e).incident_to(v)) continue;
      if (collinear_overlap(spoke, d.segment(e))) return true;
    }
  }
  return false;
}

MoveRecord move_vertex(Drawing& d, VertexId v, const MoveConfig& cfg, const BoundingBox& box,
                       std::mt19937_64& rng) {
  const Graph& g = d.graph();
  MoveRecord rec;
  rec.vertex = v;
  rec.old_position = rec.new_position = d.position(v);
  if (g.degree(v) == 0) return rec;
  rec.old_crossings = rec.new_crossings = count_vertex_at(d, v, rec.old_position);

  std::vector<Point> candidates;
  const auto nbrs = g.neighbors(v);
  if (cfg.strategy == Strategy::Primal || nbrs.size() <= cfg.degree_cap) {
    candidates = candidate_positions(d, v, nbrs, cfg, box, rng, &rec.degenerate_arrangements);
  } else {
    std::vector<VertexId> shuffled(nbrs.begin(), nbrs.end());
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t start = 0; start < shuffled.size(); start += cfg.degree_cap) {
      const std::size_t len = std::min(cfg.degree_cap, shuffled.size() - start);
      const std::span<const VertexId> group(shuffled.data() + start, len);
      auto part = candidate_positions(d, v, group, cfg, box, rng, &rec.degenerate_arrangements);
      candidates.insert(candidates.end(), part.begin(), part.end());
    }
  }
  rec.candidates = candidates.size();

  std::vector<std::uint64_t> score(candidates.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(candidates.size()); ++i) {
    score[static_cast<std::size_t>(i)] =
        count_vertex_at(d, v, candidates[static_cast<std::size_t>(i)]);
  }
  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
  for (std::size_t idx : order) {
    if (score[idx] >= rec.old_crossings) break;
    if (creates_defect(d, v, candidates[idx])) continue;
    d.set_position(v, candidates[idx]);
    rec.new_position = candidates[idx];
    rec.new_crossings = score[idx];
    rec.accepted = true;
    break;
  }
  return rec;
}

MoveReport minimize(Drawing& d, const MoveConfig& cfg) {
  cfg.validate();
  using Clock = std::chrono::steady_clock;
  const auto t0 = Clock::now();
  MoveReport report;
  const BoundingBox box = movement_square(d);
  std::mt19937_64 rng(cfg.seed);
  report.general_position_rounds = enforce_general_position(d, rng);
  for (int pass = 0; pass < cfg.passes; ++pass) {
    const auto tp = Clock::now();
    const CrossingTally tally = count_all(d);
    PassSummary summary;
    summary.crossings_before = tally.total;
    std::uint64_t total = tally.total;
    for (VertexId v : order_vertices(tally.per_vertex)) {
      MoveRecord rec = move_vertex(d, v, cfg, box, rng);
      rec.pass = pass;
      total = total - rec.old_crossings + rec.new_crossings;
      rec.total_after = total;
      report.moves.push_back(rec);
    }
    summary.crossings_after = count_all(d).total;
    if (summary.crossings_after != total) {
      throw std::logic_error("minimize: running crossing total diverged from a recount");
    }
    summary.time_ms = std::chrono::duration<double, std::milli>(Clock::now() - tp).count();
    report.passes.push_back(summary);
  }
  report.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return report;
}

}  // namespace crossmin
