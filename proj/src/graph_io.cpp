#include "crossmin/graph_io.hpp"

#include "crossmin/crossings.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

namespace crossmin {

namespace {

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  double x = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), x);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    throw ParseError("malformed number '" + std::string(text) + "'");
  }
  return x;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

ParsedGraph parse_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  ParsedGraph out;
  std::size_t vertex_count = 0;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty() || view.front() == '#' || view.front() == '%') continue;
    std::istringstream tokens{std::string(view)};
    std::string a, b, extra;
    if (!(tokens >> a >> b)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two vertex ids");
    }
    std::int64_t ids[2];
    for (int k = 0; k < 2; ++k) {
      const std::string& tok = k == 0 ? a : b;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), ids[k]);
      if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": non-integer token '" + tok + "'");
      }
      if (ids[k] < 0) {
        throw ParseError("line " + std::to_string(line_no) + ": negative vertex id");
      }
      if (ids[k] >= 0xffffffffLL) {
        throw ParseError("line " + std::to_string(line_no) + ": vertex id too large");
      }
    }
    const auto u = static_cast<VertexId>(ids[0]);
    const auto v = static_cast<VertexId>(ids[1]);
    vertex_count = std::max<std::size_t>(vertex_count, std::max(u, v) + std::size_t{1});
    if (u == v) {
      ++out.loops_dropped;
      continue;
    }
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
      ++out.duplicates_dropped;
      continue;
    }
    edges.push_back({u, v});
  }
  out.graph = Graph(vertex_count, std::move(edges));
  return out;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

DrawingFormat format_for_path(const std::string& path) {
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? DrawingFormat::Csv : DrawingFormat::Json;
}

void write_drawing(std::ostream& out, const Drawing& d, DrawingFormat format) {
  const auto n = static_cast<Eigen::Index>(d.graph().vertex_count());
  if (format == DrawingFormat::Csv) {
    out << "id,x,y\n";
    for (Eigen::Index i = 0; i < n; ++i) {
      out << i << ',' << shortest(d.positions()(0, i)) << ',' << shortest(d.positions()(1, i))
          << '\n';
    }
    return;
  }
  // Written by hand so that every coordinate uses to_chars' shortest form.
  out << "{\"n\": " << n << ", \"positions\": [";
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i) out << ", ";
    out << '[' << shortest(d.positions()(0, i)) << ", " << shortest(d.positions()(1, i)) << ']';
  }
  out << "]}\n";
}

Drawing read_drawing(std::istream& in, DrawingFormat format, std::shared_ptr<const Graph> graph) {
  if (!graph) throw std::invalid_argument("read_drawing: no graph");
  const auto n = graph->vertex_count();
  Eigen::Matrix2Xd pos(2, static_cast<Eigen::Index>(n));
  if (format == DrawingFormat::Json) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("drawing JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("positions") || !doc["positions"].is_array()) {
      throw ParseError("drawing JSON: missing \"positions\" array");
    }
    const auto& arr = doc["positions"];
    if (arr.size() != n) {
      throw ParseError("drawing has " + std::to_string(arr.size()) + " positions, graph has " +
                       std::to_string(n) + " vertices");
    }
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<std::size_t>() != n)) {
      throw ParseError("drawing JSON: \"n\" does not match the graph");
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = arr[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ParseError("drawing JSON: position " + std::to_string(i) + " is not [x, y]");
      }
      pos(0, static_cast<Eigen::Index>(i)) = p[0].get<double>();
      pos(1, static_cast<Eigen::Index>(i)) = p[1].get<double>();
    }
  } else {
    std::string line;
    std::vector<char> filled(n, 0);
    std::size_t rows = 0;
    bool header = true;
    while (std::getline(in, line)) {
      const std::string_view view = trim(line);
      if (view.empty()) continue;
      if (header) {
        header = false;
        if (view.substr(0, 2) == "id") continue;
      }
      const auto c1 = view.find(',');
      const auto c2 = c1 == std::string_view::npos ? c1 : view.find(',', c1 + 1);
      if (c2 == std::string_view::npos) throw ParseError("drawing CSV: expected id,x,y");
      const std::string_view id_text = trim(view.substr(0, c1));
      std::size_t id = 0;
      const auto res = std::from_chars(id_text.data(), id_text.data() + id_text.size(), id);
      if (res.ec != std::errc{} || res.ptr != id_text.data() + id_text.size()) {
        throw ParseError("drawing CSV: bad id '" + std::string(id_text) + "'");
      }
      if (id >= n) {
        throw ParseError("drawing has a vertex id beyond the graph's " + std::to_string(n) +
                         " vertices");
      }
      if (filled[id]) throw ParseError("drawing CSV: repeated id " + std::to_string(id));
      filled[id] = 1;
      ++rows;
      pos(0, static_cast<Eigen::Index>(id)) = parse_double(trim(view.substr(c1 + 1, c2 - c1 - 1)));
      pos(1, static_cast<Eigen::Index>(id)) = parse_double(trim(view.substr(c2 + 1)));
    }
    if (rows != n) {
      throw ParseError("drawing has " + std::to_string(rows) + " positions, graph has " +
                       std::to_string(n) + " vertices");
    }
  }
  if (!pos.allFinite()) throw ParseError("drawing contains non-finite coordinates");
  return Drawing(std::move(graph), std::move(pos));
}

std::string to_svg(const Drawing& d, const SvgOptions& options) {
  const Graph& g = d.graph();
  double x0 = 0.0, y0 = 0.0, w = 1.0, h = 1.0;
  if (g.vertex_count() > 0) {
    const BoundingBox b = d.bounds();
    const Point size = b.sizes();
    const double pad_x = 0.05 * (size.x() > 0 ? size.x() : 1.0);
    const double pad_y = 0.05 * (size.y() > 0 ? size.y() : 1.0);
    x0 = b.min().x() - pad_x;
    y0 = b.min().y() - pad_y;
    w = size.x() + 2 * pad_x;
    h = size.y() + 2 * pad_y;
  }
  const double r = options.vertex_radius * std::max(w, h);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" << shortest(x0)
      << ' ' << shortest(y0) << ' ' << shortest(w) << ' ' << shortest(h) << "\">\n";
  out << "<g stroke=\"#333\" stroke-width=\"" << shortest(r / 3) << "\">\n";
  for (const Edge& e : g.edges()) {
    const Point a = d.position(e.u);
    const Point b = d.position(e.v);
    out << "<line x1=\"" << shortest(a.x()) << "\" y1=\"" << shortest(a.y()) << "\" x2=\""
        << shortest(b.x()) << "\" y2=\"" << shortest(b.y()) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#1f77b4\">\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const Point p = d.position(v);
    out << "<circle cx=\"" << shortest(p.x()) << "\" cy=\"" << shortest(p.y()) << "\" r=\""
        << shortest(r) << "\"/>\n";
  }
  out << "</g>\n";
  if (options.mark_crossings && g.edge_count() > 1) {
    std::vector<Segment> segs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) segs.push_back(d.segment(e));
    out << "<g fill=\"#d62728\" class=\"crossings\">\n";
    for (const auto& [i, j] : enumerate_intersections(segs)) {
      if (g.edge(i).adjacent_to(g.edge(j))) continue;
      if (!segments_intersect(segs[i], segs[j], IntersectionMode::Proper)) continue;
      const Point p = line_intersection(segs[i], segs[j]);
      out << "<circle class=\"crossing\" cx=\"" << shortest(p.x()) << "\" cy=\""
          << shortest(p.y()) << "\" r=\"" << shortest(0.6 * r) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace crossmin
