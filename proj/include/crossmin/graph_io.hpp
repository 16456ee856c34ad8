#pragma once

#include "crossmin/graph.hpp"

#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <string>

namespace crossmin {

/// Malformed input text (bad token, count mismatch, ...).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParsedGraph {
  Graph graph;
  std::size_t duplicates_dropped = 0;
  std::size_t loops_dropped = 0;
};

/// Whitespace-separated "u v" pairs; lines starting with '#' or '%' are
/// comments. The vertex count is one more than the largest id.
ParsedGraph parse_edge_list(std::istream& in);

void write_edge_list(std::ostream& out, const Graph& g);

enum class DrawingFormat { Json, Csv };

/// JSON {"n": int, "positions": [[x, y], ...]} or CSV "id,x,y" with a header.
/// Numbers are written in shortest round-trip form.
void write_drawing(std::ostream& out, const Drawing& d, DrawingFormat format);
Drawing read_drawing(std::istream& in, DrawingFormat format, std::shared_ptr<const Graph> graph);

/// Json unless the path ends in ".csv".
DrawingFormat format_for_path(const std::string& path);

struct SvgOptions {
  bool mark_crossings = false;
  /// Vertex radius as a fraction of the larger viewBox side.
  double vertex_radius = 0.006;
};

std::string to_svg(const Drawing& d, const SvgOptions& options = {});

}  // namespace crossmin
