#pragma once

// JSON file formats (graphs, drawings, certification reports) and SVG
// rendering. Rational coordinates serialize as "p/q" strings so they
// round-trip exactly.

#include "icdraw/euclid_certify.hpp"
#include "icdraw/graph.hpp"
#include "icdraw/hyperbolic.hpp"
#include "icdraw/schnyder.hpp"

#include <array>
#include <optional>
#include <string>

namespace icdraw {

struct GraphFile {
  int version{1};
  Graph g;
  std::optional<std::array<int, 3>> outer_face;
};

struct LabelingFile {
  std::array<int, 3> outer{};  // (r, g, b)
  // (tail, head, color) with orientation tail -> head
  std::vector<std::array<int, 3>> edges;
};

LabelingFile labeling_to_file(const SchnyderLabeling& L);
SchnyderLabeling labeling_from_file(const LabelingFile& f, int n);

struct DrawingFile {
  int version{1};
  std::string model{"euclid"};     // "euclid" | "poincare"
  std::string backend{"float64"};  // "float64" | "rational"
  std::vector<Point2> coords_f;    // euclid/float64 and poincare
  std::vector<Point2Q> coords_q;   // euclid/rational
  std::optional<HypDrawing> hyp;   // poincare: full drawn structure
  std::optional<LabelingFile> labeling;
  std::optional<WitnessMap> witnesses;
};

struct ReportFile {
  int version{1};
  std::string property;
  std::string tool_version;
  std::string graph_hash, drawing_hash;
  std::vector<PairResult> pairs;
  double max_detour{0};
  double resolution{0};
  bool planar{false};
  std::optional<double> angle_budget_max;
  bool all_witnessed{false};
};

std::string graph_to_json(const GraphFile& f);
GraphFile graph_from_json(const std::string& text);

std::string drawing_to_json(const DrawingFile& f);
DrawingFile drawing_from_json(const std::string& text);

std::string report_to_json(const ReportFile& f);
ReportFile report_from_json(const std::string& text);

ReportFile make_report(const Certificate& cert, const std::string& graph_text,
                       const std::string& drawing_text);

std::string property_name(PathProperty p);
PathProperty property_from_name(const std::string& name);

/// FNV-1a content hash, hex encoded; stable across platforms.
std::string content_hash(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

/// Deterministic SVG: straight segments for Euclidean drawings; true
/// circular arcs plus the unit circle for Poincare drawings.
std::string render_svg(const DrawingFile& f, const Graph& g);

}  // namespace icdraw
