#include <doctest.h>

#include "icdraw/formats.hpp"
#include "icdraw/generators.hpp"
#include "icdraw/hyperbolic.hpp"
#include "icdraw/schnyder.hpp"

#include <fstream>
#include <functional>
#include <sstream>

using namespace icdraw;

namespace {

Graph complete_binary_tree(int depth) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  std::function<void(int, int)> sub = [&](int parent, int d) {
    int v = next++;
    edges.emplace_back(parent, v);
    if (d > 0) {
      sub(v, d - 1);
      sub(v, d - 1);
    }
  };
  for (int i = 0; i < 3; ++i) sub(0, depth - 1);
  Graph g(next);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_CASE("graph file round trip") {
  GraphFile f;
  f.g = Graph(4);
  f.g.add_edge(0, 1);
  f.g.add_edge(1, 2);
  f.g.add_edge(2, 3);
  f.outer_face = {{0, 1, 2}};
  GraphFile back = graph_from_json(graph_to_json(f));
  CHECK(back.g.n == 4);
  CHECK(back.g.edges == f.g.edges);
  REQUIRE(back.outer_face.has_value());
  CHECK(*back.outer_face == *f.outer_face);
}

TEST_CASE("drawing file round trip, float backend") {
  DrawingFile f;
  f.coords_f = {{0.125, -3.5}, {1.0 / 3.0, 2.718281828459045}};
  f.witnesses = WitnessMap{{{0, 1}, {0, 1}}};
  DrawingFile back = drawing_from_json(drawing_to_json(f));
  CHECK(back.model == "euclid");
  CHECK(back.backend == "float64");
  REQUIRE(back.coords_f.size() == 2);
  CHECK(back.coords_f[0].x == f.coords_f[0].x);
  CHECK(back.coords_f[1].y == f.coords_f[1].y);  // full precision survives
  REQUIRE(back.witnesses.has_value());
  CHECK(back.witnesses->at({0, 1}) == std::vector<int>{0, 1});
}

TEST_CASE("drawing file round trip, exact rationals") {
  DrawingFile f;
  f.backend = "rational";
  Rational huge = Rational(1) / (Rational("340282366920938463463374607431768211456"));
  f.coords_q = {{Rational(22, 7), -huge}, {huge * huge, Rational(0)}};
  std::string text = drawing_to_json(f);
  CHECK(text.find("22/7") != std::string::npos);  // p/q serialization
  DrawingFile back = drawing_from_json(text);
  REQUIRE(back.coords_q.size() == 2);
  CHECK(back.coords_q[0].x == f.coords_q[0].x);
  CHECK(back.coords_q[0].y == f.coords_q[0].y);
  CHECK(back.coords_q[1].x == f.coords_q[1].x);
}

TEST_CASE("labeling round trip") {
  auto [g, ord] = gen_random_planar_3tree(5, 12);
  SchnyderLabeling L = schnyder_label_3tree(g, ord);
  SchnyderLabeling back = labeling_from_file(labeling_to_file(L), g.n);
  CHECK(back.r == L.r);
  CHECK(back.g == L.g);
  CHECK(back.b == L.b);
  CHECK(back.parent == L.parent);
}

TEST_CASE("poincare drawing round trip") {
  HypDrawing h = draw_binary_tree_hyp(complete_binary_tree(2));
  DrawingFile f;
  f.model = "poincare";
  f.hyp = h;
  DrawingFile back = drawing_from_json(drawing_to_json(f));
  REQUIRE(back.hyp.has_value());
  CHECK(back.hyp->g.edges == h.g.edges);
  CHECK(back.hyp->orig_n == h.orig_n);
  REQUIRE(back.hyp->coords.size() == h.coords.size());
  for (size_t i = 0; i < h.coords.size(); ++i) {
    CHECK(back.hyp->coords[i].x == doctest::Approx(h.coords[i].x).epsilon(1e-15));
    CHECK(back.hyp->coords[i].y == doctest::Approx(h.coords[i].y).epsilon(1e-15));
  }
}

TEST_CASE("report round trip and witness re-verification") {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  EuclidDrawing d = make_drawing({{0, 0}, {1, 0.2}, {2, 0.1}});
  Certificate cert = certify_drawing(d, g, PathProperty::IC);
  REQUIRE(cert.all_witnessed());
  ReportFile rf = make_report(cert, "graph-bytes", "drawing-bytes");
  ReportFile back = report_from_json(report_to_json(rf));
  CHECK(back.property == "ic");
  CHECK(back.all_witnessed);
  CHECK(back.graph_hash == content_hash("graph-bytes"));
  CHECK(back.pairs.size() == cert.pairs.size());
  // every stored witness re-verifies
  for (const auto& pr : back.pairs) {
    REQUIRE(pr.status == PairStatus::witnessed);
    CHECK(check_ic_path(d, pr.witness));
  }
}

TEST_CASE("property names") {
  for (PathProperty p : {PathProperty::SA, PathProperty::IC, PathProperty::greedy,
                         PathProperty::monotone, PathProperty::strongly_monotone})
    CHECK(property_from_name(property_name(p)) == p);
  CHECK_THROWS(property_from_name("nonsense"));
}

TEST_CASE("SVG determinism and structure") {
  HypDrawing h = draw_binary_tree_hyp(complete_binary_tree(2));
  DrawingFile f;
  f.model = "poincare";
  f.hyp = h;
  std::string a = render_svg(f, Graph());
  std::string b = render_svg(f, Graph());
  CHECK(a == b);
  CHECK(a.find("<svg") != std::string::npos);
  CHECK(a.find("circle") != std::string::npos);  // unit circle reference ring
  CHECK(a.find("A ") != std::string::npos);      // true arcs, not polylines

  Graph pg(2);
  pg.add_edge(0, 1);
  DrawingFile ef;
  ef.coords_f = {{0, 0}, {1, 1}};
  std::string svg = render_svg(ef, pg);
  CHECK(svg.find("line") != std::string::npos);
}

TEST_CASE("hexagon tiling depth 2 matches the golden SVG") {
  HypDrawing h = draw_binary_tree_hyp(complete_binary_tree(2));
  DrawingFile f;
  f.model = "poincare";
  f.hyp = h;
  std::string svg = render_svg(f, Graph());
  std::string golden = read_file(std::string(ICDRAW_GOLDEN_DIR) + "/hex_depth2.svg");
  CHECK(svg == golden);
}
