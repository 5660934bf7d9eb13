#include <CLI11.hpp>

#include "icdraw/cactus_drawer.hpp"
#include "icdraw/euclid_certify.hpp"
#include "icdraw/formats.hpp"
#include "icdraw/generators.hpp"
#include "icdraw/graph.hpp"
#include "icdraw/hyperbolic.hpp"
#include "icdraw/schnyder.hpp"

#include <cstdint>
#include <iostream>
#include <string>

using namespace icdraw;

namespace {

// exit codes: 0 success / all pairs witnessed, 1 property failure,
// 2 usage or schema error

Graph tree_from_file(const GraphFile& gf) { return gf.g; }

int run_gen(const std::string& family, int k, int n, std::uint64_t seed, int depth,
            int max_fan, const std::string& out) {
  GraphFile gf;
  if (family == "strmon-cactus") {
    gf.g = gen_strmon_cactus(k).g;
  } else if (family == "strmon-tree") {
    gf.g = gen_strmon_tree(k);
  } else if (family == "square-cactus") {
    gf.g = gen_square_cactus(n).g;
  } else if (family == "random-dt-cactus") {
    gf.g = gen_random_dt_cactus(seed, depth, max_fan).g;
  } else if (family == "random-3tree") {
    gf.g = gen_random_planar_3tree(seed, n).first;
    gf.outer_face = {{0, 1, 2}};
  } else {
    std::cerr << "unknown family: " << family << "\n";
    return 2;
  }
  write_file(out, graph_to_json(gf));
  return 0;
}

int run_draw(const std::string& alg, double epsilon, double alpha, const std::string& in,
             const std::string& out) {
  GraphFile gf = graph_from_json(read_file(in));
  DrawingFile df;
  if (alg == "cactus-ic") {
    BinaryCactus c = as_downward_triangulated_cactus(gf.g);
    // exact rational output: deep recursions shrink far below float range
    EuclidDrawingQ d = draw_cactus_ic_q(c, epsilon);
    df.backend = "rational";
    df.coords_q = d.coords;
    df.witnesses = cactus_witnesses(c);
  } else if (alg == "schnyder" || alg == "schnyder-classical") {
    std::array<int, 3> outer = gf.outer_face.value_or(std::array<int, 3>{0, 1, 2});
    EliminationOrder order = recognize_3tree(gf.g, outer);
    SchnyderLabeling L = schnyder_label_3tree(gf.g, order);
    EuclidDrawing d = alg == "schnyder"
                          ? draw_alpha_schnyder(gf.g, order, alpha).first
                          : schnyder_face_count_drawing(gf.g, order, L);
    df.coords_f = d.coords;
    df.labeling = labeling_to_file(L);
    if (alg == "schnyder" && alpha <= 30.0) df.witnesses = schnyder_witnesses(L, d);
  } else if (alg == "hyp-tree") {
    df.model = "poincare";
    df.hyp = draw_binary_tree_hyp(tree_from_file(gf));
  } else if (alg == "k14") {
    df.model = "poincare";
    df.hyp = draw_k14_subdivision(tree_from_file(gf));
  } else if (alg == "hyp-cactus") {
    df.model = "poincare";
    df.hyp = draw_binary_cactus_hyp(as_binary_cactus(gf.g));
  } else {
    std::cerr << "unknown algorithm: " << alg << "\n";
    return 2;
  }
  write_file(out, drawing_to_json(df));
  return 0;
}

int run_certify(const std::string& prop_name, const std::string& drawing_path,
                const std::string& graph_path, long long budget,
                const std::string& report_path) {
  std::string gtext = read_file(graph_path), dtext = read_file(drawing_path);
  GraphFile gf = graph_from_json(gtext);
  DrawingFile df = drawing_from_json(dtext);
  if (df.model != "euclid") {
    std::cerr << "certify: only euclid drawings are certified here\n";
    return 2;
  }
  PathProperty prop = property_from_name(prop_name);
  const WitnessMap* w = df.witnesses ? &*df.witnesses : nullptr;
  Certificate cert;
  if (df.backend == "rational") {
    EuclidDrawingQ d(df.coords_q, Rational(0));
    if (int(d.coords.size()) != gf.g.n) {
      std::cerr << "certify: drawing does not cover the graph vertices\n";
      return 2;
    }
    cert = certify_drawing(d, gf.g, prop, w, budget);
  } else {
    EuclidDrawing d = make_drawing(df.coords_f);
    if (int(d.coords.size()) != gf.g.n) {
      std::cerr << "certify: drawing does not cover the graph vertices\n";
      return 2;
    }
    cert = certify_drawing(d, gf.g, prop, w, budget);
  }
  if (!report_path.empty()) {
    ReportFile rf = make_report(cert, gtext, dtext);
    write_file(report_path, report_to_json(rf));
  }
  return cert.all_witnessed() ? 0 : 1;
}

int run_measure(const std::string& drawing_path, const std::string& graph_path) {
  GraphFile gf = graph_from_json(read_file(graph_path));
  DrawingFile df = drawing_from_json(read_file(drawing_path));
  if (df.model != "euclid") {
    std::cerr << "measure: only euclid drawings are measured here\n";
    return 2;
  }
  if (df.backend == "rational") {
    // exact pipeline: differences are computed in rationals before any
    // conversion, so tiny deep clusters do not collapse
    EuclidDrawingQ d(df.coords_q, Rational(0));
    std::cout << "resolution " << resolution(d) << "\n";
    std::cout << "planar " << (check_planar_drawing(d, gf.g) ? "yes" : "no") << "\n";
    if (df.witnesses) {
      double mx = 0;
      for (const auto& [key, path] : *df.witnesses) mx = std::max(mx, detour(d, path));
      std::cout << "max_detour " << mx << "\n";
    }
    return 0;
  }
  EuclidDrawing d = make_drawing(df.coords_f);
  std::cout << "resolution " << resolution(d) << "\n";
  std::cout << "planar " << (check_planar_drawing(d, gf.g) ? "yes" : "no") << "\n";
  if (df.witnesses) {
    double mx = 0;
    for (const auto& [key, path] : *df.witnesses) mx = std::max(mx, detour(d, path));
    std::cout << "max_detour " << mx << "\n";
  }
  try {
    BinaryCactus c = as_binary_cactus(gf.g);
    std::cout << "slope_disjoint " << (check_slope_disjointness(d, c) ? "yes" : "no") << "\n";
    for (size_t bi = 0; bi < c.shape.size(); ++bi) {
      if (c.shape[bi] != BlockShape::cycle) continue;
      std::vector<int> cyc{c.bc.root_vertex[bi]};
      for (int w : c.order[bi]) cyc.push_back(w);
      std::cout << "polygon_angles_block_" << bi << " "
                << (check_polygon_angles(d, cyc) ? "ok" : "violation") << "\n";
    }
  } catch (const std::exception&) {
    // not a binary cactus: skip the cactus linters
  }
  return 0;
}

int run_render(const std::string& drawing_path, const std::string& graph_path,
               const std::string& out) {
  DrawingFile df = drawing_from_json(read_file(drawing_path));
  Graph g;
  if (df.model == "euclid") {
    if (graph_path.empty()) {
      std::cerr << "render: euclid drawings need --graph\n";
      return 2;
    }
    g = graph_from_json(read_file(graph_path)).g;
  }
  write_file(out, render_svg(df, g));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"increasing-chord graph drawing and certification"};
  app.require_subcommand(1);

  std::string family, alg, prop, input, graph_path, output;
  int k = 1, n = 4, depth = 3, max_fan = 4;
  std::uint64_t seed = 1;
  double epsilon = 30.0, alpha = 30.0;
  long long budget = 1000000;

  auto* gen = app.add_subcommand("gen", "generate a graph family instance");
  gen->add_option("family", family)->required();
  gen->add_option("--k", k);
  gen->add_option("--n", n);
  gen->add_option("--seed", seed);
  gen->add_option("--depth", depth);
  gen->add_option("--max-fan", max_fan);
  gen->add_option("-o,--output", output)->required();

  auto* draw = app.add_subcommand("draw", "draw a graph");
  draw->add_option("--alg", alg)->required();
  draw->add_option("--epsilon", epsilon);
  draw->add_option("--alpha", alpha);
  draw->add_option("-i,--input", input)->required();
  draw->add_option("-o,--output", output)->required();

  auto* certify = app.add_subcommand("certify", "certify a drawing");
  certify->add_option("--property", prop)->required();
  certify->add_option("-i,--input", input)->required();
  certify->add_option("--graph", graph_path)->required();
  certify->add_option("--budget", budget);
  certify->add_option("-o,--output", output);

  auto* measure = app.add_subcommand("measure", "print drawing metrics");
  measure->add_option("-i,--input", input)->required();
  measure->add_option("--graph", graph_path)->required();

  auto* render = app.add_subcommand("render", "render a drawing to SVG");
  render->add_option("-i,--input", input)->required();
  render->add_option("--graph", graph_path);
  render->add_option("-o,--output", output)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(family, k, n, seed, depth, max_fan, output);
    if (draw->parsed()) return run_draw(alg, epsilon, alpha, input, output);
    if (certify->parsed()) return run_certify(prop, input, graph_path, budget, output);
    if (measure->parsed()) return run_measure(input, graph_path);
    if (render->parsed()) return run_render(input, graph_path, output);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
