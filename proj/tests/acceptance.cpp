// Acceptance gate: the ten product criteria, one pass/fail line each.
// Exits nonzero when any criterion fails.

#include "icdraw/cactus_drawer.hpp"
#include "icdraw/euclid_certify.hpp"
#include "icdraw/formats.hpp"
#include "icdraw/generators.hpp"
#include "icdraw/graph.hpp"
#include "icdraw/hyperbolic.hpp"
#include "icdraw/schnyder.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace icdraw;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int crit, bool ok, const std::string& detail) {
  std::cout << "criterion " << crit << ": " << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n" << std::flush;
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(ICDRAW_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

fs::path tmp_dir() {
  fs::path p = fs::temp_directory_path() / "icdraw_acceptance";
  fs::create_directories(p);
  return p;
}

// per-block eps/2 budget of the cactus construction, eps decaying as
// eps/(4k) below a block with k children
bool angle_budget_ok(const BinaryCactus& c, const EuclidDrawingQ& d, int bi,
                     Vec2 align, double eps_deg) {
  int r = c.bc.root_vertex[bi];
  int k = int(c.order[bi].size());
  for (int v : c.order[bi]) {
    Vec2 e{to_double(d.coords[v].x - d.coords[r].x),
           to_double(d.coords[v].y - d.coords[r].y)};
    if (e.is_zero() || angle_between(e, align) > eps_deg / 2 + 1e-9) return false;
  }
  for (int v : c.order[bi])
    for (int sub : c.blocks_rooted_at(v)) {
      Vec2 a{to_double(d.coords[v].x - d.coords[r].x),
             to_double(d.coords[v].y - d.coords[r].y)};
      if (!angle_budget_ok(c, d, sub, a, eps_deg / (4 * k))) return false;
    }
  return true;
}

std::vector<fs::path> g_cactus_drawings;  // criterion 1 outputs, reused in 2

// ---- criterion 1: cactus-ic pipeline through the CLI ----
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  fs::path dir = tmp_dir();
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 100 && ok; ++i) {
    int depth = 1 + i % 6;
    int fan = 2 + i % 3;
    fs::path gp = dir / ("c1_g" + std::to_string(i) + ".json");
    fs::path dp = dir / ("c1_d" + std::to_string(i) + ".json");
    std::ostringstream gen;
    gen << "gen random-dt-cactus --seed " << (1000 + i) << " --depth " << depth
        << " --max-fan " << fan << " -o " << gp;
    if (run_cli(gen.str()) != 0) { ok = false; detail = "gen failed"; break; }
    if (run_cli("draw --alg cactus-ic --epsilon 30 -i " + gp.string() + " -o " +
                dp.string()) != 0) {
      ok = false; detail = "draw failed"; break;
    }
    if (run_cli("certify --property ic -i " + dp.string() + " --graph " + gp.string()) !=
        0) {
      ok = false; detail = "certify exit != 0 at seed " + std::to_string(1000 + i);
      break;
    }
    GraphFile gf = graph_from_json(read_file(gp.string()));
    BinaryCactus c = as_downward_triangulated_cactus(gf.g);
    if (c.g.n > 200) { ok = false; detail = "instance too large"; break; }
    DrawingFile df = drawing_from_json(read_file(dp.string()));
    EuclidDrawingQ d(df.coords_q, Rational(0));
    if (!angle_budget_ok(c, d, c.bc.root_block, Vec2{0, -1}, 30.0)) {
      ok = false; detail = "angle budget violated at seed " + std::to_string(1000 + i);
      break;
    }
    g_cactus_drawings.push_back(dp);
  }
  double el = seconds_since(t0);
  if (ok && el > 60.0) { ok = false; detail = "runtime over budget"; }
  if (ok) detail = "100 instances, " + std::to_string(el).substr(0, 5) + " s";
  report(1, ok, detail);
}

// ---- criterion 2: detour bounds over the criterion-1 witnesses ----
void criterion2() {
  bool ok = !g_cactus_drawings.empty();
  double max_ic = 0, max_sa = 0;
  long long n_wit = 0;
  for (const fs::path& dp : g_cactus_drawings) {
    DrawingFile df = drawing_from_json(read_file(dp.string()));
    EuclidDrawingQ d(df.coords_q, Rational(0));
    if (!df.witnesses) { ok = false; break; }
    for (const auto& [key, path] : *df.witnesses) {
      if (!check_ic_path(d, path) || !check_sa_path(d, path)) { ok = false; break; }
      double dt = detour(d, path);
      max_ic = std::max(max_ic, dt);
      max_sa = std::max(max_sa, dt);
      ++n_wit;
    }
    if (!ok) break;
  }
  if (max_ic > 2.094 + 1e-6 || max_sa > 5.334) ok = false;
  std::ostringstream ss;
  ss << n_wit << " witnesses, max detour " << max_ic;
  report(2, ok, ss.str());
}

// ---- criterion 3: 30-degree Schnyder drawings through the CLI ----
void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  fs::path dir = tmp_dir();
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 100 && ok; ++i) {
    int n = std::min(300, 4 + 3 * i);
    fs::path gp = dir / ("c3_g" + std::to_string(i) + ".json");
    fs::path dp = dir / ("c3_d" + std::to_string(i) + ".json");
    std::ostringstream gen;
    gen << "gen random-3tree --n " << n << " --seed " << (2000 + i) << " -o " << gp;
    if (run_cli(gen.str()) != 0) { ok = false; detail = "gen failed"; break; }
    if (run_cli("draw --alg schnyder --alpha 30 -i " + gp.string() + " -o " +
                dp.string()) != 0) {
      ok = false; detail = "draw failed at n=" + std::to_string(n); break;
    }
    if (run_cli("certify --property ic -i " + dp.string() + " --graph " + gp.string()) !=
        0) {
      ok = false; detail = "IC certification failed at n=" + std::to_string(n); break;
    }
    GraphFile gf = graph_from_json(read_file(gp.string()));
    DrawingFile df = drawing_from_json(read_file(dp.string()));
    EuclidDrawing d = make_drawing(df.coords_f);
    if (!df.labeling) { ok = false; detail = "labeling missing"; break; }
    SchnyderLabeling L = labeling_from_file(*df.labeling, gf.g.n);
    if (!check_planar_drawing_exact(d, gf.g)) {
      ok = false; detail = "not planar at n=" + std::to_string(n); break;
    }
    if (!check_alpha_schnyder(d, gf.g, L, 30.0)) {
      ok = false; detail = "cone check failed at n=" + std::to_string(n); break;
    }
  }
  double el = seconds_since(t0);
  if (ok && el > 120.0) { ok = false; detail = "runtime over budget"; }
  if (ok) detail = "100 instances, " + std::to_string(el).substr(0, 5) + " s";
  report(3, ok, detail);
}

// ---- criterion 4: classical Schnyder cross-check ----
void criterion4() {
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 100 && ok; ++i) {
    int n = std::min(300, 4 + 3 * i);
    auto [g, ord] = gen_random_planar_3tree(2000 + i, n);
    SchnyderLabeling L = schnyder_label_3tree(g, ord);
    long long faces = 2LL * n - 4;
    for (int v = 0; v < n; ++v) {
      auto c = region_faces(g, ord, L, v);
      if (c[0] + c[1] + c[2] != faces - 1) {
        ok = false; detail = "face-count identity failed"; break;
      }
    }
    if (!ok) break;
    EuclidDrawing d = schnyder_face_count_drawing(g, ord, L);
    if (!check_alpha_schnyder(d, g, L, 60.0)) {
      ok = false; detail = "60-degree check failed at n=" + std::to_string(n);
    }
  }
  report(4, ok, detail);
}

// ---- criterion 5: hexagon-tiling binary tree drawings ----
Graph complete_binary_tree(int depth) {
  std::vector<std::pair<int, int>> edges;
  int next = 1;
  std::function<void(int, int)> sub = [&](int parent, int d) {
    int v = next++;
    edges.emplace_back(parent, v);
    if (d > 0) { sub(v, d - 1); sub(v, d - 1); }
  };
  for (int i = 0; i < 3; ++i) sub(0, depth - 1);
  Graph g(next);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void criterion5() {
  bool ok = true;
  std::string detail;
  double R = std::acosh(std::sqrt(3.0));
  if (std::abs(std::cosh(R) - std::sqrt(3.0)) > 1e-12) {
    ok = false; detail = "circumradius identity";
  }
  for (int depth = 1; depth <= 6 && ok; ++depth) {
    HypDrawing d = draw_binary_tree_hyp(complete_binary_tree(depth));
    double len0 = hyp_distance(d.coords[d.g.edges[0].first],
                               d.coords[d.g.edges[0].second]);
    for (auto [u, v] : d.g.edges)
      if (std::abs(hyp_distance(d.coords[u], d.coords[v]) - len0) > 1e-9 * len0) {
        ok = false; detail = "arc lengths differ at depth " + std::to_string(depth);
      }
    for (auto [u, w, m] : d.edge_mid) {
      double a = hyp_distance(d.coords[u], d.coords[m]);
      double b = hyp_distance(d.coords[m], d.coords[w]);
      if (std::abs(a - b) > 1e-9 * len0) { ok = false; detail = "halves unequal"; }
      Vec2 t1 = geodesic_tangent(geodesic_through(d.coords[m], d.coords[u]),
                                 d.coords[m], d.coords[u]);
      Vec2 t2 = geodesic_tangent(geodesic_through(d.coords[m], d.coords[w]),
                                 d.coords[m], d.coords[w]);
      if (std::abs(angle_between(t1, t2) - 180.0) > 1e-9) {
        ok = false; detail = "halves not collinear";
      }
    }
    for (int v = 0; v < d.g.n && ok; ++v) {
      if (d.g.degree(v) != 3) continue;
      std::vector<Vec2> tans;
      for (int w : d.g.adj[v])
        tans.push_back(geodesic_tangent(geodesic_through(d.coords[v], d.coords[w]),
                                        d.coords[v], d.coords[w]));
      for (size_t i = 0; i < 3; ++i)
        for (size_t j = i + 1; j < 3; ++j)
          if (std::abs(angle_between(tans[i], tans[j]) - 120.0) > 1e-9) {
            ok = false; detail = "incident angle off at depth " + std::to_string(depth);
          }
    }
    if (ok && !hyp_discrete_ic_check(d, d.g.edges)) {
      ok = false; detail = "discrete check failed at depth " + std::to_string(depth);
    }
    if (ok && !hyp_sampled_normal_check(d, d.g.edges, 200)) {
      ok = false; detail = "normal check failed at depth " + std::to_string(depth);
    }
  }
  report(5, ok, detail.empty() ? "depths 1..6" : detail);
}

// ---- criterion 6: hyperbolic drawings of random edge/cycle cactuses ----
BinaryCactus random_edge_cycle_cactus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Graph g(1);
  // grow blocks at attachment vertices whose tree degree allows them:
  // cycles add 2 tree edges at the attach vertex, edges add 1. Depth is
  // capped so the hexagon-tiling construction stays inside the disk margin.
  constexpr int kMaxDepth = 14;
  struct Slot { int v, spare, depth; };
  std::vector<Slot> slots{{0, 3, 0}};
  while (!slots.empty() && g.n < 90) {
    size_t si = rng() % slots.size();
    auto [v, spare, depth] = slots[si];
    slots.erase(slots.begin() + si);
    if (rng() % 4 == 0) continue;  // leave some attachment points bare
    int len = 3 + int(rng() % 4);
    bool cycle = spare >= 2 && depth + len - 1 <= kMaxDepth && rng() % 3 != 0;
    if (cycle) {
      int first = g.n;
      for (int i = 0; i < len - 1; ++i) {
        int w = g.n;
        g.adj.emplace_back();
        ++g.n;
        g.add_edge(i == 0 ? v : w - 1, w);
      }
      g.add_edge(v, g.n - 1);
      // interior cycle vertices have tree degree 2: room for an edge block;
      // the last vertex has tree degree 1: room for a cycle
      for (int w = first; w < g.n - 1; ++w) slots.push_back({w, 1, depth + 1 + (w - first)});
      slots.push_back({g.n - 1, 2, depth + len - 1});
    } else if (depth + 1 <= kMaxDepth) {
      int w = g.n;
      g.adj.emplace_back();
      ++g.n;
      g.add_edge(v, w);
      slots.push_back({w, 2, depth + 1});
    }
  }
  if (g.n == 1) {
    g.adj.emplace_back();
    ++g.n;
    g.add_edge(0, 1);
  }
  return as_binary_cactus(g, 0);
}

void criterion6() {
  bool ok = true;
  std::string detail;
  for (int i = 0; i < 50 && ok; ++i) {
    BinaryCactus c = random_edge_cycle_cactus(3000 + i);
    if (c.g.n > 100) { ok = false; detail = "instance too large"; break; }
    HypDrawing d;
    try {
      d = draw_binary_cactus_hyp(c);
    } catch (const std::exception& e) {
      ok = false; detail = std::string("draw failed: ") + e.what(); break;
    }
    if (!hyp_planar(d)) { ok = false; detail = "not planar"; break; }
    std::vector<std::pair<int, int>> tree_edges;
    for (auto [u, v] : d.g.edges) {
      bool closing = false;
      for (auto [a, b] : d.closing_arcs)
        if ((a == u && b == v) || (a == v && b == u)) closing = true;
      if (!closing) tree_edges.push_back({u, v});
    }
    if (!certify_tree_hyp(d, tree_edges, kDefaultTol, 40)) {
      ok = false; detail = "tree part not certified at seed " + std::to_string(3000 + i);
    }
  }
  report(6, ok, ok ? "50 instances" : detail);
}

// ---- criterion 7: oracle equivalence of the path finder ----
void criterion7() {
  std::mt19937_64 rng(4000);
  std::uniform_real_distribution<double> U(-1, 1);
  bool ok = true;
  std::string detail;
  long long disagreements = 0;
  for (int it = 0; it < 500 && ok; ++it) {
    int n = 4 + int(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::vector<Point2> c;
    for (int v = 0; v < n; ++v) c.push_back({U(rng), U(rng)});
    EuclidDrawing d = make_drawing(c);

    auto brute = [&](int s, int t, SearchMode m) {
      bool found = false;
      std::vector<int> path{s};
      std::vector<char> vis(n, 0);
      vis[s] = 1;
      std::function<void()> go = [&]() {
        if (found) return;
        if (path.back() == t) {
          if (m == SearchMode::SA ? check_sa_path(d, path) : check_ic_path(d, path))
            found = true;
          return;
        }
        for (int w : g.adj[path.back()]) {
          if (vis[w] || found) continue;
          vis[w] = 1;
          path.push_back(w);
          go();
          path.pop_back();
          vis[w] = 0;
        }
      };
      go();
      return found;
    };

    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) {
        if (s == t) continue;
        for (SearchMode m : {SearchMode::SA, SearchMode::IC}) {
          SearchResult r = find_sa_path(d, g, s, t, m);
          if (r.budget_exceeded || r.path.has_value() != brute(s, t, m)) ++disagreements;
          if (r.path) {
            bool valid = m == SearchMode::SA ? check_sa_path(d, *r.path)
                                             : check_ic_path(d, *r.path);
            if (!valid) ++disagreements;
          }
        }
      }
  }
  if (disagreements != 0) {
    ok = false;
    detail = std::to_string(disagreements) + " disagreements";
  } else {
    detail = "500 graphs, zero disagreements";
  }
  report(7, ok, detail);
}

// ---- criterion 8: resolution trend on the strongly-monotone family ----
void criterion8() {
  bool ok = true;
  std::string detail;
  double prev = 0;
  std::ostringstream vals;
  for (int k = 1; k <= 5 && ok; ++k) {
    BinaryCactus c = gen_strmon_cactus(k);
    EuclidDrawingQ d = draw_cactus_ic_q(c, 30.0);
    double r = resolution(d);
    vals << (k > 1 ? " " : "") << r;
    if (!(r > prev)) { ok = false; detail = "not increasing at k=" + std::to_string(k); }
    if (k >= 3 && !(r > std::pow(2.0, k))) {
      ok = false; detail = "below 2^k at k=" + std::to_string(k);
    }
    prev = r;
  }
  double t = std::tan(deg2rad(360.0 / 11.0));
  if (!(t * t < 0.414)) { ok = false; detail = "tan^2(360/11) check"; }
  report(8, ok, ok ? "resolutions " + vals.str() : detail);
}

// ---- criterion 9: structural counts ----
void criterion9() {
  bool ok = true;
  std::string detail;
  for (int n = 0; n <= 10; ++n)
    if (gen_square_cactus(n).g.n != 6 * (1 << n) - 2) {
      ok = false; detail = "square-cactus count at n=" + std::to_string(n);
    }
  int prev = gen_strmon_cactus(1).g.n;
  for (int k = 2; k <= 6; ++k) {
    int cur = gen_strmon_cactus(k).g.n;
    if (cur - prev != 44) { ok = false; detail = "strmon increment at k=" + std::to_string(k); }
    prev = cur;
  }
  // the doubling family for n >= 10 exists and is well formed; no drawing
  // claim is made for it (see README)
  BinaryCactus g10 = gen_square_cactus(10);
  if (!as_binary_cactus(g10.g, g10.root()).g.connected()) { ok = false; detail = "G_10"; }
  report(9, ok, detail.empty() ? "counts verified, G_n generated" : detail);
}

// ---- criterion 10: invariant property suites ----
void criterion10() {
  std::mt19937_64 rng(5000);
  std::uniform_real_distribution<double> U(-1, 1);
  bool ok = true;
  std::string detail;

  // hierarchy + angle-bound implication on random polygonal paths
  int cases = 0;
  while (cases < 10000 && ok) {
    int k = 2 + int(rng() % 7);
    std::vector<Point2> c;
    for (int i = 0; i < k; ++i) c.push_back({U(rng), U(rng)});
    bool dup = false;
    for (int i = 0; i < k && !dup; ++i)
      for (int j = i + 1; j < k; ++j)
        if ((c[i] - c[j]).norm() < 1e-6) dup = true;
    if (dup) continue;
    EuclidDrawing d = make_drawing(c);
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    bool sa = check_sa_path(d, p), ic = check_ic_path(d, p);
    if (check_lemma3(d, p) && !ic) { ok = false; detail = "Lemma 3 implication"; }
    if (ic && (!sa || !check_strongly_monotone_path(d, p) || !check_monotone_path(d, p))) {
      ok = false; detail = "IC hierarchy";
    }
    if (sa && !check_greedy_path(d, p)) { ok = false; detail = "SA => greedy"; }
    if (check_strongly_monotone_path(d, p) && !check_monotone_path(d, p)) {
      ok = false; detail = "strmon => monotone";
    }
    ++cases;
  }

  // for SA halves, concatenation is SA iff rho2 lies in the front
  cases = 0;
  while (cases < 10000 && ok) {
    int k1 = 2 + int(rng() % 3), k2 = 2 + int(rng() % 3);
    std::vector<Point2> c;
    for (int i = 0; i < k1 + k2 - 1; ++i) c.push_back({U(rng), U(rng)});
    bool dup = false;
    for (size_t i = 0; i < c.size() && !dup; ++i)
      for (size_t j = i + 1; j < c.size(); ++j)
        if ((c[i] - c[j]).norm() < 1e-6) dup = true;
    if (dup) continue;
    EuclidDrawing d = make_drawing(c);
    std::vector<int> r1, r2, all;
    for (int i = 0; i < k1; ++i) r1.push_back(i);
    for (int i = k1 - 1; i < k1 + k2 - 1; ++i) r2.push_back(i);
    for (int i = 0; i < k1 + k2 - 1; ++i) all.push_back(i);
    if (!check_sa_path(d, r1) || !check_sa_path(d, r2)) continue;
    if (check_concat(d, r1, r2) != check_sa_path(d, all)) {
      ok = false; detail = "concatenation equivalence";
    }
    ++cases;
  }

  // slope disjointness of construction outputs
  for (int i = 0; i < 100 && ok; ++i) {
    BinaryCactus c = gen_random_dt_cactus(6000 + i, 3, 4);
    EuclidDrawing d = draw_cactus_ic(c, 30.0);
    if (!check_slope_disjointness(d, c)) { ok = false; detail = "slope disjointness"; }
  }

  // normal-criterion claim on sampled lower-half points
  cases = 0;
  while (cases < 10000 && ok) {
    double y = 0.05 + 0.85 * std::abs(U(rng));
    double px = U(rng) * 0.9, py = U(rng) * 0.9;
    if (px * px + py * py >= 0.85 || py >= -1e-6) continue;
    if (!(hyp_distance(HPoint{px, py}, HPoint{0, -y}) <
          hyp_distance(HPoint{px, py}, HPoint{0, y}))) {
      ok = false; detail = "lower-half distance claim";
    }
    ++cases;
  }

  report(10, ok, ok ? "all property suites passed" : detail);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures == 0) {
    std::cout << "acceptance: all criteria passed\n";
    return 0;
  }
  std::cout << "acceptance: " << g_failures << " criteria failed\n";
  return 1;
}
