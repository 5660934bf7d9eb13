#include <doctest.h>

#include "icdraw/cactus_drawer.hpp"
#include "icdraw/euclid_certify.hpp"
#include "icdraw/generators.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace icdraw;

namespace {

EuclidDrawing pts(std::vector<Point2> c) { return make_drawing(std::move(c)); }

std::vector<int> iota_path(int k) {
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  return p;
}

// direct definitions used as oracles against the halfplane formulations;
// both return the worst violation margin (positive = the property fails on
// the sampled points, very negative = comfortably satisfied)
double sa_triple_margin(const EuclidDrawing& d, const std::vector<int>& path) {
  // dist(a, c) must be non-increasing in a along the path, for every later
  // vertex c; along one segment that distance is unimodal with its minimum
  // at the clamped foot of the perpendicular from c, so the largest rise is
  // dist at the segment end minus dist at the foot
  double worst = 0.0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Point2 u = d.coords[path[i]], v = d.coords[path[i + 1]];
    Vec2 seg = v - u;
    for (size_t j = i + 1; j < path.size(); ++j) {
      Point2 c = d.coords[path[j]];
      double t = std::clamp((c - u).dot(seg) / seg.norm2(), 0.0, 1.0);
      Point2 foot = u + seg * t;
      worst = std::max(worst, (v - c).norm() - (foot - c).norm());
    }
  }
  return worst;
}

double ic_quadruple_margin(const EuclidDrawing& d, const std::vector<int>& path) {
  // dist(b, c) <= dist(a, e) for points a <= b <= c <= e along the path;
  // interior segment samples matter, vertex quadruples alone are too weak
  std::vector<Point2> pts;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Point2 u = d.coords[path[i]], v = d.coords[path[i + 1]];
    for (int s = 0; s < 4; ++s) pts.push_back(u + (v - u) * (s / 4.0));
  }
  pts.push_back(d.coords[path.back()]);
  size_t m = pts.size();
  std::vector<std::vector<double>> S(m, std::vector<double>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i; j < m; ++j) S[i][j] = (pts[i] - pts[j]).norm();
  // R[b][c] = min dist(a, e) over a <= b, e >= c (the best enclosing pair)
  std::vector<std::vector<double>> R = S;
  for (size_t b = 0; b < m; ++b)
    for (size_t c = m; c-- > b;) {
      if (b > 0) R[b][c] = std::min(R[b][c], R[b - 1][c]);
      if (c + 1 < m) R[b][c] = std::min(R[b][c], R[b][c + 1]);
    }
  double worst = -std::numeric_limits<double>::infinity();
  for (size_t b = 0; b < m; ++b)
    for (size_t c = b; c < m; ++c) worst = std::max(worst, S[b][c] - R[b][c]);
  return worst;
}

}  // namespace

TEST_CASE("check_sa_path examples") {
  CHECK(check_sa_path(pts({{0, 0}, {1, 0}, {2, 0}}), iota_path(3)));
  CHECK_FALSE(check_sa_path(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), iota_path(4)));
  CHECK(check_sa_path(pts({{0, 0}, {1, 0}, {1, 1}}), iota_path(3)));
  CHECK_THROWS_AS(check_sa_path(pts({{0, 0}, {1, 0}}), std::vector<int>{0, 1, 0}),
                  std::invalid_argument);
}

TEST_CASE("check_ic_path examples") {
  CHECK(check_ic_path(pts({{0, 0}, {1, 0}, {1, 1}}), iota_path(3)));
  CHECK_FALSE(check_ic_path(pts({{0, 0}, {1, 0}, {0.5, 0.1}}), iota_path(3)));
  CHECK(check_ic_path(pts({{0, 0}, {5, 3}}), iota_path(2)));
}

TEST_CASE("check_lemma3 examples") {
  CHECK(check_lemma3(pts({{0, 0}, {1, 0}, {2, 0}}), iota_path(3)));
  CHECK_FALSE(check_lemma3(pts({{0, 0}, {1, 0}, {0, 1}}), iota_path(3)));
  // fan base case at eps = 30: consecutive chord directions turn by alpha
  FanLayout lay = draw_fan(5, 30.0, Point2{0, 0}, Vec2{0, -1}, 1.0, true);
  EuclidDrawing d(lay.children, kDefaultTol);
  CHECK(check_lemma3(d, iota_path(5)));
}

TEST_CASE("front membership") {
  EuclidDrawing d2 = pts({{0, 0}, {1, 0}});
  FrontSet f2 = front(d2, iota_path(2));
  CHECK(f2.contains(Point2{2, 5}, kDefaultTol));
  CHECK_FALSE(f2.contains(Point2{0.5, 5}, kDefaultTol));

  EuclidDrawing d3 = pts({{0, 0}, {1, 0}, {1, 1}});
  FrontSet f3 = front(d3, iota_path(3));
  CHECK(f3.contains(Point2{2, 2}, kDefaultTol));
  CHECK_FALSE(f3.contains(Point2{2, 0.5}, kDefaultTol));
  CHECK(f3.path_is_sa);
}

TEST_CASE("check_concat examples") {
  EuclidDrawing d = pts({{0, 0}, {1, 0}, {2, 1}, {0.5, 1}});
  CHECK(check_concat(d, {0, 1}, {1, 2}));
  CHECK_FALSE(check_concat(d, {0, 1}, {1, 3}));
  CHECK(check_concat(d, {0, 1}, {1}));  // identity concatenation
  CHECK_THROWS_AS(check_concat(d, {0, 1}, {2, 3}), std::invalid_argument);
}

TEST_CASE("greedy, monotone, strongly monotone") {
  EuclidDrawing seg = pts({{0, 0}, {3, 1}});
  CHECK(check_greedy_path(seg, iota_path(2)));
  CHECK(check_monotone_path(seg, iota_path(2)));
  CHECK(check_strongly_monotone_path(seg, iota_path(2)));

  // overshoot: on the subpath 0..2 the second segment runs against dir(0,2)
  EuclidDrawing back = pts({{0, 0}, {2, 0}, {1, 0.1}, {3, 0.2}});
  CHECK_FALSE(check_strongly_monotone_path(back, iota_path(4)));
}

TEST_CASE("detour") {
  CHECK(detour(pts({{0, 0}, {2, 1}}), iota_path(2)) == doctest::Approx(1.0));
  CHECK(detour(pts({{0, 0}, {1, 0}, {1, 1}}), iota_path(3)) ==
        doctest::Approx(2.0 / std::sqrt(2.0)));
  CHECK_THROWS_AS(detour(pts({{0, 0}, {1, 1}}), std::vector<int>{0}),
                  std::invalid_argument);
}

TEST_CASE("resolution") {
  CHECK(resolution(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}})) ==
        doctest::Approx(std::sqrt(2.0)));
  CHECK(resolution(pts({{0, 0}, {5, 5}})) == doctest::Approx(1.0));
}

TEST_CASE("check_planar_drawing") {
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(check_planar_drawing(pts({{0, 0}, {1, 0}, {0, 1}}), tri));

  Graph k4(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  // square with both diagonals: the diagonals cross
  CHECK_FALSE(check_planar_drawing(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), k4));
}

TEST_CASE("find_sa_path on trees equals the direct path check") {
  Graph t(4);
  t.add_edge(0, 1);
  t.add_edge(1, 2);
  t.add_edge(2, 3);
  EuclidDrawing good = pts({{0, 0}, {1, 0}, {2, 0.5}, {3, 1.5}});
  EuclidDrawing bad = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(find_sa_path(good, t, 0, 3, SearchMode::SA).path.has_value());
  CHECK(check_sa_path(good, iota_path(4)));
  CHECK_FALSE(find_sa_path(bad, t, 0, 3, SearchMode::SA).path.has_value());
  CHECK_FALSE(check_sa_path(bad, iota_path(4)));
}

TEST_CASE("find_sa_path matches brute force on small random graphs") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> U(-1, 1);
  for (int it = 0; it < 60; ++it) {
    int n = 4 + int(rng() % 5);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::vector<Point2> c;
    for (int v = 0; v < n; ++v) c.push_back({U(rng), U(rng)});
    EuclidDrawing d = pts(c);

    // brute force over all simple s-t paths
    auto brute = [&](int s, int t, SearchMode m) {
      bool found = false;
      std::vector<int> path{s};
      std::vector<char> vis(n, 0);
      vis[s] = 1;
      std::function<void()> go = [&]() {
        if (found) return;
        if (path.back() == t) {
          bool ok = m == SearchMode::SA ? check_sa_path(d, path) : check_ic_path(d, path);
          if (ok) found = true;
          return;
        }
        for (int w : g.adj[path.back()]) {
          if (vis[w]) continue;
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
          REQUIRE_FALSE(r.budget_exceeded);
          CHECK(r.path.has_value() == brute(s, t, m));
          if (r.path) {
            bool ok = m == SearchMode::SA ? check_sa_path(d, *r.path)
                                          : check_ic_path(d, *r.path);
            CHECK(ok);
          }
        }
      }
  }
}

TEST_CASE("certify_drawing basics") {
  Graph g2(2);
  g2.add_edge(0, 1);
  Certificate c2 = certify_drawing(pts({{0, 0}, {1, 1}}), g2, PathProperty::IC);
  CHECK(c2.all_witnessed());
  CHECK(c2.max_detour == doctest::Approx(1.0));

  // square-corner staircase drawing of a 4-path: some pair has no SA path
  Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  Certificate bad = certify_drawing(pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), p4,
                                    PathProperty::SA);
  CHECK_FALSE(bad.all_witnessed());
  bool some_exhausted = false;
  for (const auto& pr : bad.pairs)
    if (pr.status == PairStatus::exhausted_no_path) some_exhausted = true;
  CHECK(some_exhausted);
}

TEST_CASE("property corpus: oracle agreement and class hierarchy") {
  // random short polygonal paths, halfplane / four-point oracles, and the
  // implication chain IC => SA => greedy, IC => strongly monotone => monotone
  std::mt19937_64 rng(202);
  std::uniform_real_distribution<double> U(-1, 1);
  int n_cases = 12000;
  for (int it = 0; it < n_cases; ++it) {
    int k = 2 + int(rng() % 7);
    std::vector<Point2> c;
    for (int i = 0; i < k; ++i) c.push_back({U(rng), U(rng)});
    bool dup = false;
    for (int i = 0; i < k && !dup; ++i)
      for (int j = i + 1; j < k; ++j)
        if ((c[i] - c[j]).norm() < 1e-6) dup = true;
    if (dup) continue;
    EuclidDrawing d = pts(c);
    std::vector<int> path = iota_path(k);

    bool sa = check_sa_path(d, path);
    bool ic = check_ic_path(d, path);
    // skip the thin band around the decision boundary where the sampled
    // oracle and the tolerance-based check may legitimately differ
    double sam = sa_triple_margin(d, path);
    if (sam > 1e-7) CHECK_FALSE(sa);
    if (sam < 1e-12) CHECK(sa);
    // increasing-chord = self-approaching in both directions, so the exact
    // rise margins sharpen the sampled quadruple bound
    std::vector<int> rev(path.rbegin(), path.rend());
    double icm = std::max({ic_quadruple_margin(d, path), sam, sa_triple_margin(d, rev)});
    if (icm > 1e-7) CHECK_FALSE(ic);
    if (icm < 1e-12) CHECK(ic);
    if (check_lemma3(d, path)) CHECK(ic);
    if (ic) {
      CHECK(sa);
      CHECK(check_strongly_monotone_path(d, path));
      CHECK(check_monotone_path(d, path));
    }
    if (sa) CHECK(check_greedy_path(d, path));
    if (check_strongly_monotone_path(d, path)) CHECK(check_monotone_path(d, path));
  }
}

TEST_CASE("slope disjointness") {
  // two triangles at a cutvertex with interleaved upward edge directions
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(1, 4);
  g.add_edge(3, 4);
  BinaryCactus c = as_binary_cactus(g, 0);

  // single-block cactus: vacuous
  Graph tri(3);
  tri.add_edge(0, 1);
  tri.add_edge(1, 2);
  tri.add_edge(0, 2);
  CHECK(check_slope_disjointness(pts({{0, 0}, {1, -1}, {-1, -1}}),
                                 as_binary_cactus(tri, 0)));

  // construction output: passes (cone containment is stronger)
  BinaryCactus dt = gen_random_dt_cactus(7, 3, 3);
  EuclidDrawing dd = draw_cactus_ic(dt, 30.0);
  CHECK(check_slope_disjointness(dd, dt));
}

TEST_CASE("check_divergence") {
  // chain of three triangles: cutvertices 2 and 4 sit between 0 and 6
  Graph g(7);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(2, 4);
  g.add_edge(3, 4);
  g.add_edge(4, 5);
  g.add_edge(4, 6);
  g.add_edge(5, 6);

  // s, t adjacent in one block: vacuous
  EuclidDrawing d1 =
      pts({{0, 1}, {-0.5, -1}, {0, 0}, {1, -1}, {2, 0}, {2.5, -1}, {3, 1}});
  CHECK(check_divergence(d1, g, 0, 1));

  // end rays bending outward from the chain: diverge
  EuclidDrawing d2 =
      pts({{-1, 1}, {-0.5, -1}, {0, 0}, {1, -1}, {2, 0}, {2.5, -1}, {3, 1}});
  CHECK(check_divergence(d2, g, 0, 6));

  // folded so the end rays point inward at each other: fails
  EuclidDrawing d3 =
      pts({{1, 1}, {-0.5, -1}, {0, 0}, {1, -1}, {2, 0}, {2.5, -1}, {1.2, 1}});
  CHECK_FALSE(check_divergence(d3, g, 0, 6));
}

TEST_CASE("check_polygon_angles") {
  EuclidDrawing sq = pts({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(check_polygon_angles(sq, {0, 1, 2, 3}));
  EuclidDrawing tri = pts({{0, 0}, {4, 0.3}, {1, 2}});
  CHECK(check_polygon_angles(tri, {0, 1, 2}));
  // flat kite: the two opposite tips are both far below 90 degrees
  EuclidDrawing kite = pts({{0, 0}, {5, 0.4}, {10, 0}, {5, -0.4}});
  CHECK_FALSE(check_polygon_angles(kite, {0, 1, 2, 3}));
}

TEST_CASE("rational backend path checks agree with float on exact inputs") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<int> Z(-50, 50);
  for (int it = 0; it < 2000; ++it) {
    int k = 2 + int(rng() % 5);
    std::vector<Point2> cf;
    std::vector<Point2Q> cq;
    bool dup = false;
    for (int i = 0; i < k; ++i) {
      int x = Z(rng), y = Z(rng);
      for (const Point2& p : cf)
        if (p.x == x && p.y == y) dup = true;
      cf.push_back({double(x), double(y)});
      cq.push_back({Rational(x), Rational(y)});
    }
    if (dup) continue;
    EuclidDrawing df = pts(cf);
    EuclidDrawingQ dq(cq, Rational(0));
    std::vector<int> path = iota_path(k);
    // boundary cases can legitimately differ only within tolerance; integer
    // coordinates this small have exact float arithmetic, so demand equality
    CHECK(check_sa_path(df, path) == check_sa_path(dq, path));
    CHECK(check_ic_path(df, path) == check_ic_path(dq, path));
  }
}
