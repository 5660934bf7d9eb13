#pragma once

// Certification of path and drawing properties in the Euclidean plane:
// self-approaching (SA), increasing-chord (IC), greedy, monotone and
// strongly monotone paths; front sets, concatenation checks, witness
// search, detour/resolution metrics, planarity and structural linters.
//
// Path-level checks are templated on the scalar backend. A straight-line
// path (v_1..v_k) is SA iff v_j lies in h(v_i, v_{i+1}) for all i < j,
// where h(p, q) is the closed halfplane through q perpendicular to pq not
// containing p. Boundary points count as inside.

#include "icdraw/geometry.hpp"
#include "icdraw/graph.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace icdraw {

template <class S>
struct DrawingT {
  std::vector<Point2T<S>> coords;
  S tol{};  // 0 for the rational backend

  DrawingT() = default;
  explicit DrawingT(std::vector<Point2T<S>> c, S t = S(0))
      : coords(std::move(c)), tol(std::move(t)) {}
};

using EuclidDrawing = DrawingT<double>;
using EuclidDrawingQ = DrawingT<Rational>;

inline EuclidDrawing make_drawing(std::vector<Point2> coords) {
  return EuclidDrawing(std::move(coords), kDefaultTol);
}

namespace detail {
template <class S>
void require_distinct(const std::vector<Point2T<S>>& coords, const std::vector<int>& path) {
  for (size_t i = 0; i < path.size(); ++i)
    for (size_t j = i + 1; j < path.size(); ++j)
      if (path[i] == path[j]) throw std::invalid_argument("path: repeated vertex");
  (void)coords;
}
}  // namespace detail

/// Halfplane check: true iff v_j in h(v_i, v_{i+1}) for all 1 <= i < j <= k.
template <class S>
bool check_sa_path(const DrawingT<S>& d, const std::vector<int>& path) {
  detail::require_distinct(d.coords, path);
  size_t k = path.size();
  for (size_t i = 0; i + 1 < k; ++i)
    for (size_t j = i + 1; j < k; ++j)
      if (!halfplane_contains(d.coords[path[i]], d.coords[path[i + 1]],
                              d.coords[path[j]], d.tol))
        return false;
  return true;
}

/// Increasing chords: self-approaching in both directions.
template <class S>
bool check_ic_path(const DrawingT<S>& d, const std::vector<int>& path) {
  if (!check_sa_path(d, path)) return false;
  std::vector<int> rev(path.rbegin(), path.rend());
  return check_sa_path(d, rev);
}

/// Sufficient condition: all pairs of segment directions form angles
/// <= 90 degrees, which implies increasing chords.
template <class S>
bool check_lemma3(const DrawingT<S>& d, const std::vector<int>& path,
                  double tol_deg = 1e-7) {
  size_t k = path.size();
  if (k < 2) return true;
  std::vector<Vec2> dirs;
  for (size_t i = 0; i + 1 < k; ++i) {
    const auto& a = d.coords[path[i]];
    const auto& b = d.coords[path[i + 1]];
    dirs.push_back({to_double(b.x - a.x), to_double(b.y - a.y)});
  }
  for (size_t i = 0; i < dirs.size(); ++i)
    for (size_t j = i + 1; j < dirs.size(); ++j)
      if (angle_between(dirs[i], dirs[j]) > 90.0 + tol_deg) return false;
  return true;
}

/// front(rho): one halfplane h(v_i, v_{i+1}) per segment; membership is
/// the conjunction over all of them.
template <class S>
struct FrontSetT {
  std::vector<HalfplaneT<S>> halfplanes;
  bool path_is_sa{true};

  bool contains(const Point2T<S>& x, const S& tol = S(0)) const {
    for (const auto& h : halfplanes)
      if (!h.contains(x, tol)) return false;
    return true;
  }
};

using FrontSet = FrontSetT<double>;

template <class S>
FrontSetT<S> front(const DrawingT<S>& d, const std::vector<int>& path) {
  FrontSetT<S> f;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    f.halfplanes.push_back(halfplane_pq(d.coords[path[i]], d.coords[path[i + 1]]));
  f.path_is_sa = check_sa_path(d, path);
  return f;
}

/// Concatenation check: rho1 + rho2 is SA iff rho2 lies in front(rho1). Checking
/// the vertices of rho2 suffices for polygonal paths (the front is convex).
template <class S>
bool check_concat(const DrawingT<S>& d, const std::vector<int>& rho1,
                  const std::vector<int>& rho2) {
  if (rho1.empty() || rho2.empty() || rho1.back() != rho2.front())
    throw std::invalid_argument("check_concat: endpoint mismatch");
  FrontSetT<S> f = front(d, rho1);
  for (int v : rho2)
    if (!f.contains(d.coords[v], d.tol)) return false;
  return true;
}

/// Greedy: the distance to the destination decreases in every vertex.
template <class S>
bool check_greedy_path(const DrawingT<S>& d, const std::vector<int>& path) {
  if (path.size() < 2) return true;
  const auto& t = d.coords[path.back()];
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    S a = (d.coords[path[i]] - t).norm2();
    S b = (d.coords[path[i + 1]] - t).norm2();
    if (d.tol == S(0)) {
      if (!(b < a)) return false;
    } else if (!(to_double(b) < to_double(a) + to_double(d.tol) * std::max(1.0, to_double(a)))) {
      return false;
    }
  }
  return true;
}

/// Strongly monotone: every segment has positive projection on st.
template <class S>
bool check_strongly_monotone_path(const DrawingT<S>& d, const std::vector<int>& path) {
  if (path.size() < 2) return true;
  Vec2T<S> dir = d.coords[path.back()] - d.coords[path.front()];
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Vec2T<S> seg = d.coords[path[i + 1]] - d.coords[path[i]];
    S dp = seg.dot(dir);
    if (d.tol == S(0)) {
      if (!(dp > S(0))) return false;
    } else if (to_double(dp) <= -to_double(d.tol) * seg.norm() * dir.norm()) {
      return false;
    }
  }
  return true;
}

/// Monotone: some direction has positive projection on every segment.
/// Test: all segment directions fit into an open halfplane of directions,
/// i.e. the maximum circular gap between sorted directions exceeds 180.
template <class S>
bool check_monotone_path(const DrawingT<S>& d, const std::vector<int>& path,
                         double tol_deg = 1e-9) {
  if (path.size() < 3) return true;
  std::vector<double> angs;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    Vec2T<S> seg = d.coords[path[i + 1]] - d.coords[path[i]];
    angs.push_back(deg_of_dir({to_double(seg.x), to_double(seg.y)}));
  }
  std::sort(angs.begin(), angs.end());
  double maxgap = angs.front() + 360.0 - angs.back();
  for (size_t i = 0; i + 1 < angs.size(); ++i)
    maxgap = std::max(maxgap, angs[i + 1] - angs[i]);
  return maxgap > 180.0 - tol_deg;
}

/// Ratio of path length to endpoint distance (>= 1).
template <class S>
double detour(const DrawingT<S>& d, const std::vector<int>& path) {
  if (path.size() < 2) throw std::invalid_argument("detour: need >= 2 vertices");
  double len = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i)
    len += (d.coords[path[i + 1]] - d.coords[path[i]]).norm();
  double ends = (d.coords[path.back()] - d.coords[path.front()]).norm();
  if (ends == 0) throw std::invalid_argument("detour: coincident endpoints");
  return len / ends;
}

/// Max over min pairwise vertex distance.
template <class S>
double resolution(const DrawingT<S>& d) {
  size_t n = d.coords.size();
  if (n < 2) throw std::invalid_argument("resolution: need >= 2 vertices");
  double mn = std::numeric_limits<double>::infinity(), mx = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      double dist = (d.coords[i] - d.coords[j]).norm();
      mn = std::min(mn, dist);
      mx = std::max(mx, dist);
    }
  if (mn == 0) throw std::invalid_argument("resolution: coincident vertices");
  return mx / mn;
}

/// No two edges cross (shared endpoints allowed) and no vertex lies in the
/// interior of another edge.
template <class S>
bool check_planar_drawing(const DrawingT<S>& d, const Graph& g) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      auto [a, b] = g.edges[i];
      auto [c, e] = g.edges[j];
      SegRelation r = segments_intersect(d.coords[a], d.coords[b], d.coords[c],
                                         d.coords[e], d.tol);
      if (r == SegRelation::cross || r == SegRelation::overlap) return false;
    }
  for (int v = 0; v < g.n; ++v)
    for (auto [a, b] : g.edges) {
      if (v == a || v == b) continue;
      if (detail::on_segment(d.coords[a], d.coords[b], d.coords[v], d.tol)) return false;
    }
  return true;
}

/// Planarity with exact predicates: deep nested constructions (alpha-Schnyder
/// at a few hundred vertices) produce vertex clusters inside the angular
/// tolerance of long edges, which the scaled-tolerance predicates flag as
/// crossings even though the drawing is planar.
inline bool check_planar_drawing_exact(const EuclidDrawing& d, const Graph& g) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      auto [a, b] = g.edges[i];
      auto [c, e] = g.edges[j];
      SegRelation r =
          segments_intersect_exact(d.coords[a], d.coords[b], d.coords[c], d.coords[e]);
      if (r == SegRelation::cross || r == SegRelation::overlap) return false;
    }
  for (int v = 0; v < g.n; ++v)
    for (auto [a, b] : g.edges) {
      if (v == a || v == b) continue;
      if (on_segment_exact(d.coords[a], d.coords[b], d.coords[v])) return false;
    }
  return true;
}

enum class PathProperty { SA, IC, greedy, monotone, strongly_monotone };

enum class PairStatus { witnessed, exhausted_no_path, budget_exceeded };

struct PairResult {
  int s{-1}, t{-1};
  PairStatus status{PairStatus::exhausted_no_path};
  std::vector<int> witness;
};

struct Certificate {
  PathProperty property{PathProperty::IC};
  std::vector<PairResult> pairs;
  double max_detour{0};
  double resolution{0};
  bool planar{false};

  bool all_witnessed() const {
    for (const auto& p : pairs)
      if (p.status != PairStatus::witnessed) return false;
    return true;
  }
};

struct SearchResult {
  std::optional<std::vector<int>> path;
  bool budget_exceeded{false};
};

enum class SearchMode { SA, IC };

/// Depth-first search over simple s-t paths with front pruning: a branch is
/// cut as soon as its front excludes t or the prefix stops being SA (IC:
/// in either direction). Complete up to the node budget.
template <class S>
SearchResult find_sa_path(const DrawingT<S>& d, const Graph& g, int s, int t,
                          SearchMode mode, long long budget = 1000000) {
  if (s == t) throw std::invalid_argument("find_sa_path: s == t");
  if (budget < 1) throw std::invalid_argument("find_sa_path: budget must be >= 1");

  SearchResult res;
  std::vector<int> path{s};
  std::vector<char> visited(g.n, 0);
  visited[s] = 1;
  std::vector<HalfplaneT<S>> hps;  // forward halfplanes of the prefix
  long long nodes = 0;
  bool aborted = false;

  std::vector<std::vector<int>> sorted_adj(g.n);
  for (int v = 0; v < g.n; ++v) {
    sorted_adj[v] = g.adj[v];
    std::sort(sorted_adj[v].begin(), sorted_adj[v].end());
  }

  std::function<bool()> dfs = [&]() -> bool {
    if (++nodes > budget) {
      aborted = true;
      return false;
    }
    int u = path.back();
    if (u == t) {
      res.path = path;
      return true;
    }
    for (int w : sorted_adj[u]) {
      if (visited[w] || aborted) continue;
      // forward SA: w must lie in every halfplane of the prefix
      bool ok = true;
      for (const auto& h : hps)
        if (!h.contains(d.coords[w], d.tol)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      HalfplaneT<S> hf = halfplane_pq(d.coords[u], d.coords[w]);
      // front pruning: t must stay reachable
      if (!hf.contains(d.coords[t], d.tol)) continue;
      if (mode == SearchMode::IC) {
        // reverse SA: all strictly earlier vertices must lie in h(w, u)
        HalfplaneT<S> hr = halfplane_pq(d.coords[w], d.coords[u]);
        for (size_t i = 0; i + 1 < path.size() && ok; ++i)
          if (!hr.contains(d.coords[path[i]], d.tol)) ok = false;
        if (!ok) continue;
      }
      path.push_back(w);
      visited[w] = 1;
      hps.push_back(hf);
      if (dfs()) return true;
      hps.pop_back();
      visited[w] = 0;
      path.pop_back();
    }
    return false;
  };
  dfs();
  res.budget_exceeded = aborted && !res.path.has_value();
  return res;
}

using WitnessMap = std::map<std::pair<int, int>, std::vector<int>>;

/// Certify an entire drawing: per ordered pair prefer re-verifying the
/// supplied witness, fall back to search. Aggregates metrics.
Certificate certify_drawing(const EuclidDrawing& d, const Graph& g, PathProperty prop,
                            const WitnessMap* witnesses = nullptr,
                            long long budget = 1000000);
Certificate certify_drawing(const EuclidDrawingQ& d, const Graph& g, PathProperty prop,
                            const WitnessMap* witnesses = nullptr,
                            long long budget = 1000000);

/// Slope linter: for every pair of cutvertices with disjoint subcactuses,
/// the upward directed edge directions of the two subcactuses occupy
/// disjoint single arcs of the direction circle.
bool check_slope_disjointness(const EuclidDrawing& d, const BinaryCactus& c);

/// Divergence linter: the rays ray(v_1, s) and ray(v_k, t) along the cutvertex
/// chain of every s-t path must diverge. Vacuously true with no chain.
bool check_divergence(const EuclidDrawing& d, const Graph& g, int s, int t);

/// SA-polygon observation: no two non-consecutive interior angles both
/// below 90 degrees. Throws on self-intersecting polygons.
bool check_polygon_angles(const EuclidDrawing& d, const std::vector<int>& cycle);

}  // namespace icdraw
