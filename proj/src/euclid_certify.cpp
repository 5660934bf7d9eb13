#include "icdraw/euclid_certify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace icdraw {

namespace {

// DFS path extraction in the DAG of edges admitted by `allow`. The
// predicates used here (distance decreases / positive projection) make the
// admitted digraph acyclic, so plain DFS terminates.
template <class S>
std::optional<std::vector<int>> dag_path(const DrawingT<S>& d, const Graph& g, int s,
                                         int t,
                                         const std::function<bool(int, int)>& allow) {
  std::vector<int> path{s};
  std::vector<char> visited(g.n, 0);
  visited[s] = 1;
  std::function<bool(int)> dfs = [&](int u) -> bool {
    if (u == t) return true;
    std::vector<int> nbrs = g.adj[u];
    std::sort(nbrs.begin(), nbrs.end());
    for (int w : nbrs) {
      if (visited[w] || !allow(u, w)) continue;
      visited[w] = 1;
      path.push_back(w);
      if (dfs(w)) return true;
      path.pop_back();
    }
    return false;
  };
  if (dfs(s)) return path;
  return std::nullopt;
}

template <class S>
std::optional<std::vector<int>> find_greedy_path(const DrawingT<S>& d, const Graph& g,
                                                 int s, int t) {
  const auto& pt = d.coords[t];
  return dag_path<S>(d, g, s, t, [&](int u, int w) {
    return (d.coords[w] - pt).norm2() < (d.coords[u] - pt).norm2();
  });
}

template <class S>
std::optional<std::vector<int>> find_strongly_monotone_path(const DrawingT<S>& d,
                                                            const Graph& g, int s,
                                                            int t) {
  Vec2T<S> dir = d.coords[t] - d.coords[s];
  return dag_path<S>(d, g, s, t, [&](int u, int w) {
    return (d.coords[w] - d.coords[u]).dot(dir) > S(0);
  });
}

// A monotone path exists iff it exists for some direction between two
// consecutive edge-perpendicular critical angles; testing the midpoints of
// all critical-angle intervals is exhaustive.
template <class S>
std::optional<std::vector<int>> find_monotone_path(const DrawingT<S>& d, const Graph& g,
                                                   int s, int t) {
  std::vector<double> crit;
  for (auto [u, v] : g.edges) {
    Vec2 e{to_double(d.coords[v].x - d.coords[u].x),
           to_double(d.coords[v].y - d.coords[u].y)};
    double th = deg_of_dir(e);
    crit.push_back(std::fmod(th + 90.0, 360.0));
    crit.push_back(std::fmod(th + 270.0, 360.0));
  }
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());
  std::vector<double> cands;
  for (size_t i = 0; i < crit.size(); ++i) {
    double a = crit[i];
    double b = (i + 1 < crit.size()) ? crit[i + 1] : crit.front() + 360.0;
    cands.push_back(std::fmod((a + b) / 2.0, 360.0));
  }
  if (cands.empty()) cands.push_back(0.0);
  for (double ang : cands) {
    Vec2 dir = dir_of_deg(ang);
    auto p = dag_path<S>(d, g, s, t, [&](int u, int w) {
      Vec2 e{to_double(d.coords[w].x - d.coords[u].x),
             to_double(d.coords[w].y - d.coords[u].y)};
      return e.dot(dir) > 0;
    });
    if (p) return p;
  }
  return std::nullopt;
}

template <class S>
bool verify_property(const DrawingT<S>& d, PathProperty prop,
                     const std::vector<int>& path) {
  switch (prop) {
    case PathProperty::SA: return check_sa_path(d, path);
    case PathProperty::IC: return check_ic_path(d, path);
    case PathProperty::greedy: return check_greedy_path(d, path);
    case PathProperty::monotone: return check_monotone_path(d, path);
    case PathProperty::strongly_monotone: return check_strongly_monotone_path(d, path);
  }
  return false;
}

template <class S>
Certificate certify_impl(const DrawingT<S>& d, const Graph& g, PathProperty prop,
                         const WitnessMap* witnesses, long long budget) {
  if (int(d.coords.size()) < g.n)
    throw std::invalid_argument("certify_drawing: drawing does not cover all vertices");
  Certificate cert;
  cert.property = prop;
  cert.resolution = g.n >= 2 ? resolution(d) : 1.0;
  cert.planar = check_planar_drawing(d, g);

  for (int s = 0; s < g.n; ++s) {
    for (int t = 0; t < g.n; ++t) {
      if (s == t) continue;
      PairResult pr;
      pr.s = s;
      pr.t = t;

      bool done = false;
      if (witnesses) {
        auto it = witnesses->find({s, t});
        if (it != witnesses->end() && !it->second.empty() &&
            it->second.front() == s && it->second.back() == t &&
            verify_property(d, prop, it->second)) {
          pr.status = PairStatus::witnessed;
          pr.witness = it->second;
          done = true;
        }
      }
      if (!done) {
        std::optional<std::vector<int>> p;
        bool over_budget = false;
        switch (prop) {
          case PathProperty::SA:
          case PathProperty::IC: {
            auto r = find_sa_path(d, g, s, t,
                                  prop == PathProperty::SA ? SearchMode::SA
                                                           : SearchMode::IC,
                                  budget);
            p = r.path;
            over_budget = r.budget_exceeded;
            break;
          }
          case PathProperty::greedy: p = find_greedy_path(d, g, s, t); break;
          case PathProperty::strongly_monotone:
            p = find_strongly_monotone_path(d, g, s, t);
            break;
          case PathProperty::monotone: p = find_monotone_path(d, g, s, t); break;
        }
        if (p) {
          pr.status = PairStatus::witnessed;
          pr.witness = *p;
        } else {
          pr.status = over_budget ? PairStatus::budget_exceeded
                                  : PairStatus::exhausted_no_path;
        }
      }
      if (pr.status == PairStatus::witnessed && pr.witness.size() >= 2)
        cert.max_detour = std::max(cert.max_detour, detour(d, pr.witness));
      cert.pairs.push_back(std::move(pr));
    }
  }
  return cert;
}

}  // namespace

Certificate certify_drawing(const EuclidDrawing& d, const Graph& g, PathProperty prop,
                            const WitnessMap* witnesses, long long budget) {
  return certify_impl(d, g, prop, witnesses, budget);
}

Certificate certify_drawing(const EuclidDrawingQ& d, const Graph& g, PathProperty prop,
                            const WitnessMap* witnesses, long long budget) {
  return certify_impl(d, g, prop, witnesses, budget);
}

namespace {

// true iff the two angle sets form two disjoint contiguous arcs on the
// direction circle (at most two label changes going around).
bool two_disjoint_arcs(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return true;
  std::vector<std::pair<double, int>> all;
  for (double x : a) all.push_back({x, 0});
  for (double x : b) all.push_back({x, 1});
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i + 1 < all.size(); ++i)
    if (all[i].first == all[i + 1].first && all[i].second != all[i + 1].second)
      return false;  // coincident directions from both sets
  int changes = 0;
  for (size_t i = 0; i < all.size(); ++i)
    if (all[i].second != all[(i + 1) % all.size()].second) ++changes;
  return changes <= 2;
}

}  // namespace

bool check_slope_disjointness(const EuclidDrawing& d, const BinaryCactus& c) {
  int root = c.root();
  std::vector<int> cuts;
  for (int v : c.bc.cutvertices)
    if (v != root) cuts.push_back(v);

  std::map<int, std::set<int>> subs;
  std::map<int, std::vector<double>> dirs;
  for (int u : cuts) {
    auto sv = subcactus(c, u);
    subs[u] = std::set<int>(sv.begin(), sv.end());
    std::vector<double> ds;
    for (auto [x, y] : upward_directed_edges(c, u)) {
      Vec2 e = d.coords[y] - d.coords[x];
      if (!e.is_zero()) ds.push_back(deg_of_dir(e));
    }
    dirs[u] = std::move(ds);
  }

  for (size_t i = 0; i < cuts.size(); ++i)
    for (size_t j = i + 1; j < cuts.size(); ++j) {
      int u = cuts[i], v = cuts[j];
      if (subs[u].count(v) || subs[v].count(u)) continue;  // nested, not disjoint
      if (!two_disjoint_arcs(dirs[u], dirs[v])) return false;
    }
  return true;
}

namespace {

// rays r1 = p1 + s*d1, r2 = p2 + t*d2 (s, t >= 0): do they intersect?
bool rays_intersect(const Point2& p1, const Vec2& d1, const Point2& p2, const Vec2& d2) {
  double den = d1.cross(d2);
  Vec2 dp = p2 - p1;
  const double eps = 1e-12;
  if (std::abs(den) < eps * std::max(1.0, d1.norm() * d2.norm())) {
    // parallel: intersect only if collinear and pointing at each other
    if (std::abs(dp.cross(d1)) > eps * std::max(1.0, dp.norm() * d1.norm())) return false;
    double s = dp.dot(d1);
    double t = (-dp).dot(d2);
    return s >= 0 || t >= 0 || d1.dot(d2) > 0;
  }
  double s = dp.cross(d2) / den;
  double t = dp.cross(d1) / den;
  return s >= -1e-12 && t >= -1e-12;
}

}  // namespace

bool check_divergence(const EuclidDrawing& d, const Graph& g, int s, int t) {
  BCTree bc = bc_tree(g);

  // BC-tree as a bipartite graph: block nodes [0..nb), cut nodes nb + idx
  int nb = int(bc.blocks.size());
  std::map<int, int> cut_node;
  for (size_t i = 0; i < bc.cutvertices.size(); ++i)
    cut_node[bc.cutvertices[i]] = nb + int(i);
  int total = nb + int(bc.cutvertices.size());
  std::vector<std::vector<int>> adj(total);
  for (int bi = 0; bi < nb; ++bi)
    for (int v : bc.blocks[bi].vertices)
      if (bc.is_cutvertex[v]) {
        adj[bi].push_back(cut_node[v]);
        adj[cut_node[v]].push_back(bi);
      }

  auto node_of = [&](int v) {
    if (bc.is_cutvertex[v]) return cut_node[v];
    return bc.blocks_of[v][0];
  };
  int ns = node_of(s), nt = node_of(t);

  // BFS path in the BC-tree
  std::vector<int> prev(total, -2);
  std::vector<int> q{ns};
  prev[ns] = -1;
  for (size_t qi = 0; qi < q.size() && prev[nt] == -2; ++qi)
    for (int w : adj[q[qi]])
      if (prev[w] == -2) {
        prev[w] = q[qi];
        q.push_back(w);
      }
  std::vector<int> chain;  // cutvertices between s and t, in order from s
  for (int cur = nt; cur != -1; cur = prev[cur])
    if (cur >= nb) {
      int v = bc.cutvertices[cur - nb];
      if (v != s && v != t) chain.push_back(v);
    }
  std::reverse(chain.begin(), chain.end());
  if (chain.empty()) return true;  // same block, vacuous

  int v1 = chain.front(), vk = chain.back();
  Vec2 d1 = d.coords[s] - d.coords[v1];
  Vec2 d2 = d.coords[t] - d.coords[vk];
  if (d1.is_zero() || d2.is_zero()) return false;
  return !rays_intersect(d.coords[v1], d1, d.coords[vk], d2);
}

bool check_polygon_angles(const EuclidDrawing& d, const std::vector<int>& cycle) {
  size_t k = cycle.size();
  if (k < 3) throw std::invalid_argument("check_polygon_angles: need >= 3 vertices");

  // simple-polygon check: non-adjacent edges must be disjoint
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == k - 1);
      SegRelation r =
          segments_intersect(d.coords[cycle[i]], d.coords[cycle[(i + 1) % k]],
                             d.coords[cycle[j]], d.coords[cycle[(j + 1) % k]], d.tol);
      if (adjacent) {
        if (r == SegRelation::cross || r == SegRelation::overlap)
          throw std::invalid_argument("check_polygon_angles: self-intersecting polygon");
      } else if (r != SegRelation::disjoint) {
        throw std::invalid_argument("check_polygon_angles: self-intersecting polygon");
      }
    }

  // interior angles; polygon orientation from the signed area
  double area2 = 0;
  for (size_t i = 0; i < k; ++i)
    area2 += d.coords[cycle[i]].cross(d.coords[cycle[(i + 1) % k]]);
  double sgn = area2 >= 0 ? 1.0 : -1.0;

  std::vector<double> interior(k);
  for (size_t i = 0; i < k; ++i) {
    const Point2& p = d.coords[cycle[(i + k - 1) % k]];
    const Point2& q = d.coords[cycle[i]];
    const Point2& r = d.coords[cycle[(i + 1) % k]];
    double a = ccw_angle(r - q, p - q);
    interior[i] = sgn > 0 ? a : 360.0 - a;
  }

  const double thresh = 90.0 - 1e-9;
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (consecutive) continue;
      if (interior[i] < thresh && interior[j] < thresh) return false;
    }
  return true;
}

}  // namespace icdraw
