#include "icdraw/schnyder.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace icdraw {

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

constexpr double kConeCenter[3] = {90.0, 330.0, 210.0};  // red, green, blue

double circ_dist_deg(double a, double b) {
  double d = std::fmod(std::abs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

}  // namespace

EliminationOrder recognize_3tree(const Graph& g, const std::array<int, 3>& outer) {
  for (int v : outer)
    if (v < 0 || v >= g.n) throw std::out_of_range("recognize_3tree: outer vertex id");
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (outer[i] == outer[j] || !g.has_edge(outer[i], outer[j]))
        throw std::runtime_error("not-a-3-tree: outer triangle missing");

  std::vector<std::set<int>> adj(g.n);
  for (auto [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  auto is_outer = [&](int v) { return v == outer[0] || v == outer[1] || v == outer[2]; };

  int remaining = g.n;
  std::vector<bool> gone(g.n, false);
  std::vector<std::pair<int, std::array<int, 3>>> removals;  // (v, neighbor set)
  while (remaining > 3) {
    int pick = -1;
    for (int v = 0; v < g.n && pick == -1; ++v) {
      if (gone[v] || is_outer(v) || adj[v].size() != 3) continue;
      auto it = adj[v].begin();
      int a = *it++, b = *it++, c = *it;
      if (adj[a].count(b) && adj[a].count(c) && adj[b].count(c)) {
        removals.push_back({v, {a, b, c}});
        pick = v;
      }
    }
    if (pick == -1) throw std::runtime_error("not-a-3-tree: reduction stuck");
    for (int w : adj[pick]) adj[w].erase(pick);
    adj[pick].clear();
    gone[pick] = true;
    --remaining;
  }
  for (int v = 0; v < g.n; ++v)
    if (!gone[v] && !is_outer(v))
      throw std::runtime_error("not-a-3-tree: leftover non-outer vertex");

  // forward replay assigns corner roles: each face triple carries its
  // (red, green, blue) role corners; an inserted vertex inherits them
  EliminationOrder order;
  order.outer = outer;
  std::map<std::array<int, 3>, std::array<int, 3>> face_roles;
  face_roles[sorted_triple(outer[0], outer[1], outer[2])] = {outer[0], outer[1], outer[2]};
  for (auto it = removals.rbegin(); it != removals.rend(); ++it) {
    auto [v, nb] = *it;
    auto f = face_roles.find(sorted_triple(nb[0], nb[1], nb[2]));
    if (f == face_roles.end())
      throw std::runtime_error("not-a-3-tree: insertion face is not a current face");
    auto [x, y, z] = std::tuple{f->second[0], f->second[1], f->second[2]};
    face_roles.erase(f);
    face_roles[sorted_triple(v, y, z)] = {v, y, z};
    face_roles[sorted_triple(x, v, z)] = {x, v, z};
    face_roles[sorted_triple(x, y, v)] = {x, y, v};
    order.steps.push_back({v, {x, y, z}});
  }
  return order;
}

SchnyderLabeling schnyder_label_3tree(const Graph& g, const EliminationOrder& order) {
  SchnyderLabeling L;
  L.r = order.outer[0];
  L.g = order.outer[1];
  L.b = order.outer[2];
  L.parent.assign(g.n, {-1, -1, -1});
  for (const auto& st : order.steps)
    L.parent[st.v] = st.face;
  if (!check_labeling(g, L))
    throw std::logic_error("schnyder_label_3tree: invalid labeling produced");
  return L;
}

bool check_labeling(const Graph& g, const SchnyderLabeling& L) {
  if (int(L.parent.size()) != g.n) return false;
  for (int v = 0; v < g.n; ++v) {
    if (L.is_outer(v)) {
      for (int c = 0; c < 3; ++c)
        if (L.parent[v][c] != -1) return false;
      continue;
    }
    for (int c = 0; c < 3; ++c) {
      int p = L.parent[v][c];
      if (p < 0 || !g.has_edge(v, p)) return false;
    }
  }
  // each tree reaches its root without cycles
  for (int c = 0; c < 3; ++c) {
    int root = L.root(SColor(c));
    for (int v = 0; v < g.n; ++v) {
      if (L.is_outer(v)) continue;
      int cur = v, steps = 0;
      while (cur != root) {
        if (L.is_outer(cur)) return false;  // reached a wrong root
        cur = L.parent[cur][c];
        if (cur < 0 || ++steps > g.n) return false;
      }
    }
  }
  return true;
}

bool check_clockwise_pattern(const Graph& g, const SchnyderLabeling& L,
                             const EuclidDrawing& d) {
  enum Lab { out_r, out_g, out_b, in_r, in_g, in_b };
  for (int v = 0; v < g.n; ++v) {
    if (L.is_outer(v)) continue;
    std::vector<std::pair<double, Lab>> ring;
    for (int w : g.adj[v]) {
      int lab = -1;
      for (int c = 0; c < 3; ++c) {
        if (L.parent[v][c] == w) lab = c;            // out_r/out_g/out_b
        else if (!L.is_outer(w) && L.parent[w][c] == v) lab = 3 + c;
      }
      if (lab == -1) return false;  // uncolored edge at an interior vertex
      ring.push_back({deg_of_dir(d.coords[w] - d.coords[v]), Lab(lab)});
    }
    // clockwise order = decreasing ccw angle
    std::sort(ring.begin(), ring.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    size_t n = ring.size(), start = 0;
    while (start < n && ring[start].second != out_r) ++start;
    if (start == n) return false;
    // rotated to begin at out_r, the clockwise sequence must match
    // out_r in_b* out_g in_r* out_b in_g*
    std::vector<Lab> seq(n);
    for (size_t i = 0; i < n; ++i) seq[i] = ring[(start + i) % n].second;
    static const Lab outs[3] = {out_r, out_g, out_b};
    static const Lab ins[3] = {in_b, in_r, in_g};
    size_t i = 0;
    for (int phase = 0; phase < 3; ++phase) {
      if (i >= n || seq[i] != outs[phase]) return false;
      ++i;
      while (i < n && seq[i] == ins[phase]) ++i;
    }
    if (i != n) return false;
  }
  return true;
}

bool check_alpha_schnyder(const EuclidDrawing& d, const Graph& g,
                          const SchnyderLabeling& L, double alpha_deg, double tol) {
  if (alpha_deg <= 0 || alpha_deg > 60)
    throw std::invalid_argument("check_alpha_schnyder: alpha out of range");
  if (!check_planar_drawing_exact(d, g))
    throw std::runtime_error("check_alpha_schnyder: nonplanar drawing");
  double tol_deg = rad2deg(tol);  // tol is a length ratio; angles get the same scale
  for (int v = 0; v < g.n; ++v) {
    if (L.is_outer(v)) continue;
    for (int c = 0; c < 3; ++c) {
      Vec2 e = d.coords[L.parent[v][c]] - d.coords[v];
      if (circ_dist_deg(deg_of_dir(e), kConeCenter[c]) > alpha_deg / 2 + tol_deg)
        return false;
    }
  }
  return true;
}

namespace {

// Reversed color cone at a face corner: the set of placements p whose edge
// p -> corner points into that color's cone. Two halfplanes per cone.
void clip_by_reversed_cone(ConvexPolygon& poly, const Point2& apex, double center_deg,
                           double half_deg) {
  double axis = center_deg + 180.0;
  poly = clip_convex(poly, Halfplane(apex, dir_of_deg(axis + half_deg - 90.0)));
  poly = clip_convex(poly, Halfplane(apex, dir_of_deg(axis - half_deg + 90.0)));
}

void reversed_cone_halfplanes(std::vector<Halfplane>& hs, const Point2& apex,
                              double center_deg, double half_deg) {
  double axis = center_deg + 180.0;
  hs.push_back(Halfplane(apex, dir_of_deg(axis + half_deg - 90.0)));
  hs.push_back(Halfplane(apex, dir_of_deg(axis - half_deg + 90.0)));
}

// Chebyshev center of an intersection of closed halfplanes: the deepest
// interior point. Keeps successive insertions maximally clear of the cone
// boundaries, which the centroid of the region does not (it can leave a
// child face with an empty feasible region).
Point2 chebyshev_center(const std::vector<Halfplane>& hs, const Point2& seed,
                        double* radius_out) {
  auto radius_at = [&](const Point2& p) {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& h : hs)
      r = std::min(r, (p - h.anchor).dot(h.normal) / h.normal.norm());
    return r;
  };
  Point2 best = seed;
  double best_r = radius_at(seed);
  size_t m = hs.size();
  // the optimum is supported by <= 3 constraints: enumerate triples and
  // solve (p - a_i) . u_i = r for (px, py, r)
  for (size_t i = 0; i < m; ++i)
    for (size_t j = i + 1; j < m; ++j)
      for (size_t k = j + 1; k < m; ++k) {
        const Halfplane* H[3] = {&hs[i], &hs[j], &hs[k]};
        double M[3][4];
        for (int t = 0; t < 3; ++t) {
          Vec2 u = H[t]->normal * (1.0 / H[t]->normal.norm());
          M[t][0] = u.x;
          M[t][1] = u.y;
          M[t][2] = -1.0;
          M[t][3] = u.dot(H[t]->anchor);
        }
        bool ok = true;
        for (int c = 0; c < 3 && ok; ++c) {
          int piv = c;
          for (int r = c; r < 3; ++r)
            if (std::abs(M[r][c]) > std::abs(M[piv][c])) piv = r;
          if (std::abs(M[piv][c]) < 1e-14) {
            ok = false;
            break;
          }
          std::swap(M[piv], M[c]);
          for (int r = 0; r < 3; ++r) {
            if (r == c) continue;
            double f = M[r][c] / M[c][c];
            for (int cc = c; cc < 4; ++cc) M[r][cc] -= f * M[c][cc];
          }
        }
        if (!ok) continue;
        Point2 p{M[0][3] / M[0][0], M[1][3] / M[1][1]};
        double r = radius_at(p);
        if (r > best_r) {
          best_r = r;
          best = p;
        }
      }
  if (radius_out) *radius_out = best_r;
  return best;
}

}  // namespace

std::pair<EuclidDrawing, SchnyderLabeling> draw_alpha_schnyder(
    const Graph& g, const EliminationOrder& order, double alpha_deg) {
  if (alpha_deg <= 0 || alpha_deg > 60)
    throw std::invalid_argument("draw_alpha_schnyder: alpha out of range");

  std::vector<Point2> coords(g.n, Point2{0, 0});
  coords[order.outer[0]] = dir_of_deg(90);    // r on top
  coords[order.outer[1]] = dir_of_deg(-30);   // g bottom-right
  coords[order.outer[2]] = dir_of_deg(210);   // b bottom-left

  for (const auto& st : order.steps) {
    auto [x, y, z] = std::tuple{st.face[0], st.face[1], st.face[2]};
    // feasible region: inside the face triangle, seeing each corner in its
    // reversed color cone
    Point2 P[3] = {coords[x], coords[y], coords[z]};
    double orient = (P[1] - P[0]).cross(P[2] - P[0]) > 0 ? 1.0 : -1.0;
    std::vector<Halfplane> hs;
    for (int t = 0; t < 3; ++t) {
      Vec2 e = P[(t + 1) % 3] - P[t];
      hs.push_back(Halfplane(P[t], Vec2{-e.y * orient, e.x * orient} * (1.0 / e.norm())));
    }
    for (int t = 0; t < 3; ++t)
      reversed_cone_halfplanes(hs, P[t], kConeCenter[t], alpha_deg / 2);

    double rad = 0;
    Point2 seed{(P[0].x + P[1].x + P[2].x) / 3, (P[0].y + P[1].y + P[2].y) / 3};
    Point2 p = chebyshev_center(hs, seed, &rad);
    if (!(rad > 0))
      throw std::logic_error("draw_alpha_schnyder: empty feasible region");
    coords[st.v] = p;
  }

  SchnyderLabeling L = schnyder_label_3tree(g, order);
  EuclidDrawing d = make_drawing(std::move(coords));
  if (!check_alpha_schnyder(d, g, L, alpha_deg, 1e-7))
    throw std::logic_error("draw_alpha_schnyder: output failed its own check");
  return {std::move(d), std::move(L)};
}

namespace {

std::vector<std::array<int, 3>> internal_faces(const EliminationOrder& order) {
  std::set<std::array<int, 3>> faces;
  faces.insert(sorted_triple(order.outer[0], order.outer[1], order.outer[2]));
  for (const auto& st : order.steps) {
    auto [x, y, z] = std::tuple{st.face[0], st.face[1], st.face[2]};
    faces.erase(sorted_triple(x, y, z));
    faces.insert(sorted_triple(st.v, y, z));
    faces.insert(sorted_triple(x, st.v, z));
    faces.insert(sorted_triple(x, y, st.v));
  }
  return {faces.begin(), faces.end()};
}

std::vector<int> color_walk(const SchnyderLabeling& L, int v, int c) {
  std::vector<int> w{v};
  int cur = v;
  while (!L.is_outer(cur)) {
    cur = L.parent[cur][c];
    w.push_back(cur);
  }
  return w;
}

}  // namespace

std::array<long long, 3> region_faces(const Graph& g, const EliminationOrder& order,
                                      const SchnyderLabeling& L, int v) {
  auto faces = internal_faces(order);
  long long total = (long long)(faces.size());  // f - 1

  if (L.is_outer(v)) {
    std::array<long long, 3> out{0, 0, 0};
    int c = v == L.r ? 0 : (v == L.g ? 1 : 2);
    out[c] = total;
    return out;
  }

  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (size_t fi = 0; fi < faces.size(); ++fi)
    for (int i = 0; i < 3; ++i) {
      int a = faces[fi][i], b = faces[fi][(i + 1) % 3];
      edge_faces[{std::min(a, b), std::max(a, b)}].push_back(int(fi));
    }

  auto path_edges = [&](const std::vector<int>& w, std::set<std::pair<int, int>>& out) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
      out.insert({std::min(w[i], w[i + 1]), std::max(w[i], w[i + 1])});
  };

  std::array<long long, 3> counts{0, 0, 0};
  for (int c = 0; c < 3; ++c) {
    int c1 = (c + 1) % 3, c2 = (c + 2) % 3;  // the two boundary colors
    std::set<std::pair<int, int>> boundary;
    path_edges(color_walk(L, v, c1), boundary);
    path_edges(color_walk(L, v, c2), boundary);
    int ra = L.root(SColor(c1)), rb = L.root(SColor(c2));
    std::pair<int, int> seed_edge{std::min(ra, rb), std::max(ra, rb)};
    boundary.insert(seed_edge);

    // dual flood fill from the face on edge (root(c1), root(c2)), blocked
    // at the boundary cycle
    std::vector<bool> seen(faces.size(), false);
    std::queue<int> q;
    int seed = edge_faces.at(seed_edge)[0];
    q.push(seed);
    seen[seed] = true;
    long long cnt = 0;
    while (!q.empty()) {
      int fi = q.front();
      q.pop();
      ++cnt;
      for (int i = 0; i < 3; ++i) {
        int a = faces[fi][i], b = faces[fi][(i + 1) % 3];
        std::pair<int, int> e{std::min(a, b), std::max(a, b)};
        if (boundary.count(e)) continue;
        for (int nf : edge_faces.at(e))
          if (!seen[nf]) {
            seen[nf] = true;
            q.push(nf);
          }
      }
    }
    counts[c] = cnt;
  }
  return counts;
}

EuclidDrawing schnyder_face_count_drawing(const Graph& g, const EliminationOrder& order,
                                          const SchnyderLabeling& L) {
  long long total = 2LL * g.n - 5;  // f - 1 for a triangulation
  Point2 anchors[3] = {dir_of_deg(90), dir_of_deg(-30), dir_of_deg(210)};
  std::vector<Point2> coords(g.n);
  for (int v = 0; v < g.n; ++v) {
    auto cnt = region_faces(g, order, L, v);
    Point2 p{0, 0};
    for (int c = 0; c < 3; ++c) p = p + anchors[c] * (double(cnt[c]) / double(total));
    coords[v] = p;
  }
  return make_drawing(std::move(coords));
}

std::vector<int> schnyder_witness_path(const SchnyderLabeling& L, const EuclidDrawing& d,
                                       int s, int t) {
  if (s == t) throw std::invalid_argument("schnyder_witness_path: s == t");
  // two outer vertices are adjacent corners of the outer triangle
  if (L.is_outer(s) && L.is_outer(t)) return {s, t};

  auto try_path = [&](std::vector<int> p) -> std::vector<int> {
    if (check_ic_path(d, p)) return p;
    return {};
  };

  // monochromatic directed path in either direction
  for (int c = 0; c < 3; ++c) {
    auto ws = color_walk(L, s, c);
    if (auto it = std::find(ws.begin(), ws.end(), t); it != ws.end()) {
      if (auto p = try_path({ws.begin(), it + 1}); !p.empty()) return p;
    }
    auto wt = color_walk(L, t, c);
    if (auto it = std::find(wt.begin(), wt.end(), s); it != wt.end()) {
      std::vector<int> p(wt.begin(), it + 1);
      std::reverse(p.begin(), p.end());
      if (auto q = try_path(std::move(p)); !q.empty()) return q;
    }
  }

  // two legs meeting at the first shared vertex of an s-walk and a t-walk
  for (int cs = 0; cs < 3; ++cs) {
    auto ws = color_walk(L, s, cs);
    for (int ct = 0; ct < 3; ++ct) {
      if (ct == cs) continue;
      auto wt = color_walk(L, t, ct);
      std::set<int> wt_set(wt.begin(), wt.end());
      for (size_t i = 0; i < ws.size(); ++i) {
        if (!wt_set.count(ws[i])) continue;
        size_t j = std::find(wt.begin(), wt.end(), ws[i]) - wt.begin();
        std::vector<int> p(ws.begin(), ws.begin() + i + 1);
        for (size_t k = j; k-- > 0;) p.push_back(wt[k]);
        if (auto q = try_path(std::move(p)); !q.empty()) return q;
        break;  // only the first meeting point of this combination
      }
    }
  }
  throw std::runtime_error("schnyder_witness_path: no verified witness found");
}

WitnessMap schnyder_witnesses(const SchnyderLabeling& L, const EuclidDrawing& d) {
  WitnessMap w;
  int n = int(L.parent.size());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (s != t) w[{s, t}] = schnyder_witness_path(L, d, s, t);
  return w;
}

}  // namespace icdraw
