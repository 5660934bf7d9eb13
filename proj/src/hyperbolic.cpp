#include "icdraw/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace icdraw {

namespace {

using cplx = std::complex<double>;

cplx mobius_to_origin(const cplx& a, const cplx& z) { return (z - a) / (1.0 - std::conj(a) * z); }
cplx mobius_from_origin(const cplx& a, const cplx& w) { return (w + a) / (1.0 + std::conj(a) * w); }

HPoint to_hpoint(const cplx& z) { return HPoint(z.real(), z.imag()); }

}  // namespace

double hyp_distance(const HPoint& p, const HPoint& q) {
  // translate p to the origin first; this form stays accurate near the rim
  double w = std::abs(mobius_to_origin(p.z(), q.z()));
  return 2.0 * std::atanh(std::min(w, 1.0 - 1e-17));
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  Vec2 vp = p.euclid(), vq = q.euclid();
  Vec2 d = vq - vp;
  if (d.is_zero()) throw std::invalid_argument("geodesic_through: coincident points");
  double scale = std::max({1.0, vp.norm(), vq.norm()});
  if (std::abs(vp.cross(vq)) <= 1e-13 * scale * d.norm()) {
    Geodesic G;
    G.is_diameter = true;
    G.dir = d * (1.0 / d.norm());
    return G;
  }
  // solve 2 c.p = |p|^2 + 1, 2 c.q = |q|^2 + 1
  double det = 4.0 * vp.cross(vq);
  double bp = vp.norm2() + 1.0, bq = vq.norm2() + 1.0;
  Geodesic G;
  G.is_diameter = false;
  G.center = {(bp * 2.0 * vq.y - bq * 2.0 * vp.y) / det,
              (bq * 2.0 * vp.x - bp * 2.0 * vq.x) / det};
  // radius from the defining points: sqrt(|center|^2 - 1) cancels
  // catastrophically for the tiny carriers of deep near-rim arcs
  G.radius = 0.5 * ((vp - G.center).norm() + (vq - G.center).norm());
  return G;
}

Geodesic geodesic_from_ideal(const cplx& e1, const cplx& e2) {
  Vec2 a{e1.real(), e1.imag()}, b{e2.real(), e2.imag()};
  if ((a + b).norm() < 1e-9) {
    Geodesic G;
    G.is_diameter = true;
    G.dir = a * (1.0 / a.norm());
    return G;
  }
  double det = a.cross(b);
  if (std::abs(det) < 1e-15) throw std::invalid_argument("geodesic_from_ideal: coincident endpoints");
  Geodesic G;
  G.is_diameter = false;
  G.center = {(b.y - a.y) / det, (a.x - b.x) / det};
  G.radius = 0.5 * ((a - G.center).norm() + (b - G.center).norm());
  return G;
}

HPoint reflect(const Geodesic& G, const HPoint& x) {
  Vec2 v = x.euclid();
  if (G.is_diameter) {
    Vec2 r = G.dir * (2.0 * v.dot(G.dir)) - v;
    return {r.x, r.y};
  }
  Vec2 w = v - G.center;
  double k = G.radius * G.radius / w.norm2();
  Vec2 r = G.center + w * k;
  return {r.x, r.y};
}

Vec2 geodesic_tangent(const Geodesic& G, const HPoint& at, const HPoint& toward) {
  (void)G;
  // the disk translation taking `at` to the origin has a positive real
  // derivative at 0, so the tangent direction at `at` is the direction of
  // the translated image of `toward`; this avoids the circle center, which
  // is poorly conditioned near the rim
  cplx w = mobius_to_origin(at.z(), toward.z());
  double n = std::abs(w);
  if (n == 0) throw std::invalid_argument("geodesic_tangent: coincident points");
  return {w.real() / n, w.imag() / n};
}

HPoint hyp_point_toward(const HPoint& p, const HPoint& q, double s) {
  cplx a = p.z();
  cplx qp = mobius_to_origin(a, q.z());
  double n = std::abs(qp);
  if (n == 0) throw std::invalid_argument("hyp_point_toward: coincident points");
  cplx w = (qp / n) * std::tanh(s / 2.0);
  return to_hpoint(mobius_from_origin(a, w));
}

HPoint hyp_midpoint(const HPoint& p, const HPoint& q) {
  return hyp_point_toward(p, q, hyp_distance(p, q) / 2.0);
}

bool hyp_halfplane_contains(const HPoint& a, const HPoint& b, const HPoint& x, double tol) {
  cplx bz = b.z();
  cplx ap = mobius_to_origin(bz, a.z());
  if (std::abs(ap) == 0) throw std::invalid_argument("hyp_halfplane_contains: a == b");
  cplx xp = mobius_to_origin(bz, x.z());
  // rotate a' onto the negative imaginary axis
  cplx rot = cplx(0, -1) * std::conj(ap) / std::abs(ap);
  return (xp * rot).imag() >= -tol;
}

HPoint DiskIsometry::apply(const HPoint& p) const {
  cplx z = p.z();
  if (reflect) z = std::conj(z);
  cplx w = std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
  return to_hpoint(w);
}

cplx DiskIsometry::apply_boundary(const cplx& zin) const {
  cplx z = reflect ? std::conj(zin) : zin;
  return std::polar(1.0, theta) * (z - a) / (1.0 - std::conj(a) * z);
}

std::pair<double, std::array<HPoint, 6>> regular_hexagon_90() {
  double R = std::acosh(std::sqrt(3.0));
  double rE = std::tanh(R / 2.0);
  std::array<HPoint, 6> v;
  for (int j = 0; j < 6; ++j) {
    double ang = deg2rad(30.0 + 60.0 * j);
    v[j] = HPoint(rE * std::cos(ang), rE * std::sin(ang));
  }
  return {R, v};
}

namespace {

bool is_tree(const Graph& g) {
  return g.n >= 1 && int(g.edges.size()) == g.n - 1 && g.connected();
}

// Frames are tracked as composed Mobius maps instead of repeatedly
// reflected point sets: chained circle inversions amplify rounding error
// by several orders of magnitude at depth 6, while a single normalized
// 2x2 matrix product keeps every emitted point within ~1e-12 of exact.
struct Mob {
  cplx a{1}, b{0}, c{0}, d{1};

  cplx apply(const cplx& z) const { return (a * z + b) / (c * z + d); }

  Mob mul(const Mob& o) const {
    Mob r{a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    double n = std::sqrt(std::norm(r.a) + std::norm(r.b) + std::norm(r.c) + std::norm(r.d));
    r.a /= n; r.b /= n; r.c /= n; r.d /= n;
    return r;
  }

  Mob conj_entries() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
};

// frame map F(z) = M(z), or M(conj z) after an odd number of reflections
struct HexFrame {
  Mob M;
  bool flip{false};

  HPoint pt(const cplx& z) const { return to_hpoint(M.apply(flip ? std::conj(z) : z)); }
};

// canonical hexagon data, built once: corners, arc midpoints of the sides,
// and the inversion across each side as a Mobius map in conj(z)
struct HexData {
  std::array<cplx, 6> corner;
  std::array<cplx, 6> mid;
  std::array<Mob, 6> refl;  // z -> refl[s].apply(conj z) inverts across side s
};

const HexData& hex_data() {
  static const HexData data = [] {
    HexData hd;
    auto [R, v] = regular_hexagon_90();
    (void)R;
    for (int j = 0; j < 6; ++j) hd.corner[j] = v[j].z();
    for (int s = 0; s < 6; ++s) {
      HPoint m = hyp_midpoint(v[s], v[(s + 1) % 6]);
      hd.mid[s] = m.z();
      Geodesic G = geodesic_through(v[s], v[(s + 1) % 6]);
      // inversion in the side's carrier circle: z -> C + r^2/(conj z - conj C)
      cplx C{G.center.x, G.center.y};
      double r2 = G.radius * G.radius;
      hd.refl[s] = Mob{C, r2 - std::norm(C), cplx{1}, -std::conj(C)};
    }
    return hd;
  }();
  return data;
}

// Side s joins corners s and s+1; ports are sides 0, 2, 4. Reflecting
// across side s fixes the shared side, so the child's parent side is s in
// its own canonical coordinates.
HexFrame step_frame(const HexFrame& f, int side) {
  const HexData& hd = hex_data();
  HexFrame out;
  if (!f.flip) {
    out.M = f.M.mul(hd.refl[side]);
    out.flip = true;
  } else {
    out.M = f.M.mul(hd.refl[side].conj_entries());
    out.flip = false;
  }
  return out;
}

}  // namespace

HypDrawing draw_binary_tree_hyp(const Graph& t) {
  if (!is_tree(t)) throw std::runtime_error("draw_binary_tree_hyp: not a tree");
  if (t.n < 2) throw std::runtime_error("draw_binary_tree_hyp: need >= 2 vertices");
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) != 1 && t.degree(v) != 3)
      throw std::runtime_error("draw_binary_tree_hyp: vertex of degree " +
                               std::to_string(t.degree(v)) + " (only 1 or 3 allowed)");

  HypDrawing d;
  d.orig_n = t.n;
  d.g = Graph(t.n + int(t.edges.size()));
  d.coords.assign(d.g.n, HPoint{});
  int next_mid = t.n;

  int root = 0;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) == 3) {
      root = v;
      break;
    }

  const HexData& hd = hex_data();

  struct Item {
    int v, parent, parent_side;
    HexFrame frame;
  };
  std::vector<Item> stack{{root, -1, -1, HexFrame{}}};
  try {
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      d.coords[it.v] = it.frame.pt(cplx{0});
      std::vector<int> ports;
      for (int s : {0, 2, 4})
        if (s != it.parent_side) ports.push_back(s);
      size_t pi = 0;
      for (int w : t.adj[it.v]) {
        if (w == it.parent) continue;
        int side = ports[pi++];
        int mid = next_mid++;
        d.coords[mid] = it.frame.pt(hd.mid[side]);
        d.g.add_edge(it.v, mid);
        d.g.add_edge(mid, w);
        d.edge_mid.push_back({it.v, w, mid});
        stack.push_back({w, it.v, side, step_frame(it.frame, side)});
      }
    }
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("draw_binary_tree_hyp: depth limit (disk margin reached)");
  }
  return d;
}

namespace {

bool is_k14_subdivision(const Graph& t) {
  if (!is_tree(t)) return false;
  int d4 = 0, d1 = 0;
  for (int v = 0; v < t.n; ++v) {
    int d = t.degree(v);
    if (d == 4) ++d4;
    else if (d == 1) ++d1;
    else if (d != 2) return false;
  }
  return d4 == 1 && d1 == 4;
}

}  // namespace

bool hyp_tree_admits_ic(const Graph& t) {
  if (!is_tree(t)) throw std::runtime_error("hyp_tree_admits_ic: not a tree");
  int maxdeg = 0;
  for (int v = 0; v < t.n; ++v) maxdeg = std::max(maxdeg, t.degree(v));
  if (maxdeg <= 3) return true;
  return is_k14_subdivision(t);
}

HypDrawing draw_k14_subdivision(const Graph& t) {
  if (!is_k14_subdivision(t)) throw std::runtime_error("draw_k14_subdivision: not a K_{1,4} subdivision");
  int center = -1;
  for (int v = 0; v < t.n; ++v)
    if (t.degree(v) == 4) center = v;

  HypDrawing d;
  d.orig_n = t.n;
  d.g = t;
  d.coords.assign(t.n, HPoint{});
  d.coords[center] = HPoint{};
  for (int leg = 0; leg < 4; ++leg) {
    double ang = deg2rad(90.0 * leg);
    Vec2 ray{std::cos(ang), std::sin(ang)};
    int prev = center, cur = t.adj[center][leg];
    double dist = 0, step = 1.0;
    while (true) {
      dist += step;
      step *= 0.7;  // geometrically decreasing hyperbolic steps
      double r = std::tanh(dist / 2.0);
      d.coords[cur] = HPoint(r * ray.x, r * ray.y);
      if (t.degree(cur) == 1) break;
      int nxt = t.adj[cur][0] == prev ? t.adj[cur][1] : t.adj[cur][0];
      prev = cur;
      cur = nxt;
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// arc intersection machinery

namespace {

struct Arc {
  Geodesic G;
  HPoint a, b;
  int ia{-1}, ib{-1};  // drawing vertex ids, -1 when not applicable
};

bool same_carrier(const Geodesic& g1, const Geodesic& g2) {
  if (g1.is_diameter != g2.is_diameter) return false;
  if (g1.is_diameter) return std::abs(g1.dir.cross(g2.dir)) < 1e-9;
  return (g1.center - g2.center).norm() < 1e-9 * std::max(1.0, g1.center.norm()) &&
         std::abs(g1.radius - g2.radius) < 1e-9 * std::max(1.0, g1.radius);
}

// carrier intersection points, restricted to the open unit disk
std::vector<Point2> carrier_intersections(const Geodesic& g1, const Geodesic& g2) {
  std::vector<Point2> out;
  auto keep = [&](const Point2& p) {
    if (p.norm2() < 1.0 - 1e-13) out.push_back(p);
  };
  if (g1.is_diameter && g2.is_diameter) {
    keep({0, 0});
    return out;
  }
  auto line_circle = [&](const Vec2& dir, const Point2& c) {
    // t^2 - 2 (dir.c) t + 1 = 0 on the orthogonal circle
    double m = dir.dot(c);
    double disc = m * m - 1.0;
    if (disc < 0) return;
    double rt = std::sqrt(disc);
    keep(dir * (m + rt));
    keep(dir * (m - rt));
  };
  if (g1.is_diameter) {
    line_circle(g1.dir, g2.center);
    return out;
  }
  if (g2.is_diameter) {
    line_circle(g2.dir, g1.center);
    return out;
  }
  Vec2 u = g2.center - g1.center;
  double dd = u.norm();
  if (dd < 1e-15) return out;  // same center: concentric, no crossing
  double a = (dd * dd + g1.radius * g1.radius - g2.radius * g2.radius) / (2 * dd);
  double h2 = g1.radius * g1.radius - a * a;
  if (h2 < 0) return out;
  double h = std::sqrt(h2);
  Vec2 un = u * (1.0 / dd);
  Point2 base = g1.center + un * a;
  Vec2 perp{-un.y, un.x};
  keep(base + perp * h);
  keep(base - perp * h);
  return out;
}

// closed membership of a carrier point on the arc; the in-disk part of
// a carrier stays under a semicircle, so the chord projection is
// monotone along it and works for diameters and circles alike
bool on_arc(const Arc& arc, const Point2& p, double tol) {
  Point2 A = arc.a.euclid(), B = arc.b.euclid();
  Vec2 ab = B - A;
  double t = (p - A).dot(ab) / ab.norm2();
  return t >= -tol && t <= 1.0 + tol;
}

bool near_point(const Point2& p, const HPoint& q, double tol) {
  return (p - q.euclid()).norm() <= tol;
}

// strict crossing of two arcs; touching at a shared drawing vertex is fine
bool arcs_cross(const Arc& x, const Arc& y, double tol) {
  // arcs meeting at a shared vertex lie on geodesics through one point;
  // distinct geodesics meet at most once, so the pair crosses only when
  // both leave the joint along the same geodesic in the same direction
  if (x.ia != -1 && x.ib != -1 && y.ia != -1 && y.ib != -1) {
    HPoint s, ox, oy;
    bool joint = true;
    if (x.ia == y.ia) { s = x.a; ox = x.b; oy = y.b; }
    else if (x.ia == y.ib) { s = x.a; ox = x.b; oy = y.a; }
    else if (x.ib == y.ia) { s = x.b; ox = x.a; oy = y.b; }
    else if (x.ib == y.ib) { s = x.b; ox = x.a; oy = y.a; }
    else joint = false;
    if (joint) {
      cplx w1 = mobius_to_origin(s.z(), ox.z());
      cplx w2 = mobius_to_origin(s.z(), oy.z());
      double cr = w1.real() * w2.imag() - w1.imag() * w2.real();
      double dt = w1.real() * w2.real() + w1.imag() * w2.imag();
      return dt > 0 && std::abs(cr) <= tol * std::abs(w1) * std::abs(w2);
    }
  }
  // redo the test with x.a translated to the origin; the automorphism
  // preserves geodesics and keeps deep near-rim clusters at unit scale,
  // where the carrier solve above loses the tiny circles entirely
  cplx a0 = x.a.z();
  auto tr = [&](const HPoint& h) {
    cplx w = mobius_to_origin(a0, h.z());
    // points far from x.a can round onto the rim; pull them just inside
    double cap = 1.0 - 2.0 * kDiskMargin, n = std::abs(w);
    if (n > cap) w *= cap / n;
    return to_hpoint(w);
  };
  Arc X{Geodesic{}, tr(x.a), tr(x.b), x.ia, x.ib};
  Arc Y{Geodesic{}, tr(y.a), tr(y.b), y.ia, y.ib};
  // an arc that collapses under the translation lies a huge distance
  // from x and cannot reach it
  if ((Y.b.euclid() - Y.a.euclid()).is_zero()) return false;
  X.G = geodesic_through(X.a, X.b);
  Y.G = geodesic_through(Y.a, Y.b);
  auto shared_ok = [&](const Point2& p) {
    // an intersection at a shared endpoint is a joint, not a crossing
    bool sx_a = near_point(p, X.a, tol), sx_b = near_point(p, X.b, tol);
    bool sy_a = near_point(p, Y.a, tol), sy_b = near_point(p, Y.b, tol);
    if ((sx_a || sx_b) && (sy_a || sy_b)) {
      int xi = sx_a ? X.ia : X.ib;
      int yi = sy_a ? Y.ia : Y.ib;
      return xi == yi && xi != -1;
    }
    return false;
  };
  if (same_carrier(X.G, Y.G)) {
    // overlap iff an endpoint of one lies in the other's interior
    auto interior = [&](const Arc& arc, const HPoint& e) {
      Point2 p = e.euclid();
      return on_arc(arc, p, tol) && !near_point(p, arc.a, tol) && !near_point(p, arc.b, tol);
    };
    return interior(X, Y.a) || interior(X, Y.b) || interior(Y, X.a) || interior(Y, X.b);
  }
  for (const Point2& p : carrier_intersections(X.G, Y.G)) {
    if (!on_arc(X, p, tol) || !on_arc(Y, p, tol)) continue;
    if (shared_ok(p)) continue;
    return true;
  }
  return false;
}

// does the full geodesic N meet the arc anywhere in the disk?
bool geodesic_hits_arc(const Geodesic& N, const Arc& arc, double tol) {
  if (same_carrier(N, arc.G)) return true;
  for (const Point2& p : carrier_intersections(N, arc.G))
    if (on_arc(arc, p, tol)) return true;
  return false;
}

std::vector<Arc> collect_arcs(const HypDrawing& d,
                              const std::vector<std::pair<int, int>>& edges) {
  std::vector<Arc> arcs;
  for (auto [u, v] : edges) {
    Arc a;
    a.a = d.coords[u];
    a.b = d.coords[v];
    a.ia = u;
    a.ib = v;
    a.G = geodesic_through(a.a, a.b);
    arcs.push_back(a);
  }
  return arcs;
}

}  // namespace

bool hyp_planar(const HypDrawing& d, double tol) {
  std::vector<Arc> arcs = collect_arcs(d, d.g.edges);
  for (size_t i = 0; i < arcs.size(); ++i)
    for (size_t j = i + 1; j < arcs.size(); ++j)
      if (arcs_cross(arcs[i], arcs[j], tol)) return false;
  return true;
}

bool hyp_discrete_ic_check(const HypDrawing& d,
                           const std::vector<std::pair<int, int>>& tree_edges,
                           double tol) {
  int n = d.g.n;
  std::vector<std::vector<int>> adj(n);
  for (auto [u, v] : tree_edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto [eu, ev] : tree_edges) {
    for (int dir = 0; dir < 2; ++dir) {
      int u = dir == 0 ? eu : ev, v = dir == 0 ? ev : eu;
      // every vertex strictly beyond v must lie in the halfplane h(u, v)
      std::vector<bool> seen(n, false);
      seen[u] = seen[v] = true;
      std::queue<int> q;
      q.push(v);
      while (!q.empty()) {
        int w = q.front();
        q.pop();
        for (int x : adj[w]) {
          if (seen[x]) continue;
          seen[x] = true;
          if (!hyp_halfplane_contains(d.coords[u], d.coords[v], d.coords[x], tol))
            return false;
          q.push(x);
        }
      }
    }
  }
  return true;
}

bool hyp_sampled_normal_check(const HypDrawing& d,
                              const std::vector<std::pair<int, int>>& tree_edges,
                              int samples, double tol) {
  std::vector<Arc> arcs = collect_arcs(d, tree_edges);
  for (size_t i = 0; i < arcs.size(); ++i) {
    const Arc& arc = arcs[i];
    double D = hyp_distance(arc.a, arc.b);
    cplx m0 = arc.a.z();
    cplx bp = mobius_to_origin(m0, arc.b.z());
    cplx u = bp / std::abs(bp);
    for (int k = 1; k <= samples; ++k) {
      double s = D * double(k) / double(samples + 1);
      cplx w = u * std::tanh(s / 2.0);
      cplx m = mobius_from_origin(m0, w);  // sample point on the arc
      // work in the frame with m at the origin, where the arc runs along
      // u' and its normal is exactly the diameter along i u'; translating
      // the other arcs keeps deep near-rim clusters at unit scale
      cplx ap = mobius_to_origin(m, arc.a.z());
      cplx up = ap / std::abs(ap);
      cplx nd = cplx(0, 1) * up;
      Geodesic N;
      N.is_diameter = true;
      N.dir = {nd.real(), nd.imag()};
      auto trm = [&](const HPoint& h) {
        cplx z = mobius_to_origin(m, h.z());
        double cap = 1.0 - 2.0 * kDiskMargin, nn = std::abs(z);
        if (nn > cap) z *= cap / nn;
        return to_hpoint(z);
      };
      for (size_t j = 0; j < arcs.size(); ++j) {
        if (j == i) continue;
        HPoint A = trm(arcs[j].a), B = trm(arcs[j].b);
        // an arc that collapses under the translation is far from m
        if ((B.euclid() - A.euclid()).is_zero()) continue;
        Arc t{geodesic_through(A, B), A, B, arcs[j].ia, arcs[j].ib};
        if (geodesic_hits_arc(N, t, tol)) return false;
      }
    }
  }
  return true;
}

bool certify_tree_hyp(const HypDrawing& d, const std::vector<std::pair<int, int>>& tree_edges,
                      double tol, int samples) {
  return hyp_discrete_ic_check(d, tree_edges, tol) &&
         hyp_sampled_normal_check(d, tree_edges, samples, tol);
}

// ---------------------------------------------------------------------------
// planar binary cactus drawings

HypDrawing draw_binary_cactus_hyp(const BinaryCactus& c) {
  int n = c.g.n;
  // cycle path per block (root v0 first); fans over >= 4 vertices rejected
  std::vector<std::vector<int>> cyc_path(c.bc.blocks.size());
  std::vector<std::pair<int, int>> closing;
  Graph tree(n);
  for (size_t bi = 0; bi < c.bc.blocks.size(); ++bi) {
    int k = int(c.bc.blocks[bi].vertices.size());
    int r = c.bc.root_vertex[bi];
    if (k <= 2) {
      for (int w : c.order[bi]) tree.add_edge(r, w);
      continue;
    }
    if (c.shape[bi] == BlockShape::fan && k > 3)
      throw std::runtime_error("draw_binary_cactus_hyp: block-shape violation (fan block)");
    std::vector<int> path{r};
    for (int w : c.order[bi]) path.push_back(w);
    for (size_t j = 0; j + 1 < path.size(); ++j) tree.add_edge(path[j], path[j + 1]);
    closing.emplace_back(r, path.back());
    cyc_path[bi] = std::move(path);
  }
  for (int v = 0; v < n; ++v)
    if (tree.degree(v) > 3)
      throw std::logic_error("draw_binary_cactus_hyp: tree degree exceeds 3");

  // successor along a cycle path, per directed tree edge (prev -> v)
  std::map<std::pair<int, int>, int> successor;
  for (const auto& path : cyc_path)
    for (size_t j = 0; j + 2 < path.size(); ++j)
      successor[{path[j], path[j + 1]}] = path[j + 2];

  HypDrawing d;
  d.orig_n = n;
  d.g = Graph(n + int(tree.edges.size()));
  d.coords.assign(d.g.n, HPoint{});
  d.closing_arcs = closing;
  int next_mid = n;

  const HexData& hd = hex_data();

  struct Item {
    int v, parent, parent_side;
    HexFrame frame;
    HPoint parent_mid;  // port midpoint toward the parent
  };
  std::vector<Item> stack{{c.root(), -1, -1, HexFrame{}, HPoint{}}};
  try {
    while (!stack.empty()) {
      Item it = stack.back();
      stack.pop_back();
      HPoint center = it.frame.pt(cplx{0});
      d.coords[it.v] = center;

      std::vector<int> ports;
      for (int s : {0, 2, 4})
        if (s != it.parent_side) ports.push_back(s);

      std::vector<int> children;
      for (int w : tree.adj[it.v])
        if (w != it.parent) children.push_back(w);
      if (children.empty()) continue;

      // map available ports to their ccw angle from the incoming direction
      std::map<int, int> port_of;  // child -> side
      if (it.parent == -1 || ports.size() == 3) {
        for (size_t i = 0; i < children.size(); ++i) port_of[children[i]] = ports[i];
      } else {
        Vec2 d_in = geodesic_tangent(geodesic_through(center, it.parent_mid),
                                     center, it.parent_mid);
        int side120 = -1, side240 = -1;
        for (int s : ports) {
          HPoint mid = it.frame.pt(hd.mid[s]);
          Vec2 dp = geodesic_tangent(geodesic_through(center, mid), center, mid);
          double ang = ccw_angle(d_in, dp);
          (std::abs(ang - 120.0) < std::abs(ang - 240.0) ? side120 : side240) = s;
        }
        auto succ = successor.find({it.parent, it.v});
        int succ_child = succ == successor.end() ? -1 : succ->second;
        std::vector<int> rest;
        for (int w : children)
          if (w != succ_child) rest.push_back(w);
        if (succ_child != -1) {
          // ccw angle v_{j-1} v_j v_{j+1} = 120 along the cycle
          port_of[succ_child] = side120;
          if (!rest.empty()) port_of[rest[0]] = side240;
        } else {
          // vk of a cycle keeps its subcactus away from the closing arc
          bool at_cycle_end = false;
          for (const auto& path : cyc_path)
            if (!path.empty() && path.back() == it.v) at_cycle_end = true;
          port_of[rest[0]] = at_cycle_end ? side240 : side120;
          if (rest.size() > 1) port_of[rest[1]] = at_cycle_end ? side120 : side240;
        }
      }

      for (int w : children) {
        int side = port_of.at(w);
        int mid = next_mid++;
        HPoint mid_pt = it.frame.pt(hd.mid[side]);
        d.coords[mid] = mid_pt;
        d.g.add_edge(it.v, mid);
        d.g.add_edge(mid, w);
        d.edge_mid.push_back({it.v, w, mid});
        stack.push_back({w, it.v, side, step_frame(it.frame, side), mid_pt});
      }
    }
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("draw_binary_cactus_hyp: depth limit (disk margin reached)");
  }

  for (auto [u, v] : closing) d.g.add_edge(u, v);
  if (!hyp_planar(d))
    throw std::runtime_error("draw_binary_cactus_hyp: output is not planar");
  return d;
}

}  // namespace icdraw
