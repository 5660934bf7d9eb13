#include "icdraw/cactus_drawer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace icdraw {

FanLayout draw_fan(int k, double eps_deg, const Point2& root, const Vec2& alignment,
                   double radius, bool base_case) {
  if (k < 1) throw std::invalid_argument("draw_fan: k must be positive");
  if (eps_deg <= 0 || eps_deg >= 90) throw std::invalid_argument("draw_fan: eps out of range");
  if (radius <= 0) throw std::invalid_argument("draw_fan: radius must be positive");
  if (alignment.is_zero()) throw std::invalid_argument("draw_fan: zero alignment");

  FanLayout out;
  out.root = root;
  out.alignment = alignment;
  out.radius = radius;
  out.alpha_deg = base_case ? eps_deg / k : eps_deg / (2 * k);
  Vec2 unit = alignment * (1.0 / alignment.norm());
  for (int i = 1; i <= k; ++i) {
    // v1 sits ccw of the alignment, vk cw; consecutive spacing alpha
    double off = out.alpha_deg * (0.5 * k - (i - 1));
    out.children.push_back(root + rotate(unit, off) * radius);
  }
  return out;
}

bool DiamondRegion::contains(const Point2& x, double tol) const {
  if (!(x == cone.apex) && !cone.contains(x, tol)) return false;
  for (const Halfplane& h : clips)
    if (!h.contains(x, tol)) return false;
  return true;
}

double DiamondRegion::clip_distance() const {
  double d = std::numeric_limits<double>::infinity();
  for (const Halfplane& h : clips)
    d = std::min(d, (cone.apex - h.anchor).dot(h.normal) / h.normal.norm());
  return d;
}

DiamondRegion diamond_region(const FanLayout& layout, int i, double eps_prime_deg) {
  int k = int(layout.children.size());
  if (i < 1 || i > k) throw std::out_of_range("diamond_region: child index");
  if (eps_prime_deg <= 0) throw std::invalid_argument("diamond_region: eps'");

  auto axis_of = [&](int j) {
    Vec2 a = layout.children[j - 1] - layout.root;
    return a * (1.0 / a.norm());
  };

  DiamondRegion d;
  d.cone = Cone(layout.children[i - 1], axis_of(i), eps_prime_deg / 2);
  // h_j^l / h_j^r: halfplanes through v_j orthogonal to the ccw / cw
  // boundary ray of v_j's cone, each containing the fan root.
  auto boundary_halfplane = [&](int j, double side_sign) {
    Vec2 ray = rotate(axis_of(j), side_sign * eps_prime_deg / 2);
    return Halfplane(layout.children[j - 1], -ray);
  };
  if (i > 1) d.clips.push_back(boundary_halfplane(i - 1, -1.0));  // h_{i-1}^r
  if (i < k) d.clips.push_back(boundary_halfplane(i + 1, +1.0));  // h_{i+1}^l
  return d;
}

namespace {

// complex multiplication; a similarity transform is p -> at + mul * p
Vec2 cmul(const Vec2& a, const Vec2& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

Vec2Q cmul(const Vec2Q& a, const Vec2Q& b) {
  return {a.x * b.x - a.y * b.y, a.x * b.y + a.y * b.x};
}

Vec2Q lift(const Point2& p) { return {Rational(p.x), Rational(p.y)}; }

// One block's subdrawing in its own frame: block root at the origin,
// alignment (0,-1), fan radius 1. Subcactuses hanging off fan children are
// kept as nested frames rather than flattened, so each level works at unit
// scale regardless of how small the composed drawing becomes.
struct SubTree {
  std::vector<std::pair<int, Point2>> placed;  // (vertex, local position)
  // per child frame: origin (the fan child the subcactus roots at) and
  // rotation-scale taking (0,-1) to the child axis
  std::vector<Point2> child_at;
  std::vector<Vec2> child_mul;
  std::vector<SubTree> child_sub;
  double rho{1.0};  // upper bound on content distance from the frame origin
};

// offsets of all content of t from the enclosing frame origin, with t
// pre-transformed by p -> at + mul * p
void collect_offsets(const SubTree& t, const Point2& at, const Vec2& mul,
                     std::vector<Point2>& out) {
  for (const auto& [w, p] : t.placed) out.push_back(at + cmul(mul, p));
  for (size_t i = 0; i < t.child_sub.size(); ++i)
    collect_offsets(t.child_sub[i], at + cmul(mul, t.child_at[i]),
                    cmul(mul, t.child_mul[i]), out);
}

SubTree draw_block_tree(const BinaryCactus& c, int bi, double eps_deg) {
  const std::vector<int>& order = c.order[bi];
  int k = int(order.size());
  SubTree t;
  if (k == 0) return t;

  bool base = true;
  for (int v : order)
    if (!c.blocks_rooted_at(v).empty()) base = false;

  FanLayout lay = draw_fan(k, eps_deg, Point2{0, 0}, Vec2{0, -1}, 1.0, base);
  for (int i = 0; i < k; ++i) t.placed.push_back({order[i], lay.children[i]});
  if (base) return t;

  double eps_prime = eps_deg / (4 * k);
  // distance from a child to its neighbor clip boundary, in the
  // cancellation-free form of cos(alpha/4) - cos(3 alpha/4)
  double ar = deg2rad(lay.alpha_deg);
  double clip_dist = 2.0 * std::sin(ar / 2) * std::sin(ar / 4);

  for (int i = 1; i <= k; ++i) {
    int v = order[i - 1];
    std::vector<int> below = c.blocks_rooted_at(v);
    if (below.empty()) continue;
    DiamondRegion dia = diamond_region(lay, i, eps_prime);
    // fit the subdrawing: clear of the neighbor clips (when any) and small
    // against the fan radius
    double dmin = k > 1 ? std::min(clip_dist, 0.5) : 0.5;

    SubTree sub = draw_block_tree(c, below[0], eps_prime);
    double s = 0.9 * dmin / sub.rho;
    if (!(s > 0 && s < 1))
      throw std::logic_error("draw_cactus_ic: scale monotonicity violated");

    Vec2 axis = lay.children[i - 1];  // unit: fan radius is 1
    Vec2 mul{-axis.y * s, axis.x * s};

    // diamond containment, checked on offsets from v_i: the cone test is
    // done on angles and the clip test via |offset| <= 0.9 dmin, which
    // implies halfplane membership since the clip boundaries are at
    // distance >= dmin from v_i
    std::vector<Point2> offs;
    collect_offsets(sub, Point2{0, 0}, mul, offs);
    double cone_tol = 1e-9 + dia.cone.half_angle_deg * 1e-6;
    for (const Point2& q : offs) {
      if (angle_between(q, dia.cone.axis) > dia.cone.half_angle_deg + cone_tol ||
          q.norm() > 0.9 * dmin * (1 + 1e-9))
        throw std::logic_error("draw_cactus_ic: subdrawing escaped its diamond");
    }

    t.rho = std::max(t.rho, 1.0 + s * sub.rho);
    t.child_at.push_back(lay.children[i - 1]);
    t.child_mul.push_back(mul);
    t.child_sub.push_back(std::move(sub));
  }
  return t;
}

void flatten_q(const SubTree& t, const Point2Q& at, const Vec2Q& mul,
               std::vector<Point2Q>& out) {
  for (const auto& [w, p] : t.placed) out[w] = at + cmul(mul, lift(p));
  for (size_t i = 0; i < t.child_sub.size(); ++i)
    flatten_q(t.child_sub[i], at + cmul(mul, lift(t.child_at[i])),
              cmul(mul, lift(t.child_mul[i])), out);
}

}  // namespace

EuclidDrawingQ draw_cactus_ic_q(const BinaryCactus& c, double eps_deg) {
  if (!is_downward_triangulated(c))
    throw std::runtime_error("draw_cactus_ic: cactus is not downward-triangulated");
  if (eps_deg <= 0 || eps_deg >= 90)
    throw std::invalid_argument("draw_cactus_ic: eps must lie in (0, 90)");

  SubTree root = draw_block_tree(c, c.bc.root_block, eps_deg);
  std::vector<Point2Q> coords(c.g.n, Point2Q{Rational(0), Rational(0)});
  // root at the origin, downward is -y so the root sits on top
  flatten_q(root, Point2Q{Rational(0), Rational(0)}, Vec2Q{Rational(1), Rational(0)},
            coords);
  return EuclidDrawingQ(std::move(coords), Rational(0));
}

EuclidDrawing draw_cactus_ic(const BinaryCactus& c, double eps_deg) {
  EuclidDrawingQ q = draw_cactus_ic_q(c, eps_deg);
  std::vector<Point2> coords;
  coords.reserve(q.coords.size());
  for (const auto& p : q.coords) coords.push_back({to_double(p.x), to_double(p.y)});
  return make_drawing(std::move(coords));
}

std::vector<int> cactus_witness_path(const BinaryCactus& c, int s, int t) {
  if (s == t) throw std::invalid_argument("cactus_witness_path: s == t");
  auto chain = [&](int v) {
    std::vector<int> out{v};
    int cur = v;
    while (cur != c.root()) {
      cur = c.bc.root_vertex[c.block_of(cur)];
      out.push_back(cur);
    }
    return out;
  };
  std::vector<int> a = chain(s), b = chain(t);

  // t on s's downward chain (or vice versa): a pure down/up path
  auto index_of = [](const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) - v.begin();
  };
  if (size_t i = index_of(a, t); i < a.size()) return {a.begin(), a.begin() + i + 1};
  if (size_t i = index_of(b, s); i < b.size()) {
    std::vector<int> out(b.begin(), b.begin() + i + 1);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // first common vertex x of the two chains; the steps before x land in
  // the unique block rooted at x, where the path moves sideways
  std::vector<bool> in_b(c.g.n, false);
  for (int v : b) in_b[v] = true;
  size_t ia = 0;
  while (!in_b[a[ia]]) ++ia;
  int x = a[ia];
  size_t ib = size_t(index_of(b, x));

  int bi = c.block_of(a[ia - 1]);
  if (bi != c.block_of(b[ib - 1]))
    throw std::logic_error("cactus_witness_path: chain meet mismatch");
  const std::vector<int>& ord = c.order[bi];
  int p = int(std::find(ord.begin(), ord.end(), a[ia - 1]) - ord.begin());
  int q = int(std::find(ord.begin(), ord.end(), b[ib - 1]) - ord.begin());

  std::vector<int> out(a.begin(), a.begin() + ia);  // s .. a[ia-1]
  int step = p < q ? 1 : -1;
  for (int j = p + step; j != q; j += step) out.push_back(ord[j]);
  for (size_t j = ib; j-- > 0;) out.push_back(b[j]);  // b[ib-1] .. t
  return out;
}

WitnessMap cactus_witnesses(const BinaryCactus& c) {
  WitnessMap w;
  for (int s = 0; s < c.g.n; ++s)
    for (int t = 0; t < c.g.n; ++t)
      if (s != t) w[{s, t}] = cactus_witness_path(c, s, t);
  return w;
}

}  // namespace icdraw
