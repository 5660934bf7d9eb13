#pragma once

// Scalar backends and planar geometric primitives.
//
// Everything here is templated on the scalar type S, which is either
// `double` (predicates take a tolerance, scaled by a local length) or
// `Rational` (exact arithmetic, tolerance-free with tol = 0).
// Angle-valued functions always report degrees in double precision;
// sign-based predicates are exact under the rational backend.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace icdraw {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

/// Default tolerance for the float backend, always scaled by a local length.
constexpr double kDefaultTol = 1e-9;

template <class S>
struct Vec2T {
  S x{};
  S y{};

  Vec2T() = default;
  Vec2T(S x_, S y_) : x(std::move(x_)), y(std::move(y_)) {}

  Vec2T operator+(const Vec2T& o) const { return {x + o.x, y + o.y}; }
  Vec2T operator-(const Vec2T& o) const { return {x - o.x, y - o.y}; }
  Vec2T operator-() const { return {-x, -y}; }
  Vec2T operator*(const S& s) const { return {x * s, y * s}; }
  bool operator==(const Vec2T& o) const { return x == o.x && y == o.y; }

  S dot(const Vec2T& o) const { return x * o.x + y * o.y; }
  S cross(const Vec2T& o) const { return x * o.y - y * o.x; }
  S norm2() const { return x * x + y * y; }
  double norm() const { return std::sqrt(to_double(norm2())); }
  bool is_zero() const { return x == S(0) && y == S(0); }
};

template <class S>
using Point2T = Vec2T<S>;

using Vec2 = Vec2T<double>;
using Point2 = Point2T<double>;
using Vec2Q = Vec2T<Rational>;
using Point2Q = Point2T<Rational>;

/// Closed halfplane { x : dot(x - anchor, normal) >= 0 }.
template <class S>
struct HalfplaneT {
  Point2T<S> anchor;
  Vec2T<S> normal;  // nonzero, unit length not required

  HalfplaneT() = default;
  HalfplaneT(Point2T<S> a, Vec2T<S> n) : anchor(std::move(a)), normal(std::move(n)) {
    if (normal.is_zero()) throw std::invalid_argument("halfplane: zero normal");
  }

  /// Closed membership; for the float backend `tol` is scaled by |normal|.
  bool contains(const Point2T<S>& x, const S& tol = S(0)) const {
    S d = (x - anchor).dot(normal);
    if (tol == S(0)) return d >= S(0);
    return to_double(d) >= -to_double(tol) * normal.norm() *
                               std::max(1.0, (x - anchor).norm());
  }
};

using Halfplane = HalfplaneT<double>;
using HalfplaneQ = HalfplaneT<Rational>;

/// h(p, q): the closed halfplane through q, perpendicular to pq, not
/// containing p.
template <class S>
HalfplaneT<S> halfplane_pq(const Point2T<S>& p, const Point2T<S>& q) {
  Vec2T<S> n = q - p;
  if (n.is_zero()) throw std::invalid_argument("halfplane_pq: p == q");
  return HalfplaneT<S>(q, n);
}

/// Membership of x in h(p, q); tol is scaled by |q - p|.
template <class S>
bool halfplane_contains(const Point2T<S>& p, const Point2T<S>& q,
                        const Point2T<S>& x, const S& tol = S(0)) {
  Vec2T<S> n = q - p;
  // only exact coincidence is degenerate: short segments keep full
  // relative precision, and deep recursive drawings produce edges shorter
  // than any fixed length threshold
  if (n.is_zero()) throw std::invalid_argument("halfplane_contains: degenerate segment");
  if (tol == S(0)) return (x - q).dot(n) >= S(0);
  double len = n.norm();
  return to_double((x - q).dot(n)) >= -to_double(tol) * len * std::max(1.0, (x - q).norm());
}

/// Counterclockwise angle from v1 to v2 in degrees, in [0, 360).
template <class S>
double ccw_angle(const Vec2T<S>& v1, const Vec2T<S>& v2) {
  if (v1.is_zero() || v2.is_zero()) throw std::invalid_argument("ccw_angle: zero vector");
  double a = std::atan2(to_double(v1.cross(v2)), to_double(v1.dot(v2)));
  double deg = rad2deg(a);
  if (deg < 0) deg += 360.0;
  if (deg >= 360.0) deg -= 360.0;
  return deg;
}

/// Smaller angle formed by the two vectors, in [0, 180].
template <class S>
double angle_between(const Vec2T<S>& v1, const Vec2T<S>& v2) {
  double a = ccw_angle(v1, v2);
  return std::min(a, 360.0 - a);
}

inline Vec2 dir_of_deg(double deg) {
  return {std::cos(deg2rad(deg)), std::sin(deg2rad(deg))};
}

inline double deg_of_dir(const Vec2& v) {
  double d = rad2deg(std::atan2(v.y, v.x));
  if (d < 0) d += 360.0;
  return d;
}

inline Vec2 rotate(const Vec2& v, double deg) {
  double c = std::cos(deg2rad(deg)), s = std::sin(deg2rad(deg));
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

/// Rotate by a rational rotation pair (c, s) with c^2 + s^2 = 1.
inline Vec2Q rotate(const Vec2Q& v, const Rational& c, const Rational& s) {
  return {v.x * c - v.y * s, v.x * s + v.y * c};
}

enum class SegRelation { disjoint, share_endpoint, cross, overlap };

namespace detail {

template <class S>
int orient_sign(const Point2T<S>& a, const Point2T<S>& b, const Point2T<S>& c,
                const S& tol) {
  S v = (b - a).cross(c - a);
  if (tol == S(0)) return v > S(0) ? 1 : (v < S(0) ? -1 : 0);
  // tolerance scaled by the local lengths so short segments keep their
  // full relative precision
  double scale = (b - a).norm() * (c - a).norm();
  double d = to_double(v);
  if (std::abs(d) <= to_double(tol) * scale) return 0;
  return d > 0 ? 1 : -1;
}

template <class S>
bool on_segment(const Point2T<S>& a, const Point2T<S>& b, const Point2T<S>& p,
                const S& tol) {
  if (detail::orient_sign(a, b, p, tol) != 0) return false;
  S lo_x = std::min(a.x, b.x), hi_x = std::max(a.x, b.x);
  S lo_y = std::min(a.y, b.y), hi_y = std::max(a.y, b.y);
  if (tol == S(0)) return p.x >= lo_x && p.x <= hi_x && p.y >= lo_y && p.y <= hi_y;
  double t = to_double(tol) * (b - a).norm();
  return to_double(p.x) >= to_double(lo_x) - t && to_double(p.x) <= to_double(hi_x) + t &&
         to_double(p.y) >= to_double(lo_y) - t && to_double(p.y) <= to_double(hi_y) + t;
}

}  // namespace detail

/// Classify the intersection of two non-degenerate segments. Shared
/// endpoints are reported separately from interior crossings.
template <class S>
SegRelation segments_intersect(const Point2T<S>& a, const Point2T<S>& b,
                               const Point2T<S>& c, const Point2T<S>& d,
                               const S& tol = S(0)) {
  if ((a - b).is_zero() || (c - d).is_zero())
    throw std::invalid_argument("segments_intersect: degenerate segment");

  auto close = [&](const Point2T<S>& p, const Point2T<S>& q) {
    if (tol == S(0)) return p == q;
    return (p - q).norm() <= to_double(tol) * std::max(1.0, p.norm() + q.norm());
  };
  bool shared = close(a, c) || close(a, d) || close(b, c) || close(b, d);

  int o1 = detail::orient_sign(a, b, c, tol);
  int o2 = detail::orient_sign(a, b, d, tol);
  int o3 = detail::orient_sign(c, d, a, tol);
  int o4 = detail::orient_sign(c, d, b, tol);

  if (o1 == 0 && o2 == 0) {
    // collinear: check 1D overlap beyond a possible shared endpoint
    int cnt = 0;
    if (detail::on_segment(a, b, c, tol)) ++cnt;
    if (detail::on_segment(a, b, d, tol)) ++cnt;
    if (detail::on_segment(c, d, a, tol)) ++cnt;
    if (detail::on_segment(c, d, b, tol)) ++cnt;
    if (shared) {
      // a touching pair of collinear segments shares exactly one point
      return cnt > 2 ? SegRelation::overlap : SegRelation::share_endpoint;
    }
    return cnt > 0 ? SegRelation::overlap : SegRelation::disjoint;
  }

  if (shared) return SegRelation::share_endpoint;

  if (o1 * o2 < 0 && o3 * o4 < 0) return SegRelation::cross;
  // endpoint of one segment in the interior of the other
  if ((o1 == 0 && detail::on_segment(a, b, c, tol)) ||
      (o2 == 0 && detail::on_segment(a, b, d, tol)) ||
      (o3 == 0 && detail::on_segment(c, d, a, tol)) ||
      (o4 == 0 && detail::on_segment(c, d, b, tol)))
    return SegRelation::cross;
  return SegRelation::disjoint;
}

/// Orientation of (a, b, c) decided exactly for float coordinates: a
/// standard double filter with an exact rational fallback. Deeply nested
/// constructions produce clusters whose features sit far below any fixed
/// tolerance, where the scaled-tolerance predicates misclassify.
inline int orient_sign_exact(const Point2& a, const Point2& b, const Point2& c) {
  double l = (b.x - a.x) * (c.y - a.y), r = (b.y - a.y) * (c.x - a.x);
  double det = l - r;
  if (std::abs(det) > 3.3306690738754716e-16 * (std::abs(l) + std::abs(r)))
    return det > 0 ? 1 : -1;
  Rational v = (Rational(b.x) - Rational(a.x)) * (Rational(c.y) - Rational(a.y)) -
               (Rational(b.y) - Rational(a.y)) * (Rational(c.x) - Rational(a.x));
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Exact point-on-closed-segment test for float coordinates.
inline bool on_segment_exact(const Point2& a, const Point2& b, const Point2& p) {
  if (orient_sign_exact(a, b, p) != 0) return false;
  return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
         p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

/// segments_intersect with exact predicates (tol = 0 semantics) for float
/// coordinates; shared endpoints are exact coordinate equality.
inline SegRelation segments_intersect_exact(const Point2& a, const Point2& b,
                                            const Point2& c, const Point2& d) {
  if ((a - b).is_zero() || (c - d).is_zero())
    throw std::invalid_argument("segments_intersect_exact: degenerate segment");
  bool shared = a == c || a == d || b == c || b == d;
  int o1 = orient_sign_exact(a, b, c);
  int o2 = orient_sign_exact(a, b, d);
  int o3 = orient_sign_exact(c, d, a);
  int o4 = orient_sign_exact(c, d, b);
  if (o1 == 0 && o2 == 0) {
    int cnt = 0;
    if (on_segment_exact(a, b, c)) ++cnt;
    if (on_segment_exact(a, b, d)) ++cnt;
    if (on_segment_exact(c, d, a)) ++cnt;
    if (on_segment_exact(c, d, b)) ++cnt;
    if (shared) return cnt > 2 ? SegRelation::overlap : SegRelation::share_endpoint;
    return cnt > 0 ? SegRelation::overlap : SegRelation::disjoint;
  }
  if (shared) return SegRelation::share_endpoint;
  if (o1 * o2 < 0 && o3 * o4 < 0) return SegRelation::cross;
  if ((o1 == 0 && on_segment_exact(a, b, c)) || (o2 == 0 && on_segment_exact(a, b, d)) ||
      (o3 == 0 && on_segment_exact(c, d, a)) || (o4 == 0 && on_segment_exact(c, d, b)))
    return SegRelation::cross;
  return SegRelation::disjoint;
}

/// Closed cone: apex, axis direction, half-angle in degrees in [0, 180].
struct Cone {
  Point2 apex;
  Vec2 axis;
  double half_angle_deg{0};

  Cone() = default;
  Cone(Point2 a, Vec2 ax, double half) : apex(a), axis(ax), half_angle_deg(half) {
    if (axis.is_zero()) throw std::invalid_argument("cone: zero axis");
    if (half < 0 || half > 180) throw std::invalid_argument("cone: half angle out of range");
  }

  bool contains(const Point2& x, double tol = kDefaultTol) const {
    Vec2 v = x - apex;
    if (v.is_zero()) throw std::invalid_argument("cone_contains: point at apex");
    return angle_between(v, axis) <= half_angle_deg + tol;
  }
};

inline bool cone_contains(const Cone& c, const Point2& x, double tol = kDefaultTol) {
  return c.contains(x, tol);
}

/// Rational unit vector within `delta_deg` (default 0.01 deg) of the target
/// direction, via the half-angle tangent parametrization
/// ((1-t^2)/(1+t^2), 2t/(1+t^2)) with t rational.
inline Vec2Q rational_unit_direction(double theta_deg, double delta_deg = 0.01) {
  // wrap into (-180, 180] so tan(theta/2) is finite away from the wrap point
  double th = std::fmod(theta_deg, 360.0);
  if (th > 180.0) th -= 360.0;
  if (th <= -180.0) th += 360.0;
  if (th > 179.999) th = 180.0;
  if (std::abs(th - 180.0) < 1e-12) return {Rational(-1), Rational(0)};

  double t = std::tan(deg2rad(th) / 2.0);
  // denominator large enough that the angular error stays far below delta
  const std::int64_t den = std::int64_t(1) << 40;
  Rational tq(static_cast<boost::multiprecision::cpp_int>(std::llround(t * double(den))), den);
  Rational one(1);
  Rational t2 = tq * tq;
  Vec2Q u{(one - t2) / (one + t2), (tq + tq) / (one + t2)};
  double err = angle_between(Vec2{to_double(u.x), to_double(u.y)}, dir_of_deg(th));
  if (err > delta_deg) throw std::runtime_error("rational_unit_direction: snap failed");
  return u;
}

/// Convex polygon as a ccw vertex list; used for diamond regions and
/// Schnyder feasible regions.
using ConvexPolygon = std::vector<Point2>;

/// Clip a convex polygon by a closed halfplane (Sutherland-Hodgman step).
inline ConvexPolygon clip_convex(const ConvexPolygon& poly, const Halfplane& h) {
  ConvexPolygon out;
  size_t n = poly.size();
  if (n == 0) return out;
  for (size_t i = 0; i < n; ++i) {
    const Point2& cur = poly[i];
    const Point2& nxt = poly[(i + 1) % n];
    double dc = (cur - h.anchor).dot(h.normal);
    double dn = (nxt - h.anchor).dot(h.normal);
    if (dc >= 0) out.push_back(cur);
    if ((dc > 0 && dn < 0) || (dc < 0 && dn > 0)) {
      double t = dc / (dc - dn);
      out.push_back(cur + (nxt - cur) * t);
    }
  }
  return out;
}

inline Point2 polygon_centroid(const ConvexPolygon& poly) {
  if (poly.empty()) throw std::invalid_argument("polygon_centroid: empty polygon");
  double a2 = 0, cx = 0, cy = 0;
  size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % n];
    double w = p.cross(q);
    a2 += w;
    cx += (p.x + q.x) * w;
    cy += (p.y + q.y) * w;
  }
  if (std::abs(a2) < 1e-300) {
    // (near-)degenerate polygon: fall back to the vertex average
    double sx = 0, sy = 0;
    for (const Point2& p : poly) { sx += p.x; sy += p.y; }
    return {sx / double(n), sy / double(n)};
  }
  return {cx / (3 * a2), cy / (3 * a2)};
}

inline bool point_in_convex_polygon(const ConvexPolygon& poly, const Point2& p,
                                    double tol = kDefaultTol) {
  size_t n = poly.size();
  if (n < 3) return false;
  double orient = 0;
  for (size_t i = 0; i < n && orient == 0; ++i)
    orient = (poly[(i + 1) % n] - poly[i]).cross(poly[(i + 2) % n] - poly[(i + 1) % n]);
  double sgn = orient >= 0 ? 1.0 : -1.0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = poly[(i + 1) % n] - poly[i];
    double c = sgn * e.cross(p - poly[i]);
    if (c < -tol * std::max(1.0, e.norm() * (p - poly[i]).norm())) return false;
  }
  return true;
}

}  // namespace icdraw
