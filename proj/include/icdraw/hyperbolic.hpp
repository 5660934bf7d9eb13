#pragma once

// Poincare-disk geometry and the hyperbolic constructions: hexagon-tiling
// increasing-chord drawings of binary trees, K_{1,4} subdivisions, planar
// binary-cactus drawings, and certification of hyperbolic tree drawings.
// Float-only: hyperbolic functions are transcendental.

#include "icdraw/geometry.hpp"
#include "icdraw/graph.hpp"

#include <array>
#include <complex>
#include <utility>
#include <vector>

namespace icdraw {

/// Minimum allowed value of 1 - |p|^2; constructions that would cross it
/// abort instead of emitting garbage.
constexpr double kDiskMargin = 1e-12;

struct HPoint {
  double x{0}, y{0};

  HPoint() = default;
  HPoint(double x_, double y_) : x(x_), y(y_) {
    if (1.0 - x * x - y * y < kDiskMargin)
      throw std::invalid_argument("HPoint: outside the open unit disk");
  }

  double norm2() const { return x * x + y * y; }
  std::complex<double> z() const { return {x, y}; }
  Point2 euclid() const { return {x, y}; }
};

/// Geodesic carrier: a diameter or a circle orthogonal to the unit circle
/// (|center|^2 = 1 + radius^2).
struct Geodesic {
  bool is_diameter{true};
  Vec2 dir;        // unit, diameter case
  Point2 center;   // circle case
  double radius{0};
};

/// Hyperbolic distance in the Poincare disk.
double hyp_distance(const HPoint& p, const HPoint& q);

/// The unique geodesic through two distinct points.
Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Geodesic from its two ideal (boundary) endpoints.
Geodesic geodesic_from_ideal(const std::complex<double>& e1, const std::complex<double>& e2);

/// Hyperbolic reflection across G: Euclidean mirror (diameter) or circle
/// inversion. An isometry and an involution.
HPoint reflect(const Geodesic& G, const HPoint& x);

/// Unit Euclidean tangent of G at `at`, oriented toward `toward`.
Vec2 geodesic_tangent(const Geodesic& G, const HPoint& at, const HPoint& toward);

/// Point at hyperbolic distance s from p along the geodesic toward q.
HPoint hyp_point_toward(const HPoint& p, const HPoint& q, double s);

HPoint hyp_midpoint(const HPoint& p, const HPoint& q);

/// x in the closed hyperbolic halfplane bounded by the geodesic through b
/// perpendicular to ab, on the far side from a. Computed by normalizing
/// b to the origin with a on the negative y-axis and testing y(x') >= -tol.
bool hyp_halfplane_contains(const HPoint& a, const HPoint& b, const HPoint& x,
                            double tol = kDefaultTol);

/// Mobius automorphism z -> e^{i theta} (z - a) / (1 - conj(a) z), with an
/// optional pre-reflection across the x-axis.
struct DiskIsometry {
  std::complex<double> a{0, 0};  // |a| < 1
  double theta{0};
  bool reflect{false};

  HPoint apply(const HPoint& p) const;
  std::complex<double> apply_boundary(const std::complex<double>& z) const;

  static DiskIsometry translate_to_origin(const HPoint& p) { return {p.z(), 0, false}; }
};

/// Regular hyperbolic hexagon centered at the origin with 90-degree
/// interior angles: circumradius R with cosh R = sqrt(3), vertices at
/// Euclidean radius tanh(R/2), corner j at angle 30 + 60 j degrees.
std::pair<double, std::array<HPoint, 6>> regular_hexagon_90();

/// A drawn graph in the disk: every edge of g is a geodesic arc.
struct HypDrawing {
  Graph g;                     // the drawn graph (may include subdivisions)
  std::vector<HPoint> coords;
  int orig_n{0};               // input vertices are ids [0, orig_n)
  // subdivided input edges as (u, w, midpoint id)
  std::vector<std::array<int, 3>> edge_mid;
  // re-inserted cycle-closing arcs (cactus drawings)
  std::vector<std::pair<int, int>> closing_arcs;
};

/// Hexagon-tiling drawing of a tree with all degrees in {1, 3}: each edge
/// is subdivided once, every arc has the same hyperbolic length, and
/// incident arcs meet at 120 degrees.
HypDrawing draw_binary_tree_hyp(const Graph& t);

/// Subdivision of K_{1,4}: the degree-4 vertex at the origin, four chains
/// along rays at 90-degree spacing with geometrically decreasing steps.
HypDrawing draw_k14_subdivision(const Graph& t);

/// True iff the tree has maximum degree <= 3 or is a subdivision of K_{1,4}.
bool hyp_tree_admits_ic(const Graph& t);

/// Planar drawing of a binary cactus whose blocks are edges or cycles:
/// drop one edge per cycle, draw the tree hexagon-style with 120-degree
/// ccw turns along cycle paths, re-insert the closing arcs, and check
/// that no two arcs cross.
HypDrawing draw_binary_cactus_hyp(const BinaryCactus& c);

/// Certify a hyperbolic tree drawing (arcs restricted to `tree_edges` of
/// d.g; pass all edges for plain trees): (1) discrete halfplane check on
/// every directed edge against everything beyond it, (2) sampled normals
/// that must miss every other arc.
bool certify_tree_hyp(const HypDrawing& d, const std::vector<std::pair<int, int>>& tree_edges,
                      double tol = kDefaultTol, int samples = 200);

/// The two component checks of certify_tree_hyp, exposed separately.
bool hyp_discrete_ic_check(const HypDrawing& d,
                           const std::vector<std::pair<int, int>>& tree_edges,
                           double tol = kDefaultTol);
bool hyp_sampled_normal_check(const HypDrawing& d,
                              const std::vector<std::pair<int, int>>& tree_edges,
                              int samples = 200, double tol = kDefaultTol);

/// No two arcs of the drawing cross (shared drawing vertices allowed).
bool hyp_planar(const HypDrawing& d, double tol = kDefaultTol);

}  // namespace icdraw
