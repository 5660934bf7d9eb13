#pragma once

// Recursive increasing-chord construction for downward-triangulated binary
// cactuses. Each block is a triangular fan drawn on a circle around its
// root; subcactuses recurse with a shrunken angle budget and are scaled to
// fit inside per-child diamond regions, which keeps every concatenated
// down-sideways-up path increasing-chord.

#include "icdraw/euclid_certify.hpp"
#include "icdraw/geometry.hpp"
#include "icdraw/graph.hpp"

#include <vector>

namespace icdraw {

struct FanLayout {
  Point2 root;                    // v0
  std::vector<Point2> children;   // v1..vk on a circle of `radius` around v0
  double alpha_deg{0};
  Vec2 alignment;
  double radius{1};
};

/// Place k fan children around `root`: angle(alignment, v0v1) = k*alpha/2,
/// consecutive children separated by alpha, with alpha = eps/k in the base
/// case and eps/(2k) otherwise.
FanLayout draw_fan(int k, double eps_deg, const Point2& root, const Vec2& alignment,
                   double radius, bool base_case);

/// Diamond region of child i: the cone at v_i of angle eps' aligned with
/// v0 v_i, clipped by the right halfplane of child i-1 and the left
/// halfplane of child i+1 (when those neighbors exist).
struct DiamondRegion {
  Cone cone;                      // apex v_i, half angle eps'/2
  std::vector<Halfplane> clips;   // unit normals

  bool contains(const Point2& x, double tol = kDefaultTol) const;
  /// Distance from the apex to the nearest clip boundary (inf if none).
  double clip_distance() const;
};

/// eps' must equal eps/(4k) for the enclosing layout; i is 1-based.
DiamondRegion diamond_region(const FanLayout& layout, int i, double eps_prime_deg);

/// Recursive fan construction with exact rational output. Requires
/// is_downward_triangulated(c) and 0 < eps < 90 degrees. The drawing places
/// the global root at the origin with all downward edges within eps/2 of
/// vertical. Each block is laid out in a local double-precision frame and
/// the frames are composed as exact dyadic similarity transforms, so deep
/// recursions survive the exponential scale decay and certify exactly.
EuclidDrawingQ draw_cactus_ic_q(const BinaryCactus& c, double eps_deg);

/// Float64 view of draw_cactus_ic_q. Adequate for shallow cactuses only:
/// coordinates of deep subcactuses collapse below double precision.
EuclidDrawing draw_cactus_ic(const BinaryCactus& c, double eps_deg);

/// Combinatorial witness path for the construction: downward edges from s
/// to the meet block, a sideways fan traversal, and reversed downward
/// edges to t. Independent of coordinates.
std::vector<int> cactus_witness_path(const BinaryCactus& c, int s, int t);

/// Witnesses for every ordered vertex pair.
WitnessMap cactus_witnesses(const BinaryCactus& c);

}  // namespace icdraw
