#pragma once

// Schnyder labelings of planar 3-trees, alpha-Schnyder drawings via
// feasible-region placement, classical face-count coordinates, and
// increasing-chord witness paths built from the three color trees.

#include "icdraw/euclid_certify.hpp"
#include "icdraw/geometry.hpp"
#include "icdraw/graph.hpp"

#include <array>
#include <vector>

namespace icdraw {

enum class SColor { red = 0, green = 1, blue = 2 };

struct EliminationOrder {
  std::array<int, 3> outer{};  // (r, g, b)
  struct Insertion {
    int v;
    // face corners by role: v's red, green, blue targets
    std::array<int, 3> face;
  };
  std::vector<Insertion> steps;
};

struct SchnyderLabeling {
  int r{-1}, g{-1}, b{-1};
  // parent[v][c]: head of v's outgoing edge of color c; -1 for outer vertices
  std::vector<std::array<int, 3>> parent;

  bool is_outer(int v) const { return v == r || v == g || v == b; }
  int root(SColor c) const { return c == SColor::red ? r : (c == SColor::green ? g : b); }
};

/// Peel interior degree-3 simplicial vertices down to the outer triangle;
/// the reversed removals, with corner roles replayed forward, form the
/// order. Throws "not-a-3-tree" when the reduction gets stuck.
EliminationOrder recognize_3tree(const Graph& g, const std::array<int, 3>& outer);

/// Replay the order, coloring each inserted vertex's three edges by the
/// corner roles of its face.
SchnyderLabeling schnyder_label_3tree(const Graph& g, const EliminationOrder& order);

/// Structural validity: exactly one outgoing edge per color per interior
/// vertex, all tree edges present in g, every tree reaches its root.
bool check_labeling(const Graph& g, const SchnyderLabeling& L);

/// Clockwise pattern of Schnyder woods, read off the drawing's rotation:
/// out-red, in-blue*, out-green, in-red*, out-blue, in-green* around every
/// interior vertex.
bool check_clockwise_pattern(const Graph& g, const SchnyderLabeling& L,
                             const EuclidDrawing& d);

/// Definition of an alpha-Schnyder drawing: outgoing red directions in
/// [90 - a/2, 90 + a/2], blue in [210 +- a/2], green in [330 +- a/2].
/// Throws when d is not planar for g.
bool check_alpha_schnyder(const EuclidDrawing& d, const Graph& g,
                          const SchnyderLabeling& L, double alpha_deg,
                          double tol = kDefaultTol);

/// Incremental construction: equilateral outer triangle, each inserted
/// vertex placed at the centroid of its feasible region (face triangle
/// clipped by the three reversed color cones).
std::pair<EuclidDrawing, SchnyderLabeling> draw_alpha_schnyder(
    const Graph& g, const EliminationOrder& order, double alpha_deg);

/// Interior-face counts of the three regions of v (red region bounded by
/// the green and blue root paths and edge gb, etc). Outer vertices get the
/// whole interior in their own color. Sums to f - 1 per vertex.
std::array<long long, 3> region_faces(const Graph& g, const EliminationOrder& order,
                                      const SchnyderLabeling& L, int v);

/// Classical Schnyder drawing: barycentric projection of the face counts
/// onto an equilateral triangle (r top, g bottom-right, b bottom-left).
EuclidDrawing schnyder_face_count_drawing(const Graph& g, const EliminationOrder& order,
                                          const SchnyderLabeling& L);

/// Increasing-chord witness for a 30-degree-Schnyder drawing: a directed
/// monochromatic tree path when one exists, otherwise a two-leg path
/// through the first common vertex of an s-walk and a t-walk in two
/// different color trees. Verified against d before being returned.
std::vector<int> schnyder_witness_path(const SchnyderLabeling& L, const EuclidDrawing& d,
                                       int s, int t);

/// Witnesses for every ordered pair.
WitnessMap schnyder_witnesses(const SchnyderLabeling& L, const EuclidDrawing& d);

}  // namespace icdraw
