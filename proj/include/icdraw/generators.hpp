#pragma once

// Deterministic generators for the studied graph families and seeded
// random instances for fuzzing.

#include "icdraw/graph.hpp"
#include "icdraw/schnyder.hpp"

#include <cstdint>
#include <utility>

namespace icdraw {

/// Central cactus G' (32 vertices: a binary tree of 10 triangles with 11
/// pendant leaves, the root being the only degree-2 vertex) with a chain
/// C_k of k decorated triangles attached at each of the 11 leaves.
/// Vertex count: 32 + 44k.
BinaryCactus gen_strmon_cactus(int k);

/// Spanning tree of gen_strmon_cactus(k): the edge between the two
/// non-root vertices of every triangle is removed. Max degree 3.
Graph gen_strmon_tree(int k);

/// The edges removed by gen_strmon_tree, one per triangle block.
std::vector<std::pair<int, int>> strmon_removed_edges(int k);

/// Doubling family of 4-cycles: G_0 is a single 4-cycle; G_n joins two
/// copies of G_{n-1} through two new vertices adjacent to both roots.
/// |V(G_n)| = 6 * 2^n - 2.
BinaryCactus gen_square_cactus(int n);

/// Random downward-triangulated binary cactus: fans of size [1, max_fan],
/// random tips extended, BC-depth <= depth, at most 200 vertices.
BinaryCactus gen_random_dt_cactus(std::uint64_t seed, int depth, int max_fan);

/// Random planar 3-tree on n vertices grown by repeated face insertion,
/// with its elimination order. Outer triangle is (0, 1, 2).
std::pair<Graph, EliminationOrder> gen_random_planar_3tree(std::uint64_t seed, int n);

}  // namespace icdraw
