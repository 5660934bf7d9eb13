#pragma once

// Combinatorial structures: simple graphs, block-cutvertex trees, and
// binary cactuses (blocks classified as single edges, cycles, or
// triangulated fans rooted at the block root).

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icdraw {

struct Graph {
  int n{0};
  std::vector<std::pair<int, int>> edges;       // u < v, unique
  std::vector<std::vector<int>> adj;            // built by add_edge
  // cyclic edge order per vertex, when a combinatorial embedding is known
  std::optional<std::vector<std::vector<int>>> rotation;

  Graph() = default;
  explicit Graph(int n_) : n(n_), adj(n_) {}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  bool connected() const;
  int degree(int v) const { return int(adj[v].size()); }
};

struct BCTree {
  struct Block {
    std::vector<int> vertices;
    std::vector<std::pair<int, int>> edges;
  };

  std::vector<Block> blocks;
  std::vector<bool> is_cutvertex;           // indexed by graph vertex
  std::vector<int> cutvertices;
  std::vector<std::vector<int>> blocks_of;  // per vertex: block ids containing it

  int root_block{-1};
  std::vector<int> root_vertex;   // r(mu) per block
  std::vector<int> parent_block;  // -1 for the root block
  std::vector<int> depth;         // depth_B per block

  int global_root() const { return root_vertex[root_block]; }
};

/// BC-tree of a connected graph. With root_choice = -1 the rooting picks
/// the lowest-index block containing a non-cutvertex, with r of that block
/// the lowest non-cutvertex; otherwise root_choice must name a
/// non-cutvertex, which becomes the global root.
BCTree bc_tree(const Graph& g, int root_choice = -1);

enum class BlockShape { edge, cycle, fan };

struct BinaryCactus {
  Graph g;
  BCTree bc;
  std::vector<BlockShape> shape;  // per block
  // per block: the non-root vertices in fan/cycle order v1..vk
  // (for an edge block this is the single non-root endpoint)
  std::vector<std::vector<int>> order;

  int root() const { return bc.global_root(); }

  /// Blocks rooted at v, i.e. blocks mu != root block with r(mu) == v.
  std::vector<int> blocks_rooted_at(int v) const;
  /// The unique block containing v with v != r(mu); -1 for the global root.
  int block_of(int v) const;
};

/// Validate and classify g as a binary cactus, optionally rooted at a
/// chosen non-cutvertex. Throws std::runtime_error with reason
/// "not-binary" (a cutvertex in >= 3 blocks) or "not-a-cactus" (a block
/// that is neither an edge, a cycle, nor a triangulated fan).
BinaryCactus as_binary_cactus(const Graph& g, int root_choice = -1);

/// True iff every block with >= 3 vertices is a triangular fan whose apex
/// is the block root.
bool is_downward_triangulated(const BinaryCactus& c);

/// First rooting (non-cutvertices in ascending order) under which g is a
/// downward-triangulated binary cactus; throws if no rooting works.
BinaryCactus as_downward_triangulated_cactus(const Graph& g);

/// Vertex set of the subcactus G(v); v must not be the global root.
std::vector<int> subcactus(const BinaryCactus& c, int v);

/// Block ids of the blocks forming G(v) (all blocks at or below v).
std::vector<int> subcactus_blocks(const BinaryCactus& c, int v);

/// Upward directed vertex pairs (r(mu), w) over the blocks of G(v).
/// Some pairs may not be graph edges when blocks are not triangulated.
std::vector<std::pair<int, int>> upward_directed_edges(const BinaryCactus& c, int v);

}  // namespace icdraw
