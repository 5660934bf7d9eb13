#include "icdraw/generators.hpp"

#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace icdraw {

namespace {

struct CactusBuilder {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<int, int>> removed;  // tree-ification edges
  int n = 0;

  int vertex() { return n++; }
  void edge(int u, int v) { edges.emplace_back(u, v); }

  // triangle rooted at r; returns the two child vertices
  std::pair<int, int> triangle(int r) {
    int x = vertex(), y = vertex();
    edge(r, x);
    edge(r, y);
    edge(x, y);
    removed.emplace_back(x, y);
    return {x, y};
  }

  Graph graph() const {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
};

// subtree of triangles below v providing `slots` leaf attachment points
void grow_slots(CactusBuilder& b, int v, int slots, std::vector<int>& leaves) {
  if (slots == 1) {
    int leaf = b.vertex();  // pendant leaf r_i
    b.edge(v, leaf);
    leaves.push_back(leaf);
    return;
  }
  auto [x, y] = b.triangle(v);
  grow_slots(b, x, (slots + 1) / 2, leaves);
  grow_slots(b, y, slots / 2, leaves);
}

// chain of k decorated triangles hanging off `at`: triangle j adds a_j and
// b_j, with a pendant path b_j - p_j - w_j; 4 new vertices per triangle
void grow_chain(CactusBuilder& b, int at, int k) {
  int cur = at;
  for (int j = 0; j < k; ++j) {
    auto [a, bb] = b.triangle(cur);
    int p = b.vertex(), w = b.vertex();
    b.edge(bb, p);
    b.edge(p, w);
    cur = a;
  }
}

CactusBuilder build_strmon(int k) {
  if (k < 1) throw std::invalid_argument("gen_strmon_cactus: k >= 1 required");
  CactusBuilder b;
  int root = b.vertex();
  auto [x, y] = b.triangle(root);
  std::vector<int> leaves;
  grow_slots(b, x, 7, leaves);
  grow_slots(b, y, 4, leaves);
  for (int leaf : leaves) grow_chain(b, leaf, k);
  return b;
}

}  // namespace

BinaryCactus gen_strmon_cactus(int k) {
  return as_binary_cactus(build_strmon(k).graph(), 0);
}

Graph gen_strmon_tree(int k) {
  CactusBuilder b = build_strmon(k);
  std::set<std::pair<int, int>> drop;
  for (auto [u, v] : b.removed) drop.insert({std::min(u, v), std::max(u, v)});
  Graph g(b.n);
  for (auto [u, v] : b.edges)
    if (!drop.count({std::min(u, v), std::max(u, v)})) g.add_edge(u, v);
  return g;
}

std::vector<std::pair<int, int>> strmon_removed_edges(int k) {
  return build_strmon(k).removed;
}

BinaryCactus gen_square_cactus(int n) {
  if (n < 0) throw std::invalid_argument("gen_square_cactus: n >= 0 required");
  // returns the root vertex of a copy built into b
  struct Build {
    CactusBuilder& b;
    int operator()(int level) {
      if (level == 0) {
        int r = b.vertex(), a = b.vertex(), s = b.vertex(), c = b.vertex();
        b.edge(r, a);
        b.edge(a, s);
        b.edge(s, c);
        b.edge(c, r);
        return r;
      }
      int left = (*this)(level - 1);
      int right = (*this)(level - 1);
      int r = b.vertex(), mid = b.vertex();
      b.edge(r, left);
      b.edge(left, mid);
      b.edge(mid, right);
      b.edge(right, r);
      return r;
    }
  };
  CactusBuilder b;
  int root = Build{b}(n);
  return as_binary_cactus(b.graph(), root);
}

BinaryCactus gen_random_dt_cactus(std::uint64_t seed, int depth, int max_fan) {
  if (depth < 1 || max_fan < 1)
    throw std::invalid_argument("gen_random_dt_cactus: depth >= 1 and max_fan >= 1");
  std::mt19937_64 rng(seed);
  CactusBuilder b;
  const int cap = 190;

  // breadth-first growth: (vertex, remaining depth)
  std::vector<std::pair<int, int>> frontier{{b.vertex(), depth}};
  bool first = true;
  while (!frontier.empty()) {
    auto [v, rem] = frontier.front();
    frontier.erase(frontier.begin());
    if (rem == 0 || (b.n >= cap && !first)) continue;
    int k = std::uniform_int_distribution<int>(1, max_fan)(rng);
    // triangulated fan rooted at v: v adjacent to all, children form a path
    std::vector<int> kids;
    for (int i = 0; i < k; ++i) kids.push_back(b.vertex());
    for (int i = 0; i < k; ++i) {
      b.edge(v, kids[i]);
      if (i + 1 < k) b.edge(kids[i], kids[i + 1]);
    }
    for (int w : kids)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.45)
        frontier.emplace_back(w, rem - 1);
    first = false;
  }
  BinaryCactus c = as_binary_cactus(b.graph(), 0);
  if (!is_downward_triangulated(c))
    throw std::logic_error("gen_random_dt_cactus: output not downward-triangulated");
  return c;
}

std::pair<Graph, EliminationOrder> gen_random_planar_3tree(std::uint64_t seed, int n) {
  if (n < 4) throw std::invalid_argument("gen_random_planar_3tree: n >= 4 required");
  std::mt19937_64 rng(seed);
  Graph g(n);
  g.add_edge(0, 1);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  EliminationOrder order;
  order.outer = {0, 1, 2};
  std::vector<std::array<int, 3>> faces{{0, 1, 2}};  // corners in role order
  for (int v = 3; v < n; ++v) {
    size_t fi = std::uniform_int_distribution<size_t>(0, faces.size() - 1)(rng);
    auto [x, y, z] = std::tuple{faces[fi][0], faces[fi][1], faces[fi][2]};
    g.add_edge(v, x);
    g.add_edge(v, y);
    g.add_edge(v, z);
    order.steps.push_back({v, {x, y, z}});
    faces[fi] = {v, y, z};
    faces.push_back({x, v, z});
    faces.push_back({x, y, v});
  }
  return {std::move(g), std::move(order)};
}

}  // namespace icdraw
