#include "icdraw/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <set>
#include <stack>
#include <stdexcept>

namespace icdraw {

void Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("add_edge: self loop");
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::out_of_range("add_edge: vertex id");
  if (u > v) std::swap(u, v);
  if (has_edge(u, v)) return;
  edges.emplace_back(u, v);
  adj[u].push_back(v);
  adj[v].push_back(u);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  for (int w : adj[u])
    if (w == v) return true;
  return false;
}

bool Graph::connected() const {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++cnt;
        q.push(w);
      }
  }
  return cnt == n;
}

namespace {

// Hopcroft-Tarjan biconnected components; emits blocks as edge sets in a
// deterministic order (sorted adjacency, root vertex 0 upward).
struct BiccState {
  const Graph& g;
  std::vector<int> disc, low;
  std::vector<std::pair<int, int>> estack;
  std::vector<std::vector<std::pair<int, int>>> comps;
  std::vector<bool> cut;
  int timer = 0;

  explicit BiccState(const Graph& g_)
      : g(g_), disc(g_.n, -1), low(g_.n, 0), cut(g_.n, false) {}

  void dfs(int u, int parent) {
    disc[u] = low[u] = timer++;
    int children = 0;
    std::vector<int> nbrs = g.adj[u];
    std::sort(nbrs.begin(), nbrs.end());
    bool skipped_parent = false;
    for (int v : nbrs) {
      if (v == parent && !skipped_parent) {
        skipped_parent = true;  // skip one parent edge, keep parallel paths
        continue;
      }
      if (disc[v] == -1) {
        ++children;
        estack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if ((parent != -1 && low[v] >= disc[u]) || (parent == -1 && children > 1))
          cut[u] = true;
        if (low[v] >= disc[u]) pop_component(u, v);
      } else if (disc[v] < disc[u]) {
        estack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }

  void pop_component(int u, int v) {
    std::vector<std::pair<int, int>> comp;
    while (!estack.empty()) {
      auto e = estack.back();
      estack.pop_back();
      comp.push_back(e);
      if (e.first == u && e.second == v) break;
    }
    comps.push_back(std::move(comp));
  }
};

}  // namespace

BCTree bc_tree(const Graph& g, int root_choice) {
  if (!g.connected()) throw std::runtime_error("bc_tree: disconnected graph");
  if (g.n == 0) throw std::runtime_error("bc_tree: empty graph");
  if (root_choice >= g.n) throw std::out_of_range("bc_tree: root_choice");

  BCTree t;
  t.is_cutvertex.assign(g.n, false);
  t.blocks_of.assign(g.n, {});

  if (g.n == 1) {
    t.blocks.push_back({{0}, {}});
    t.blocks_of[0] = {0};
    t.root_block = 0;
    t.root_vertex = {0};
    t.parent_block = {-1};
    t.depth = {0};
    return t;
  }

  BiccState st(g);
  st.dfs(0, -1);

  for (auto& comp : st.comps) {
    BCTree::Block b;
    std::set<int> vs;
    for (auto& e : comp) {
      vs.insert(e.first);
      vs.insert(e.second);
      int u = std::min(e.first, e.second), v = std::max(e.first, e.second);
      b.edges.emplace_back(u, v);
    }
    std::sort(b.edges.begin(), b.edges.end());
    b.edges.erase(std::unique(b.edges.begin(), b.edges.end()), b.edges.end());
    b.vertices.assign(vs.begin(), vs.end());
    t.blocks.push_back(std::move(b));
  }

  t.is_cutvertex = st.cut;
  for (int v = 0; v < g.n; ++v)
    if (st.cut[v]) t.cutvertices.push_back(v);
  for (size_t bi = 0; bi < t.blocks.size(); ++bi)
    for (int v : t.blocks[bi].vertices) t.blocks_of[v].push_back(int(bi));

  int nb = int(t.blocks.size());
  t.root_block = -1;
  int root = -1;
  if (root_choice >= 0) {
    if (t.is_cutvertex[root_choice])
      throw std::runtime_error("bc_tree: root_choice is a cutvertex");
    root = root_choice;
    t.root_block = t.blocks_of[root][0];
  } else {
    // lowest-index block containing a non-cutvertex; lowest non-cutvertex
    for (int bi = 0; bi < nb && t.root_block == -1; ++bi)
      for (int v : t.blocks[bi].vertices)
        if (!t.is_cutvertex[v]) {
          t.root_block = bi;
          root = v;
          break;
        }
    if (t.root_block == -1) throw std::runtime_error("bc_tree: no root block candidate");
  }

  t.root_vertex.assign(nb, -1);
  t.parent_block.assign(nb, -1);
  t.depth.assign(nb, -1);
  t.root_vertex[t.root_block] = root;
  t.depth[t.root_block] = 0;

  std::queue<int> q;
  q.push(t.root_block);
  while (!q.empty()) {
    int bi = q.front();
    q.pop();
    for (int v : t.blocks[bi].vertices) {
      if (!t.is_cutvertex[v] || v == t.root_vertex[bi]) continue;
      for (int cb : t.blocks_of[v]) {
        if (cb == bi || t.depth[cb] != -1) continue;
        if (t.root_vertex[cb] != -1) continue;
        t.root_vertex[cb] = v;
        t.parent_block[cb] = bi;
        t.depth[cb] = t.depth[bi] + 1;
        q.push(cb);
      }
    }
  }
  for (int bi = 0; bi < nb; ++bi)
    if (t.depth[bi] == -1) throw std::runtime_error("bc_tree: rooting failed");
  return t;
}

namespace {

// Classify one block. Returns false if it is neither edge, cycle, nor fan
// rooted anywhere; `order` gets the non-root vertices in traversal order.
bool classify_block(const Graph& g, const BCTree::Block& b, int root,
                    BlockShape& shape, std::vector<int>& order) {
  int k = int(b.vertices.size());
  order.clear();
  if (k == 1) {  // single-vertex graph
    shape = BlockShape::edge;
    return true;
  }
  if (k == 2) {
    shape = BlockShape::edge;
    order = {b.vertices[0] == root ? b.vertices[1] : b.vertices[0]};
    return true;
  }

  std::set<int> vs(b.vertices.begin(), b.vertices.end());
  auto deg_in = [&](int v) {
    int d = 0;
    for (int w : g.adj[v])
      if (vs.count(w)) ++d;
    return d;
  };

  size_t m = b.edges.size();
  if (k == 3 && m == 3) {
    // triangle: a fan rooted at any vertex (and also a 3-cycle)
    for (int v : b.vertices)
      if (v != root) order.push_back(v);
    std::sort(order.begin(), order.end());
    shape = BlockShape::fan;
    return true;
  }
  if (m == size_t(k)) {
    // candidate cycle: all internal degrees 2
    for (int v : b.vertices)
      if (deg_in(v) != 2) return false;
    // walk from root; deterministic: go to the lower-id neighbor first
    std::vector<int> nb;
    for (int w : g.adj[root])
      if (vs.count(w)) nb.push_back(w);
    std::sort(nb.begin(), nb.end());
    int prev = root, cur = nb[0];
    while (cur != root) {
      order.push_back(cur);
      for (int w : g.adj[cur])
        if (vs.count(w) && w != prev) {
          prev = cur;
          cur = w;
          break;
        }
    }
    if (int(order.size()) != k - 1) return false;
    shape = BlockShape::cycle;
    return true;
  }

  if (m == size_t(2 * k - 3)) {
    // candidate fan with apex root: root adjacent to all, rest forms a path
    if (deg_in(root) != k - 1) return false;
    std::vector<int> ends;
    for (int v : b.vertices) {
      if (v == root) continue;
      int d = deg_in(v) - 1;  // degree among non-root vertices
      if (d == 0 && k > 2) return false;
      if (d == 1) ends.push_back(v);
      if (d > 2) return false;
    }
    if (k == 3) {
      // triangle: both non-root vertices are path endpoints
      if (ends.size() != 2) return false;
    } else if (ends.size() != 2) {
      return false;
    }
    std::sort(ends.begin(), ends.end());
    int prev = root, cur = ends[0];
    order.push_back(cur);
    while (int(order.size()) < k - 1) {
      bool advanced = false;
      for (int w : g.adj[cur]) {
        if (!vs.count(w) || w == root || w == prev) continue;
        prev = cur;
        cur = w;
        order.push_back(cur);
        advanced = true;
        break;
      }
      if (!advanced) return false;
    }
    shape = BlockShape::fan;
    return true;
  }
  return false;
}

}  // namespace

BinaryCactus as_binary_cactus(const Graph& g, int root_choice) {
  BinaryCactus c;
  c.g = g;
  c.bc = bc_tree(g, root_choice);

  for (int v : c.bc.cutvertices)
    if (c.bc.blocks_of[v].size() != 2)
      throw std::runtime_error("not-binary: cutvertex " + std::to_string(v) +
                               " lies in " + std::to_string(c.bc.blocks_of[v].size()) +
                               " blocks");

  int nb = int(c.bc.blocks.size());
  c.shape.resize(nb);
  c.order.resize(nb);
  for (int bi = 0; bi < nb; ++bi) {
    if (!classify_block(g, c.bc.blocks[bi], c.bc.root_vertex[bi], c.shape[bi], c.order[bi]))
      throw std::runtime_error("not-a-cactus: block " + std::to_string(bi) +
                               " is neither an edge, a cycle, nor a rooted fan");
  }
  return c;
}

bool is_downward_triangulated(const BinaryCactus& c) {
  for (size_t bi = 0; bi < c.shape.size(); ++bi) {
    int k = int(c.bc.blocks[bi].vertices.size());
    if (k < 3) continue;
    if (c.shape[bi] != BlockShape::fan) return false;
  }
  return true;
}

BinaryCactus as_downward_triangulated_cactus(const Graph& g) {
  BCTree t = bc_tree(g);
  std::string last_error = "no non-cutvertex candidate";
  for (int v = 0; v < g.n; ++v) {
    if (t.is_cutvertex[v]) continue;
    try {
      BinaryCactus c = as_binary_cactus(g, v);
      if (is_downward_triangulated(c)) return c;
      last_error = "no rooting makes every block a triangular fan";
    } catch (const std::runtime_error& e) {
      last_error = e.what();
    }
  }
  throw std::runtime_error("not-downward-triangulated: " + last_error);
}

std::vector<int> BinaryCactus::blocks_rooted_at(int v) const {
  std::vector<int> out;
  for (int bi : bc.blocks_of[v])
    if (bi != bc.root_block && bc.root_vertex[bi] == v) out.push_back(bi);
  return out;
}

int BinaryCactus::block_of(int v) const {
  for (int bi : bc.blocks_of[v])
    if (bc.root_vertex[bi] != v) return bi;
  return -1;  // v is the global root
}

std::vector<int> subcactus_blocks(const BinaryCactus& c, int v) {
  std::vector<int> out;
  std::stack<int> st;
  for (int bi : c.blocks_rooted_at(v)) st.push(bi);
  while (!st.empty()) {
    int bi = st.top();
    st.pop();
    out.push_back(bi);
    for (int w : c.bc.blocks[bi].vertices) {
      if (w == c.bc.root_vertex[bi]) continue;
      for (int cb : c.blocks_rooted_at(w)) st.push(cb);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> subcactus(const BinaryCactus& c, int v) {
  if (v == c.root()) throw std::runtime_error("subcactus: v is the global root");
  std::set<int> vs{v};
  for (int bi : subcactus_blocks(c, v))
    for (int w : c.bc.blocks[bi].vertices) vs.insert(w);
  return {vs.begin(), vs.end()};
}

std::vector<std::pair<int, int>> upward_directed_edges(const BinaryCactus& c, int v) {
  std::vector<std::pair<int, int>> out;
  for (int bi : subcactus_blocks(c, v)) {
    int r = c.bc.root_vertex[bi];
    for (int w : c.bc.blocks[bi].vertices)
      if (w != r) out.emplace_back(r, w);
  }
  return out;
}

}  // namespace icdraw
