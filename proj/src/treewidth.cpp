#include "rig/treewidth.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rig/errors.hpp"
#include "rig/graph_core.hpp"

namespace rig {

bool is_forest(const Graph& g) {
  return g.edge_count + components(g).count() == static_cast<std::size_t>(g.n);
}

bool treewidth_at_most_2(const Graph& g) {
  std::vector<std::vector<int>> adj(g.adj);
  std::vector<char> alive(g.n, 1);
  auto drop = [&](int v, int u) { adj[v].erase(std::find(adj[v].begin(), adj[v].end(), u)); };
  std::vector<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (adj[v].size() <= 2) queue.push_back(v);
  int remaining = g.n;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    if (!alive[v] || adj[v].size() > 2) continue;
    alive[v] = 0;
    --remaining;
    if (adj[v].size() == 1) {
      int u = adj[v][0];
      drop(u, v);
      if (adj[u].size() <= 2) queue.push_back(u);
    } else if (adj[v].size() == 2) {
      int a = adj[v][0];
      int b = adj[v][1];  // bypass v; parallel edges never matter for width
      drop(a, v);
      drop(b, v);
      if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
      if (adj[a].size() <= 2) queue.push_back(a);
      if (adj[b].size() <= 2) queue.push_back(b);
    }
    adj[v].clear();
  }
  return remaining == 0;
}

namespace {

constexpr std::size_t kStateLimit = std::size_t{1} << 22;

// Eliminated-set search: tw(G) <= w iff vertices can be eliminated one by
// one so that each, at its turn, sees at most w alive vertices directly or
// through already-eliminated ones.
struct EliminationSearch {
  const Graph& g;
  int width;
  std::unordered_set<std::uint64_t> failed;

  int through_degree(std::uint64_t eliminated, int v) const {
    std::uint64_t seen = std::uint64_t{1} << v;
    std::vector<int> stack{v};
    int count = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : g.adj[x]) {
        std::uint64_t bit = std::uint64_t{1} << u;
        if (seen & bit) continue;
        seen |= bit;
        if (eliminated & bit) {
          stack.push_back(u);  // walk on through eliminated vertices
        } else {
          ++count;
          if (count > width) return count;
        }
      }
    }
    return count;
  }

  bool solve(std::uint64_t eliminated, int left) {
    if (left <= width + 1) return true;
    if (failed.contains(eliminated)) return false;
    if (failed.size() > kStateLimit)
      throw CapExceeded("treewidth: search state table exceeded its limit");
    for (int v = 0; v < g.n; ++v) {
      std::uint64_t bit = std::uint64_t{1} << v;
      if (eliminated & bit) continue;
      if (through_degree(eliminated, v) > width) continue;
      if (solve(eliminated | bit, left - 1)) return true;
    }
    failed.insert(eliminated);
    return false;
  }
};

bool treewidth_at_most(const Graph& g, int w) {
  if (g.n <= w + 1) return true;
  EliminationSearch search{g, w, {}};
  return search.solve(0, g.n);
}

// Biconnected blocks as vertex sets (Hopcroft-Tarjan, iterative).
std::vector<std::vector<int>> biconnected_blocks(const Graph& g) {
  std::vector<std::vector<int>> blocks;
  std::vector<int> num(g.n, -1), low(g.n, 0), parent(g.n, -1), iter(g.n, 0);
  std::vector<std::pair<int, int>> edge_stack;
  int counter = 0;
  for (int root = 0; root < g.n; ++root) {
    if (num[root] >= 0 || g.degree(root) == 0) continue;
    std::vector<int> stack{root};
    num[root] = low[root] = counter++;
    while (!stack.empty()) {
      int v = stack.back();
      if (iter[v] < g.degree(v)) {
        int u = g.adj[v][iter[v]++];
        if (num[u] < 0) {
          edge_stack.push_back({v, u});
          parent[u] = v;
          num[u] = low[u] = counter++;
          stack.push_back(u);
        } else if (u != parent[v] && num[u] < num[v]) {
          edge_stack.push_back({v, u});
          low[v] = std::min(low[v], num[u]);
        }
      } else {
        stack.pop_back();
        int p = parent[v];
        if (p < 0) continue;
        low[p] = std::min(low[p], low[v]);
        if (low[v] >= num[p]) {
          // cut point: pop the block hanging below the edge (p, v)
          std::vector<int> verts;
          std::pair<int, int> top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            verts.push_back(top.first);
            verts.push_back(top.second);
          } while (top != std::make_pair(p, v));
          std::sort(verts.begin(), verts.end());
          verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
          blocks.push_back(std::move(verts));
        }
      }
    }
  }
  return blocks;
}

}  // namespace

int exact_treewidth(const Graph& g, int size_cap) {
  if (g.n > size_cap) throw CapExceeded("treewidth: graph larger than the size cap");
  if (g.n > 64) throw CapExceeded("treewidth: more than 64 vertices");
  if (g.n == 0) return 0;
  if (is_forest(g)) return g.edge_count > 0 ? 1 : 0;
  if (treewidth_at_most_2(g)) return 2;  // not a forest here, so exactly 2
  int best = 2;  // treewidth is the max over biconnected blocks
  for (const auto& verts : biconnected_blocks(g)) {
    if (static_cast<int>(verts.size()) <= best + 1) continue;  // tw <= |verts|-1 <= best
    Graph block = induced_subgraph(g, verts);
    if (treewidth_at_most_2(block)) continue;
    int w = std::max(3, core_decomposition(block).degeneracy);  // both are lower bounds here
    while (!treewidth_at_most(block, w)) ++w;
    best = std::max(best, w);
  }
  return best;
}

}  // namespace rig
