#include "rig/graph_core.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <stdexcept>
#include <utility>

#include "rig/errors.hpp"

namespace rig {

CoreDecomposition core_decomposition(const Graph& g) {
  CoreDecomposition out;
  out.order.reserve(g.n);
  out.core_number.assign(g.n, 0);
  std::vector<int> deg(g.n);
  std::vector<char> removed(g.n, 0);
  // lazy min-heap on (current degree, vertex); stale entries are skipped
  using Entry = std::pair<int, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (int v = 0; v < g.n; ++v) {
    deg[v] = g.degree(v);
    heap.emplace(deg[v], v);
  }
  int current = 0;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (removed[v] || d != deg[v]) continue;
    removed[v] = 1;
    current = std::max(current, d);
    out.core_number[v] = current;
    out.order.push_back(v);
    for (int u : g.adj[v])
      if (!removed[u]) heap.emplace(--deg[u], u);
  }
  out.degeneracy = current;
  return out;
}

ComponentLabeling components(const Graph& g) {
  ComponentLabeling out;
  out.label.assign(g.n, -1);
  std::vector<int> queue;
  for (int start = 0; start < g.n; ++start) {
    if (out.label[start] >= 0) continue;
    int id = out.count();
    int size = 0;
    queue.assign(1, start);
    out.label[start] = id;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      ++size;
      for (int u : g.adj[v]) {
        if (out.label[u] < 0) {
          out.label[u] = id;
          queue.push_back(u);
        }
      }
    }
    out.sizes.push_back(size);
  }
  for (int c = 0; c < out.count(); ++c)
    if (out.giant < 0 || out.sizes[c] > out.sizes[out.giant]) out.giant = c;
  return out;
}

std::vector<int> component_vertices(const ComponentLabeling& labeling, int comp) {
  std::vector<int> verts;
  for (int v = 0; v < static_cast<int>(labeling.label.size()); ++v)
    if (labeling.label[v] == comp) verts.push_back(v);
  return verts;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.n) throw std::out_of_range("bfs: source out of range");
  std::vector<std::uint32_t> dist(g.n, kUnreachable);
  std::vector<int> frontier{source};
  std::vector<int> next;
  dist[source] = 0;
  std::uint32_t d = 0;
  while (!frontier.empty()) {
    ++d;
    next.clear();
    for (int v : frontier)
      for (int u : g.adj[v])
        if (dist[u] == kUnreachable) {
          dist[u] = d;
          next.push_back(u);
        }
    frontier.swap(next);
  }
  return dist;
}

namespace {

struct CliqueSearch {
  const std::vector<std::uint64_t>& later;  // adjacency masks in order positions
  int best = 0;

  void expand(int size, std::uint64_t cand) {
    if (size > best) best = size;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int u = std::countr_zero(cand);  // lowest position: every other candidate lies after it
      expand(size + 1, cand & later[u]);
      cand &= cand - 1;  // branch with u excluded
    }
  }
};

}  // namespace

int brute_force_max_clique(const Graph& g, int size_cap) {
  if (g.n > size_cap) throw CapExceeded("max clique: graph larger than the size cap");
  if (g.n > 64) throw CapExceeded("max clique: more than 64 vertices");
  if (g.n == 0) return 0;
  // order by peel position; candidates narrow to later neighbors
  CoreDecomposition cd = core_decomposition(g);
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[cd.order[i]] = i;
  std::vector<std::uint64_t> later(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (pos[u] > pos[v]) later[pos[v]] |= std::uint64_t{1} << pos[u];
  CliqueSearch search{later};
  for (int i = 0; i < g.n; ++i) search.expand(1, later[i]);
  return search.best;
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> map(g.n, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= g.n) throw std::out_of_range("induced subgraph: vertex out of range");
    if (map[v] >= 0) throw std::invalid_argument("induced subgraph: repeated vertex");
    map[v] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int u : g.adj[vertices[i]])
      if (map[u] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), map[u]);
  return Graph::from_edges(static_cast<int>(vertices.size()), edges);
}

}  // namespace rig
