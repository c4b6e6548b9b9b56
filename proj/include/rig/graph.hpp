#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace rig {

// Bipartite node-attribute graph B. Nodes are indexed 0..n-1, attributes
// 0..m-1, and both adjacency views are kept sorted and duplicate-free once
// finalize() has run.
struct BipartiteGraph {
  int n = 0;  // nodes
  int m = 0;  // attributes
  std::vector<std::vector<int>> attr_nodes;
  std::vector<std::vector<int>> node_attrs;

  BipartiteGraph() = default;
  BipartiteGraph(int n_nodes, int n_attributes);

  std::size_t num_incidences() const;
  bool has_incidence(int attr, int node) const;

  // Appends to both views without reordering; call finalize() after a build
  // loop to restore the invariants.
  void add_incidence(int attr, int node);
  void finalize();
};

// Undirected simple graph with sorted adjacency lists.
struct Graph {
  int n = 0;
  std::size_t edge_count = 0;
  std::vector<std::vector<int>> adj;

  Graph() = default;
  explicit Graph(int n_vertices);

  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool has_edge(int u, int v) const;

  // Appends to both endpoint lists; finalize() sorts, drops duplicates and
  // self-loops, and recounts edges.
  void add_edge(int u, int v);
  void finalize();

  static Graph from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges);
};

}  // namespace rig
