#include "rig/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace rig {

BipartiteGraph::BipartiteGraph(int n_nodes, int n_attributes) : n(n_nodes), m(n_attributes) {
  if (n < 0 || m < 0) throw std::invalid_argument("bipartite graph: negative side size");
  attr_nodes.resize(m);
  node_attrs.resize(n);
}

std::size_t BipartiteGraph::num_incidences() const {
  std::size_t total = 0;
  for (const auto& nodes : attr_nodes) total += nodes.size();
  return total;
}

bool BipartiteGraph::has_incidence(int attr, int node) const {
  const auto& nodes = attr_nodes[attr];
  return std::binary_search(nodes.begin(), nodes.end(), node);
}

void BipartiteGraph::add_incidence(int attr, int node) {
  if (attr < 0 || attr >= m || node < 0 || node >= n)
    throw std::out_of_range("bipartite graph: incidence out of range");
  attr_nodes[attr].push_back(node);
  node_attrs[node].push_back(attr);
}

void BipartiteGraph::finalize() {
  for (auto& nodes : attr_nodes) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  }
  node_attrs.assign(n, {});
  for (int a = 0; a < m; ++a)
    for (int v : attr_nodes[a]) node_attrs[v].push_back(a);
}

Graph::Graph(int n_vertices) : n(n_vertices) {
  if (n < 0) throw std::invalid_argument("graph: negative size");
  adj.resize(n);
}

bool Graph::has_edge(int u, int v) const {
  const auto& list = adj[u];
  return std::binary_search(list.begin(), list.end(), v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("graph: edge out of range");
  adj[u].push_back(v);
  adj[v].push_back(u);
}

void Graph::finalize() {
  edge_count = 0;
  for (int v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    list.erase(std::remove(list.begin(), list.end(), v), list.end());
    edge_count += list.size();
  }
  edge_count /= 2;
}

Graph Graph::from_edges(int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n_vertices);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

}  // namespace rig
