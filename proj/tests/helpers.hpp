#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "rig/detail/random.hpp"
#include "rig/graph.hpp"
#include "rig/rational.hpp"

// Fixture builders and small brute-force oracles shared by the unit and
// acceptance suites. Everything here is deterministic.
namespace rigtest {

inline rig::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return rig::Graph::from_edges(n, edges);
}

inline rig::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return rig::Graph::from_edges(n, edges);
}

inline rig::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return rig::Graph::from_edges(n, edges);
}

inline rig::Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return rig::Graph::from_edges(leaves + 1, edges);
}

// Two hubs (0 and 1) joined by one arm per entry; an arm of length L
// contributes L - 1 fresh internal vertices, length 1 is the direct edge.
inline rig::Graph theta_graph(const std::vector<int>& arm_lengths) {
  std::vector<std::pair<int, int>> edges;
  int next = 2;
  for (int len : arm_lengths) {
    int prev = 0;
    for (int i = 1; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, 1);
  }
  return rig::Graph::from_edges(next, edges);
}

inline rig::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rig::detail::uniform01(rng) < p) edges.emplace_back(u, v);
  return rig::Graph::from_edges(n, edges);
}

inline rig::Graph random_tree(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v)
    edges.emplace_back(static_cast<int>(rig::detail::uniform_below(rng, v)), v);
  return rig::Graph::from_edges(n, edges);
}

// 200 random graphs on 4..12 vertices across a spread of densities.
inline std::vector<rig::Graph> corpus() {
  std::mt19937_64 rng(12345);
  const double densities[] = {0.15, 0.3, 0.5, 0.7};
  std::vector<rig::Graph> graphs;
  for (int i = 0; i < 200; ++i)
    graphs.push_back(random_graph(4 + i % 9, densities[i % 4], rng));
  return graphs;
}

inline bool proper_coloring(const rig::Graph& g, const std::vector<int>& colors) {
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (colors[v] == colors[u]) return false;
  return true;
}

// Exact max |E(H)|/|V(H)| by subset enumeration; fine up to ~20 vertices.
inline rig::Rational brute_densest(const rig::Graph& g) {
  std::vector<std::uint32_t> mask(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v]) mask[v] |= 1u << u;
  rig::Rational best(0, 1);
  for (std::uint32_t s = 1; s < (1u << g.n); ++s) {
    int twice_edges = 0;
    for (int v = 0; v < g.n; ++v)
      if (s >> v & 1) twice_edges += std::popcount(mask[v] & s);
    rig::Rational density(twice_edges / 2, std::popcount(s));
    if (best < density) best = density;
  }
  return best;
}

// Exact treewidth by the elimination-order subset DP; fine up to ~16
// vertices. dp[S] = best width over orders eliminating exactly S first.
inline int brute_treewidth(const rig::Graph& g) {
  int n = g.n;
  if (n == 0) return 0;
  std::vector<std::uint32_t> mask(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.adj[v]) mask[v] |= 1u << u;

  // vertices outside S (and not v) adjacent to v or reachable through S
  auto through_degree = [&](std::uint32_t s, int v) {
    std::uint32_t cluster = 1u << v, frontier = 1u << v;
    while (frontier) {
      std::uint32_t grow = 0;
      while (frontier) {
        int u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        grow |= mask[u] & s & ~cluster;
      }
      cluster |= grow;
      frontier = grow;
    }
    std::uint32_t outside = 0;
    std::uint32_t inner = cluster;
    while (inner) {
      int u = std::countr_zero(inner);
      inner &= inner - 1;
      outside |= mask[u] & ~s & ~(1u << v);
    }
    return std::popcount(outside);
  };

  std::vector<int> dp(1u << n, 0);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int best = n;
    for (std::uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t without = s & ~(1u << v);
      best = std::min(best, std::max(dp[without], through_degree(without, v)));
    }
    dp[s] = best;
  }
  return dp[(1u << n) - 1];
}

}  // namespace rigtest
