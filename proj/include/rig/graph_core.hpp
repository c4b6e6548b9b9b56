#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "rig/graph.hpp"

namespace rig {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

// Min-degree peeling order; ties go to the lowest vertex index so that
// downstream orderings (orientation, coloring) are reproducible.
struct CoreDecomposition {
  std::vector<int> order;        // vertex removed earliest first
  std::vector<int> core_number;  // per vertex
  int degeneracy = 0;            // max core number
};

CoreDecomposition core_decomposition(const Graph& g);

struct ComponentLabeling {
  std::vector<int> label;  // per-vertex component id, in discovery order
  std::vector<int> sizes;  // per component
  int giant = -1;          // largest component, ties toward the smaller id
  int count() const { return static_cast<int>(sizes.size()); }
};

ComponentLabeling components(const Graph& g);

std::vector<int> component_vertices(const ComponentLabeling& labeling, int comp);

// Unweighted shortest-path distances; kUnreachable marks other components.
// Throws std::out_of_range when source is not a vertex.
std::vector<std::uint32_t> bfs_distances(const Graph& g, int source);

// Exact clique number by branch and bound over a degeneracy ordering.
// Throws CapExceeded above the cap; intended as a small-instance oracle.
int brute_force_max_clique(const Graph& g, int size_cap = 40);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

}  // namespace rig
