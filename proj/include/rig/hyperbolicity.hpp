#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rig/graph.hpp"
#include "rig/graph_core.hpp"

namespace rig {

// Half-integral quantity stored as twice its value.
struct HalfInteger {
  int twice = 0;
  double value() const { return twice / 2.0; }
  friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
};

// Exact four-point condition delta: the maximum over vertex quadruples of
// (L1 - L2) / 2, where L1 >= L2 >= L3 are the three pairwise distance-sum
// pairings. `component` picks a component id from components(g); without it
// the graph must be connected (std::invalid_argument otherwise). Throws
// CapExceeded when the chosen vertex set is larger than size_cap. Distance
// pairs are scanned in decreasing order; a quadruple built from pairs with
// distances d1 >= d2 satisfies 2*delta <= d2, which prunes the tail.
HalfInteger four_point_delta(const Graph& g, std::optional<int> component = std::nullopt,
                             int size_cap = 600);

// Plain quadruple enumeration, O(n^4). The oracle the fast path is tested
// against; the much smaller default cap keeps it honest.
HalfInteger four_point_delta_naive(const Graph& g, std::optional<int> component = std::nullopt,
                                   int size_cap = 60);

struct SpecialPath {
  int k = 0;                  // number of edges
  std::vector<int> vertices;  // k+1 entries; first == last when closed
  bool closed = false;        // the second endpoint path has length zero
};

// Maximal paths whose internal vertices have degree exactly 2, kept when the
// endpoints remain connected after deleting the internals (that residual
// connection is the vertex-disjoint second path). Cycles hanging off a
// single anchor and pure cycle components count with k = cycle length.
// Chains with no internal vertex are omitted; they certify nothing.
std::vector<SpecialPath> find_k_special_paths(const Graph& g);

// floor(k / 4); the hyperbolicity lower bound a k-special path certifies.
int certificate_from_special_path(int k);

struct HyperbolicityReport {
  HalfInteger four_point_delta;
  int component_size = 0;  // size of the vertex set delta was measured on
  std::optional<int> best_special_k;
  std::optional<int> certificate;
  std::optional<std::vector<int>> witness_path;
};

// Report for the giant component. When the giant exceeds size_cap, delta is
// measured on a deterministic BFS ball of size_cap vertices grown from the
// highest-degree vertex (ties to the lowest index). Special paths are
// searched in all of g.
HyperbolicityReport hyperbolicity_report(const Graph& g, int size_cap = 600);

struct ExposedGraph {
  Graph graph;                     // projection restricted to the kept sides
  std::vector<int> original_node;  // result vertex -> node id in b
  ComponentLabeling labeling;
};

// Projection of b restricted to nodes outside removed_nodes and attributes
// outside removed_attrs, with its components labeled.
ExposedGraph exposed_giant(const BipartiteGraph& b, std::span<const int> removed_nodes,
                           std::span<const int> removed_attrs);

struct BipartitePathQuery {
  std::vector<int> removed_nodes;  // X: node indices hidden from the exposed graph
  std::vector<int> removed_attrs;  // Y: attribute indices hidden from it
  int component = -1;              // component id in the exposed graph
  std::vector<int> path;           // v1..v_{2k-1}; attributes at even offsets
};

struct SpecialBipartiteCheck {
  bool ok = false;
  std::string failed_condition;  // "", "i", "ii", "iii", "component-adjacency"
};

// Decides whether q.path is a k-special bipartite path on (X, Y, C):
//   (i)   the endpoint attributes meet X exactly in their path neighbor,
//   (ii)  every interior attribute's whole neighborhood is its two path
//         neighbors,
//   (iii) the attributes each path node shares with any other node are
//         exactly its two path neighbors,
// then both endpoint attributes must touch component C of the exposed graph.
// Conditions are checked in that order and the first failure is named.
// Structurally malformed queries throw InvalidQuery.
SpecialBipartiteCheck check_k_special_bipartite(const BipartiteGraph& b,
                                                const BipartitePathQuery& q);

}  // namespace rig
