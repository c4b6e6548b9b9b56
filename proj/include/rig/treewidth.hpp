#pragma once

#include "rig/graph.hpp"

namespace rig {

bool is_forest(const Graph& g);

// Treewidth <= 2 recognition by exhaustive reduction: repeatedly delete
// vertices of degree <= 1 and bypass degree-2 vertices, merging parallel
// edges. The graph reduces to nothing iff its treewidth is at most 2.
bool treewidth_at_most_2(const Graph& g);

// Exact treewidth by elimination-order search, run independently on every
// biconnected block after cheap forest / series-parallel shortcuts. Throws
// CapExceeded when the graph has more than size_cap vertices (and, as a
// safety valve, when the search state table explodes).
int exact_treewidth(const Graph& g, int size_cap = 30);

}  // namespace rig
