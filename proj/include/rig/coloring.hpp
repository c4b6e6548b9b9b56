#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rig/graph.hpp"

namespace rig {

struct VerificationRecord {
  std::vector<int> class_subset;  // color ids, |class_subset| = claimed_bound
  int induced_size = 0;
  int claimed_bound = 0;  // i: the treewidth the subset must stay under
  enum class Measure { exact, at_most, greater_than, skipped } measure = Measure::skipped;
  int treewidth = 0;  // meaningful for exact / at_most / greater_than
  bool pass = true;
  std::string measured_str() const;  // "3", "<= 2 (certified)", "> 2", "skipped (size cap)"
};

struct ColoringResult {
  int k = 0;
  std::vector<int> colors;  // per vertex, 0-based
  int num_colors = 0;
  int augmentation_rounds = 0;
  std::vector<VerificationRecord> verification;
};

// k-1 augmentation rounds: orient the current graph by its degeneracy order
// (edges point from earlier-peeled to later-peeled), add every two-step pair
// u->v->w and every pair of out-neighbors of a common vertex as new
// undirected edges, then greedy-color the final augmented graph in reverse
// peel order. Any i < k color classes then induce a subgraph of treewidth at
// most i; k = 1 is plain greedy degeneracy coloring. Throws on k < 1.
ColoringResult low_tw_coloring(const Graph& g, int k);

// Samples `samples` class subsets per size i = 1..k-1 (or enumerates them
// all when there are no more than `samples`) and certifies the induced
// treewidth: forest check, then series-parallel reduction, then exact
// treewidth. Exact computation is skipped above size_cap: a definite bound
// violation is still reported, otherwise the record passes as "skipped".
std::vector<VerificationRecord> verify_coloring(const Graph& g, const ColoringResult& result,
                                                int samples = 100, int size_cap = 30,
                                                std::uint64_t seed = 0);

}  // namespace rig
