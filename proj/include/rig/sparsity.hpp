#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rig/graph.hpp"
#include "rig/rational.hpp"

namespace rig {

struct AttributeDegreeStats {
  int max_degree = 0;
  std::map<int, int> histogram;  // degree -> number of attributes
};

AttributeDegreeStats attribute_degree_stats(const BipartiteGraph& b);

struct DensestSubgraphResult {
  Rational density;          // max |E(H)| / |V(H)| over nonempty subgraphs
  std::vector<int> witness;  // sorted vertex set achieving it
};

// Exact maximum subgraph density via max-flow and binary search over the
// grid x / n^2. Two achievable densities have denominators at most n, so
// distinct values differ by at least 1/n^2 and the final cut's vertex side
// realizes the optimum exactly; the result is reduced from the witness.
DensestSubgraphResult densest_subgraph(const Graph& g);

// For each threshold d: |{v : deg(v) >= d}| / |V|.
std::vector<double> degree_tail(const Graph& g, std::span<const int> thresholds);

struct ConcentrationCheck {
  int subset_size = 0;
  long long observed = 0;  // |N_B(S)|, attributes adjacent to S
  double expected = 0.0;   // |S| * m * p
  double epsilon = 0.0;
  bool within_lower = false;  // observed >= (1 - eps) * expected
  bool within_upper = false;  // observed <= (1 + eps) * expected
};

// s lists distinct node indices of b; p is the edge probability the graph
// was sampled with. Throws std::invalid_argument unless 0 < epsilon < 1.
ConcentrationCheck concentration_check(const BipartiteGraph& b, std::span<const int> s, double p,
                                       double epsilon);

struct SparsityReport {
  int degeneracy = 0;
  bool has_attribute_stats = false;  // false when no bipartite graph was given
  int max_attribute_degree = 0;
  int clique_lower_bound = 0;  // = max_attribute_degree (an attribute of degree d projects to K_d)
  Rational grad0;              // maximum subgraph density
  std::vector<std::pair<int, double>> degree_tail;
};

inline constexpr int kDefaultTailThresholds[] = {4, 8, 16, 32};

SparsityReport sparsity_report(const Graph& g, const BipartiteGraph* b = nullptr,
                               std::span<const int> thresholds = kDefaultTailThresholds);

}  // namespace rig
