#include "rig/coloring.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <utility>

#include "rig/detail/random.hpp"
#include "rig/errors.hpp"
#include "rig/graph_core.hpp"
#include "rig/treewidth.hpp"

namespace rig {

std::string VerificationRecord::measured_str() const {
  switch (measure) {
    case Measure::exact:
      return std::to_string(treewidth);
    case Measure::at_most:
      return "<= " + std::to_string(treewidth) + " (certified)";
    case Measure::greater_than:
      return "> " + std::to_string(treewidth);
    case Measure::skipped:
      return "skipped (size cap)";
  }
  return "";
}

ColoringResult low_tw_coloring(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("coloring parameter must be at least 1");

  Graph h = g;
  for (int round = 1; round < k; ++round) {
    CoreDecomposition dec = core_decomposition(h);
    std::vector<int> pos(h.n);
    for (int i = 0; i < h.n; ++i) pos[dec.order[i]] = i;

    std::vector<std::vector<int>> out(h.n);
    for (int v = 0; v < h.n; ++v)
      for (int u : h.adj[v])
        if (pos[v] < pos[u]) out[v].push_back(u);

    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < h.n; ++v)
      for (int u : h.adj[v])
        if (v < u) edges.emplace_back(v, u);
    for (int v = 0; v < h.n; ++v) {
      for (std::size_t i = 0; i < out[v].size(); ++i) {
        for (int w : out[out[v][i]]) edges.emplace_back(v, w);  // transitive v->u->w
        for (std::size_t j = i + 1; j < out[v].size(); ++j)
          edges.emplace_back(out[v][i], out[v][j]);  // fraternal
      }
    }
    h = Graph::from_edges(h.n, edges);
  }

  CoreDecomposition dec = core_decomposition(h);
  ColoringResult result;
  result.k = k;
  result.augmentation_rounds = k - 1;
  result.colors.assign(g.n, -1);
  std::vector<char> taken;
  for (int i = h.n - 1; i >= 0; --i) {
    int v = dec.order[i];
    taken.assign(taken.size(), 0);
    for (int u : h.adj[v]) {
      int c = result.colors[u];
      if (c < 0) continue;
      if (c >= static_cast<int>(taken.size())) taken.resize(c + 1, 0);
      taken[c] = 1;
    }
    int c = 0;
    while (c < static_cast<int>(taken.size()) && taken[c]) ++c;
    result.colors[v] = c;
    result.num_colors = std::max(result.num_colors, c + 1);
  }
  return result;
}

namespace {

VerificationRecord check_subset(const Graph& g, const std::vector<int>& colors,
                                std::vector<int> subset, int size_cap) {
  std::vector<int> verts;
  std::vector<char> wanted(*std::max_element(subset.begin(), subset.end()) + 1, 0);
  for (int c : subset) wanted[c] = 1;
  for (int v = 0; v < g.n; ++v)
    if (colors[v] < static_cast<int>(wanted.size()) && wanted[colors[v]]) verts.push_back(v);

  VerificationRecord rec;
  rec.claimed_bound = static_cast<int>(subset.size());
  rec.class_subset = std::move(subset);
  rec.induced_size = static_cast<int>(verts.size());
  Graph sub = induced_subgraph(g, verts);

  using M = VerificationRecord::Measure;
  if (is_forest(sub)) {
    rec.measure = M::exact;
    rec.treewidth = sub.edge_count > 0 ? 1 : 0;
    rec.pass = true;
    return rec;
  }
  bool sp = treewidth_at_most_2(sub);
  if (sp && rec.claimed_bound >= 2) {
    rec.measure = M::at_most;
    rec.treewidth = 2;
    rec.pass = true;
    return rec;
  }
  if (sp) {  // claimed 1, actual exactly 2
    rec.measure = M::exact;
    rec.treewidth = 2;
    rec.pass = false;
    return rec;
  }
  if (sub.n <= size_cap) {
    try {
      rec.treewidth = exact_treewidth(sub, size_cap);
      rec.measure = M::exact;
      rec.pass = rec.treewidth <= rec.claimed_bound;
      return rec;
    } catch (const CapExceeded&) {
      // state space too large; fall through to the bound logic
    }
  }
  if (rec.claimed_bound <= 2) {  // treewidth is at least 3 here
    rec.measure = M::greater_than;
    rec.treewidth = 2;
    rec.pass = false;
    return rec;
  }
  int lb = core_decomposition(sub).degeneracy;  // degeneracy never exceeds treewidth
  if (lb > rec.claimed_bound) {
    rec.measure = M::greater_than;
    rec.treewidth = rec.claimed_bound;
    rec.pass = false;
    return rec;
  }
  rec.measure = M::skipped;
  rec.pass = true;
  return rec;
}

}  // namespace

std::vector<VerificationRecord> verify_coloring(const Graph& g, const ColoringResult& result,
                                                int samples, int size_cap, std::uint64_t seed) {
  if (static_cast<int>(result.colors.size()) != g.n)
    throw std::invalid_argument("coloring does not match the graph");
  for (int c : result.colors)
    if (c < 0 || c >= result.num_colors)
      throw std::invalid_argument("coloring does not match the graph");
  if (samples < 1) throw std::invalid_argument("sample count must be at least 1");

  std::vector<VerificationRecord> records;
  std::mt19937_64 rng(seed);
  for (int i = 1; i < result.k && i <= result.num_colors; ++i) {
    // enumerate when there are at most `samples` subsets of size i
    long long total = 1;
    for (int j = 0; j < i && total <= samples; ++j)
      total = total * (result.num_colors - j) / (j + 1);
    if (total <= samples) {
      std::vector<int> subset(i);
      for (int j = 0; j < i; ++j) subset[j] = j;
      for (;;) {
        records.push_back(check_subset(g, result.colors, subset, size_cap));
        int j = i - 1;
        while (j >= 0 && subset[j] == result.num_colors - i + j) --j;
        if (j < 0) break;
        ++subset[j];
        for (int l = j + 1; l < i; ++l) subset[l] = subset[l - 1] + 1;
      }
    } else {
      for (int s = 0; s < samples; ++s)
        records.push_back(
            check_subset(g, result.colors, detail::sample_distinct(rng, result.num_colors, i),
                         size_cap));
    }
  }
  return records;
}

}  // namespace rig
