#include "rig/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "maxflow.hpp"
#include "rig/errors.hpp"
#include "rig/graph_core.hpp"

namespace rig {

AttributeDegreeStats attribute_degree_stats(const BipartiteGraph& b) {
  AttributeDegreeStats stats;
  for (const auto& nodes : b.attr_nodes) {
    int d = static_cast<int>(nodes.size());
    stats.max_degree = std::max(stats.max_degree, d);
    ++stats.histogram[d];
  }
  return stats;
}

namespace {

// Source-side test for "some subgraph has density > mid / n^2". The network
// assigns s->v capacity |E|*n^2, v->t capacity |E|*n^2 + 2*mid - deg(v)*n^2,
// and n^2 per edge direction; a cut with vertex side S then costs
// n*|E|*n^2 - 2*(|E(S)|*n^2 - mid*|S|), so the max flow drops below the
// trivial cut exactly when such a subgraph exists, and the residual source
// side realizes it.
bool denser_than(const Graph& g, long long mid, std::vector<int>* witness) {
  const long long n = g.n;
  const long long m = static_cast<long long>(g.edge_count);
  const long long grid = n * n;
  const int s = g.n;
  const int t = g.n + 1;
  detail::Dinic flow(g.n + 2);
  for (int v = 0; v < g.n; ++v) {
    flow.add_edge(s, v, m * grid);
    flow.add_edge(v, t, m * grid + 2 * mid - g.degree(v) * grid);
  }
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adj[v])
      if (u > v) {
        flow.add_edge(v, u, grid);
        flow.add_edge(u, v, grid);
      }
  long long full = n * m * grid;
  if (flow.max_flow(s, t) >= full) return false;
  if (witness) {
    std::vector<char> side = flow.min_cut_side(s);
    witness->clear();
    for (int v = 0; v < g.n; ++v)
      if (side[v]) witness->push_back(v);
  }
  return true;
}

}  // namespace

DensestSubgraphResult densest_subgraph(const Graph& g) {
  if (g.n == 0) throw std::invalid_argument("densest subgraph: empty graph");
  if (g.edge_count == 0) return {Rational(0, 1), {0}};
  const auto full = static_cast<__int128>(g.n) * g.n * g.n * static_cast<long long>(g.edge_count);
  if (full > static_cast<__int128>(std::numeric_limits<long long>::max()) / 4)
    throw CapExceeded("densest subgraph: instance too large for exact capacities");
  const long long grid = static_cast<long long>(g.n) * g.n;
  long long lo = 0;  // some subgraph is denser than lo/grid
  long long hi = static_cast<long long>(g.edge_count) * grid;  // none denser than hi/grid
  while (hi - lo > 1) {
    long long mid = lo + (hi - lo) / 2;
    if (denser_than(g, mid, nullptr))
      lo = mid;
    else
      hi = mid;
  }
  // Distinct subgraph densities have denominators <= n, so they differ by at
  // least 1/grid; the witness at lo is therefore exactly optimal.
  std::vector<int> witness;
  denser_than(g, lo, &witness);
  std::vector<char> in_set(g.n, 0);
  for (int v : witness) in_set[v] = 1;
  long long internal = 0;
  for (int v : witness)
    for (int u : g.adj[v])
      if (u > v && in_set[u]) ++internal;
  return {Rational(internal, static_cast<long long>(witness.size())), witness};
}

std::vector<double> degree_tail(const Graph& g, std::span<const int> thresholds) {
  std::vector<double> out;
  out.reserve(thresholds.size());
  for (int d : thresholds) {
    if (d < 0) throw std::invalid_argument("degree tail: negative threshold");
    int count = 0;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) >= d) ++count;
    out.push_back(g.n == 0 ? 0.0 : static_cast<double>(count) / g.n);
  }
  return out;
}

ConcentrationCheck concentration_check(const BipartiteGraph& b, std::span<const int> s, double p,
                                       double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    throw std::invalid_argument("concentration: epsilon must lie in (0, 1)");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("concentration: p must lie in [0, 1]");
  std::vector<char> seen(b.m, 0);
  std::vector<char> in_subset(b.n, 0);
  long long observed = 0;
  for (int v : s) {
    if (v < 0 || v >= b.n) throw std::out_of_range("concentration: node out of range");
    if (in_subset[v]) throw std::invalid_argument("concentration: repeated node");
    in_subset[v] = 1;
    for (int a : b.node_attrs[v])
      if (!seen[a]) {
        seen[a] = 1;
        ++observed;
      }
  }
  ConcentrationCheck check;
  check.subset_size = static_cast<int>(s.size());
  check.observed = observed;
  check.expected = static_cast<double>(s.size()) * b.m * p;
  check.epsilon = epsilon;
  check.within_lower = static_cast<double>(observed) >= (1.0 - epsilon) * check.expected;
  check.within_upper = static_cast<double>(observed) <= (1.0 + epsilon) * check.expected;
  return check;
}

SparsityReport sparsity_report(const Graph& g, const BipartiteGraph* b,
                               std::span<const int> thresholds) {
  SparsityReport report;
  report.degeneracy = core_decomposition(g).degeneracy;
  if (b) {
    report.has_attribute_stats = true;
    report.max_attribute_degree = attribute_degree_stats(*b).max_degree;
    report.clique_lower_bound = report.max_attribute_degree;
  }
  report.grad0 = g.n == 0 ? Rational(0, 1) : densest_subgraph(g).density;
  std::vector<double> fractions = degree_tail(g, thresholds);
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    report.degree_tail.emplace_back(thresholds[i], fractions[i]);
  return report;
}

}  // namespace rig
