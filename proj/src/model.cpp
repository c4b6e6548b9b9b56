#include "rig/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

#include "rig/detail/random.hpp"

namespace rig {

ModelParams make_params(int n, int m, double p, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("model: n must be at least 1");
  if (m < 1) throw std::invalid_argument("model: m must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("model: p must lie in [0, 1]");
  ModelParams params;
  params.n = n;
  params.m = m;
  params.p = p;
  params.seed = seed;
  return params;
}

ModelParams derive_params(double alpha, double beta, double gamma, int n, std::uint64_t seed) {
  if (!(alpha > 0.0) || !(beta > 0.0) || !(gamma > 0.0))
    throw std::invalid_argument("model: alpha, beta, gamma must be positive");
  if (n < 1) throw std::invalid_argument("model: n must be at least 1");
  double m_real = beta * std::pow(static_cast<double>(n), alpha);
  int m = std::max(1, static_cast<int>(std::floor(m_real)));
  double p = gamma * std::pow(static_cast<double>(n), -(1.0 + alpha) / 2.0);
  bool clamped = p > 1.0;
  ModelParams params = make_params(n, m, clamped ? 1.0 : p, seed);
  params.scaling = ScalingTriple{alpha, beta, gamma};
  params.p_clamped = clamped;
  return params;
}

// Both samplers walk the attribute-major pair ordering t = a * n + v, so
// adjacency lists come out sorted without a final sort.
static void sample_dense(BipartiteGraph& b, const ModelParams& params, std::mt19937_64& rng) {
  for (int a = 0; a < params.m; ++a)
    for (int v = 0; v < params.n; ++v)
      if (detail::uniform01(rng) < params.p) b.add_incidence(a, v);
}

static void sample_sparse(BipartiteGraph& b, const ModelParams& params, std::mt19937_64& rng) {
  const double log_q = std::log1p(-params.p);  // p < 0.1, so well away from -inf
  const std::uint64_t total = static_cast<std::uint64_t>(params.n) * params.m;
  // failures before the next success; clamped so the uint64 cast stays safe
  auto skip = [&]() -> std::uint64_t {
    double gap = std::floor(std::log1p(-detail::uniform01(rng)) / log_q);
    if (gap >= static_cast<double>(total)) return total;
    return static_cast<std::uint64_t>(gap);
  };
  std::uint64_t t = skip();
  while (t < total) {
    b.add_incidence(static_cast<int>(t / params.n), static_cast<int>(t % params.n));
    std::uint64_t gap = skip();
    if (gap >= total - t) break;
    t += gap + 1;
  }
}

BipartiteGraph sample_bipartite(const ModelParams& params) {
  make_params(params.n, params.m, params.p, params.seed);  // revalidate
  BipartiteGraph b(params.n, params.m);
  if (params.p > 0.0) {
    std::mt19937_64 rng(params.seed);
    if (params.p >= 0.1)
      sample_dense(b, params, rng);
    else
      sample_sparse(b, params, rng);
  }
  b.finalize();
  return b;
}

Graph project(const BipartiteGraph& b) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& nodes : b.attr_nodes)
    for (std::size_t i = 0; i < nodes.size(); ++i)
      for (std::size_t j = i + 1; j < nodes.size(); ++j) edges.emplace_back(nodes[i], nodes[j]);
  return Graph::from_edges(b.n, edges);
}

}  // namespace rig
