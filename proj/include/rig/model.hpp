#pragma once

#include <cstdint>
#include <optional>

#include "rig/graph.hpp"

namespace rig {

struct ScalingTriple {
  double alpha = 0;
  double beta = 0;
  double gamma = 0;
};

// Parameters of the random intersection graph model: n nodes, m attributes,
// each node-attribute pair an edge independently with probability p. The
// scaling form derives m = floor(beta * n^alpha) (minimum 1) and
// p = gamma * n^(-(1+alpha)/2), clamped into [0, 1] with the flag recorded.
struct ModelParams {
  int n = 0;
  int m = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::optional<ScalingTriple> scaling;
  bool p_clamped = false;
};

// Validates and packs raw parameters; throws std::invalid_argument.
ModelParams make_params(int n, int m, double p, std::uint64_t seed);

ModelParams derive_params(double alpha, double beta, double gamma, int n, std::uint64_t seed);

// Seed-deterministic sampler. At p >= 0.1 every pair gets a Bernoulli draw in
// attribute-major order; below that the sampler jumps between present pairs
// with geometric gaps over the same pair ordering. The two paths consume
// randomness differently, so for equal seeds they give different (but each
// individually reproducible) edge sets.
BipartiteGraph sample_bipartite(const ModelParams& params);

// u ~ v iff the two nodes share at least one attribute.
Graph project(const BipartiteGraph& b);

}  // namespace rig
