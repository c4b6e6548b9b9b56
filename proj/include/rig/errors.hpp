#pragma once

#include <stdexcept>

namespace rig {

// Input exceeds a size cap that keeps an exact computation tractable.
// CLI maps this to exit code 2; plain validation failures use
// std::invalid_argument / std::out_of_range and map to exit code 1.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structurally malformed bipartite path query (wrong alternation,
// overlapping index sets, non-edges claimed as path edges).
class InvalidQuery : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace rig
