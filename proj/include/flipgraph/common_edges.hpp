#pragma once

// Common edges of two triangulations under a vertex bijection, the search for
// the best bijection, and the flip-distance lower bounds derived from it.

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "flipgraph/triangulation.hpp"

namespace flipgraph {

struct VertexBijection {
  // forward[v] is the image of v in the second triangulation.
  std::vector<Vertex> forward;
  std::optional<int> common;
};

/// Number of edges {u,v} of `first` with {forward[u],forward[v]} an edge of
/// `second`. Throws std::invalid_argument on size mismatch or when `forward`
/// is not a bijection.
int common_edges(const Triangulation& first, const Triangulation& second,
                 std::span<const Vertex> forward);

struct MaxCommonOptions {
  // 0 disables the respective budget.
  std::uint64_t node_budget = 0;
  std::chrono::milliseconds time_budget{0};
  int workers = 1;
  int local_search_restarts = 8;
  std::uint64_t seed = 0x5eedf11bULL;
};

struct MaxCommonResult {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  VertexBijection witness;
  std::uint64_t nodes_explored = 0;
};

/// Branch and bound over vertex assignments, warm-started by swap local
/// search. `upper` is always a proved bound on the maximum, also when a
/// budget cuts the search short.
MaxCommonResult max_common_edges(const Triangulation& first, const Triangulation& second,
                                 const MaxCommonOptions& options = {});

/// Best common-edge count reachable by pairwise swaps from `start`.
VertexBijection local_search(const Triangulation& first, const Triangulation& second,
                             std::vector<Vertex> start);

struct FlipLowerBound {
  int value = 0;
  bool exact = false;
};

/// 3n - 6 - mc.upper: flips needed to turn `first` into `second`.
FlipLowerBound lemma1_bound(const Triangulation& first, const Triangulation& second,
                            const MaxCommonResult& mc);

struct TheoremBound {
  long long n = 0;
  // 2 floor(n/3) + 28
  long long common_edge_bound = 0;
  // 3n - 6 - (2 floor(n/3) + 28)
  long long flip_bound = 0;
  // 7n - 102, i.e. 3 * (7n/3 - 34)
  long long relaxed_times_three = 0;
  // ceil(7n/3 - 34)
  long long relaxed_ceil = 0;
  bool holds = false;
};

/// Throws std::invalid_argument for n < 3.
TheoremBound theorem_bound(long long n);

}  // namespace flipgraph
