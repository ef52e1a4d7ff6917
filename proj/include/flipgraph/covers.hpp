#pragma once

// Path covers and matchings, and the vertex bijections they induce against
// the double-apex triangulation. Both give lower bounds on the best
// common-edge count.

#include <vector>

#include "flipgraph/common_edges.hpp"
#include "flipgraph/constructions.hpp"
#include "flipgraph/triangulation.hpp"

namespace flipgraph {

struct PathCover {
  std::vector<std::vector<Vertex>> paths;

  int size() const { return static_cast<int>(paths.size()); }
};

/// Disjoint, covering, and every consecutive pair adjacent in t.
bool is_valid_path_cover(const Triangulation& t, const PathCover& cover);

/// Greedy cover: grow each path from both ends towards the unvisited
/// neighbour with the fewest unvisited neighbours, then repeatedly join paths
/// whose endpoints are adjacent.
PathCover path_cover(const Triangulation& t);

/// Largest n accepted by exact_path_cover.
inline constexpr int kExactPathCoverLimit = 16;

/// Minimum path cover by dynamic programming over vertex subsets.
/// Throws std::invalid_argument above kExactPathCoverLimit.
PathCover exact_path_cover(const Triangulation& t);

struct PathCoverMapping {
  VertexBijection gamma;
  int paths = 0;
  // n - p - 2
  int guaranteed = 0;
};

/// Lays the paths of `cover` along the path of `g2`; up to two singleton
/// paths (or path ends, when fewer singletons exist) go to the apexes.
PathCoverMapping path_cover_mapping(const Triangulation& h, const PathCover& cover,
                                    const DoubleApexTriangulation& g2);

using Matching = std::vector<Edge>;

bool is_valid_matching(const Triangulation& t, const Matching& m);

/// Maximum-cardinality matching (Edmonds).
Matching max_matching(const Triangulation& t);

struct MatchingMapping {
  VertexBijection gamma;
  // matched edges paired endpoint to endpoint; c_gamma >= k
  int k = 0;
};

MatchingMapping matching_mapping(const Triangulation& first, const Triangulation& second);

}  // namespace flipgraph
