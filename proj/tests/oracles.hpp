#pragma once

// Slow, independent reference implementations used only by the tests. None of
// them touch canonical codes, the enumeration engine or the branch and bound.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "flipgraph/triangulation.hpp"

namespace oracle {

using flipgraph::Edge;
using flipgraph::Face;
using flipgraph::Triangulation;
using flipgraph::Vertex;

inline Triangulation k4() {
  const std::vector<Face> faces{{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  return Triangulation::from_faces(4, faces);
}

inline std::vector<std::vector<char>> adjacency_matrix(const Triangulation& t) {
  const int n = t.vertex_count();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const Edge e : t.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  return adj;
}

// True when the cyclic sequence `mapped` equals `target` up to rotation.
inline bool cyclically_equal(const std::vector<Vertex>& mapped, std::span<const Vertex> target) {
  if (mapped.size() != target.size()) return false;
  const auto it = std::find(mapped.begin(), mapped.end(), target[0]);
  if (it == mapped.end()) return false;
  const std::size_t k = static_cast<std::size_t>(it - mapped.begin());
  for (std::size_t i = 0; i < mapped.size(); ++i) {
    if (mapped[(k + i) % mapped.size()] != target[i]) return false;
  }
  return true;
}

inline bool rotations_agree(const Triangulation& a, const Triangulation& b,
                            const std::vector<Vertex>& f, bool reversed) {
  for (Vertex v = 0; v < a.vertex_count(); ++v) {
    std::vector<Vertex> mapped;
    for (const Vertex w : a.rotation(v)) mapped.push_back(f[w]);
    if (reversed) std::reverse(mapped.begin(), mapped.end());
    if (!cyclically_equal(mapped, b.rotation(f[v]))) return false;
  }
  return true;
}

namespace detail {

struct IsoSearch {
  const Triangulation& a;
  const Triangulation& b;
  bool mirror;
  std::vector<std::vector<char>> adj_a;
  std::vector<std::vector<char>> adj_b;
  std::vector<Vertex> f;
  std::vector<char> used;

  bool extend(Vertex v) {
    const int n = a.vertex_count();
    if (v == n) return rotations_agree(a, b, f, false) || (mirror && rotations_agree(a, b, f, true));
    for (Vertex x = 0; x < n; ++x) {
      if (used[x] || a.degree(v) != b.degree(x)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = adj_a[u][v] == adj_b[f[u]][x];
      if (!ok) continue;
      f[v] = x;
      used[x] = 1;
      if (extend(v + 1)) return true;
      used[x] = 0;
    }
    return false;
  }
};

}  // namespace detail

/// Tries every vertex bijection (pruned only by degree and adjacency
/// consistency) and accepts one that carries rotations onto rotations,
/// reversed ones too when `mirror` is set.
inline bool isomorphic(const Triangulation& a, const Triangulation& b, bool mirror) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  const int n = a.vertex_count();
  detail::IsoSearch s{a, b, mirror, adjacency_matrix(a), adjacency_matrix(b),
                      std::vector<Vertex>(n, -1), std::vector<char>(n, 0)};
  return s.extend(0);
}

/// Splits v: a new vertex w takes over the neighbours rot[i..j] (cyclic,
/// inclusive) and is joined to v.
inline Triangulation vertex_split(const Triangulation& t, Vertex v, int i, int j) {
  const int n = t.vertex_count();
  const Vertex w = n;
  const auto rot = t.rotation(v);
  const int k = static_cast<int>(rot.size());
  std::vector<Face> faces;
  for (const Face& f : t.faces()) {
    if (f[0] != v && f[1] != v && f[2] != v) faces.push_back(f);
  }
  for (int m = 0; m < k; ++m) {
    const bool w_side = ((m - i + k) % k) < ((j - i + k) % k);
    faces.push_back({w_side ? w : v, rot[m], rot[(m + 1) % k]});
  }
  faces.push_back({v, w, rot[i]});
  faces.push_back({v, rot[j], w});
  return Triangulation::from_faces(n + 1, faces);
}

inline std::vector<int> sorted_degrees(const Triangulation& t) {
  std::vector<int> d;
  for (Vertex v = 0; v < t.vertex_count(); ++v) d.push_back(t.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

/// Isomorphism classes of triangulations on n vertices, built by all vertex
/// splits of all classes on n-1 vertices and deduplicated by brute force.
inline std::vector<Triangulation> all_triangulations(int n, bool mirror = true) {
  std::vector<Triangulation> level{k4()};
  for (int m = 5; m <= n; ++m) {
    std::vector<Triangulation> next;
    std::map<std::vector<int>, std::vector<std::size_t>> by_degrees;
    for (const auto& t : level) {
      for (Vertex v = 0; v < t.vertex_count(); ++v) {
        const int k = t.degree(v);
        for (int i = 0; i < k; ++i) {
          for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            Triangulation c = vertex_split(t, v, i, j);
            auto& bucket = by_degrees[sorted_degrees(c)];
            const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t idx) {
              return isomorphic(next[idx], c, mirror);
            });
            if (!seen) {
              bucket.push_back(next.size());
              next.push_back(std::move(c));
            }
          }
        }
      }
    }
    level = std::move(next);
  }
  return level;
}

/// Exact flip distance by breadth-first search over triangulations,
/// identifying states by brute-force isomorphism. Small n only.
inline int flip_distance(const Triangulation& a, const Triangulation& b, bool mirror = true) {
  std::vector<Triangulation> seen{a};
  std::vector<Triangulation> frontier{a};
  for (int d = 0; !frontier.empty(); ++d) {
    for (const auto& t : frontier) {
      if (isomorphic(t, b, mirror)) return d;
    }
    std::vector<Triangulation> next;
    for (const auto& t : frontier) {
      for (const Edge e : t.edges()) {
        auto r = flipgraph::flip(t, e);
        if (!r) continue;
        const bool known = std::any_of(seen.begin(), seen.end(), [&](const Triangulation& s) {
          return isomorphic(s, *r.triangulation, mirror);
        });
        if (!known) {
          seen.push_back(*r.triangulation);
          next.push_back(*r.triangulation);
        }
      }
    }
    frontier = std::move(next);
  }
  return -1;
}

inline int common_edges(const std::vector<std::vector<char>>& adj_b, const Triangulation& a,
                        const std::vector<Vertex>& f) {
  int c = 0;
  for (const Edge e : a.edges()) c += adj_b[f[e.u]][f[e.v]];
  return c;
}

/// Maximum common edges over all n! bijections.
inline int max_common_edges(const Triangulation& a, const Triangulation& b) {
  const auto adj_b = adjacency_matrix(b);
  std::vector<Vertex> f(a.vertex_count());
  std::iota(f.begin(), f.end(), 0);
  int best = 0;
  do {
    best = std::max(best, common_edges(adj_b, a, f));
  } while (std::next_permutation(f.begin(), f.end()));
  return best;
}

/// Minimum number of paths covering all vertices, over all vertex orders.
inline int min_path_cover(const Triangulation& t) {
  const auto adj = adjacency_matrix(t);
  std::vector<Vertex> order(t.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  int best = t.vertex_count();
  do {
    int pieces = 1;
    for (std::size_t i = 1; i < order.size(); ++i) pieces += !adj[order[i - 1]][order[i]];
    best = std::min(best, pieces);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

/// Maximum matching size by recursion over vertex subsets (n <= 20).
inline int max_matching_size(const Triangulation& t) {
  const int n = t.vertex_count();
  std::vector<std::uint32_t> nbr(n, 0);
  for (const Edge e : t.edges()) {
    nbr[e.u] |= 1u << e.v;
    nbr[e.v] |= 1u << e.u;
  }
  std::vector<int> memo(std::size_t{1} << n, -1);
  auto solve = [&](auto&& self, std::uint32_t mask) -> int {
    if (mask == 0) return 0;
    int& m = memo[mask];
    if (m >= 0) return m;
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    int best = self(self, rest);
    for (std::uint32_t cand = nbr[v] & rest; cand; cand &= cand - 1) {
      const int w = __builtin_ctz(cand);
      best = std::max(best, 1 + self(self, rest & ~(1u << w)));
    }
    return m = best;
  };
  return solve(solve, (n == 32 ? ~0u : (1u << n) - 1));
}

/// `flips` random valid flips starting from `t` (fewer when t has none, as K4).
inline Triangulation random_walk(Triangulation t, int flips, std::mt19937_64& rng) {
  for (int done = 0; done < flips;) {
    const auto edges = t.edges();
    std::vector<Edge> valid;
    for (const Edge e : edges) {
      if (flipgraph::check_flip(t, e) == flipgraph::FlipError::none) valid.push_back(e);
    }
    if (valid.empty()) break;
    const Edge e = valid[std::uniform_int_distribution<std::size_t>(0, valid.size() - 1)(rng)];
    t = std::move(*flipgraph::flip(t, e).triangulation);
    ++done;
  }
  return t;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace oracle
