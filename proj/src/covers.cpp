#include "flipgraph/covers.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>

namespace flipgraph {

bool is_valid_path_cover(const Triangulation& t, const PathCover& cover) {
  std::vector<char> seen(t.vertex_count(), 0);
  int covered = 0;
  for (const auto& path : cover.paths) {
    if (path.empty()) return false;
    for (std::size_t i = 0; i < path.size(); ++i) {
      const Vertex v = path[i];
      if (v < 0 || v >= t.vertex_count() || seen[v]) return false;
      seen[v] = 1;
      ++covered;
      if (i > 0 && !t.has_edge(path[i - 1], v)) return false;
    }
  }
  return covered == t.vertex_count();
}

namespace {

class GreedyCover {
 public:
  explicit GreedyCover(const Triangulation& t) : t_(t), visited_(t.vertex_count(), 0) {}

  PathCover run() {
    PathCover cover;
    for (;;) {
      const Vertex start = pick_start();
      if (start < 0) break;
      cover.paths.push_back(grow(start));
    }
    merge(cover);
    return cover;
  }

 private:
  int unvisited_degree(Vertex v) const {
    int d = 0;
    for (const Vertex w : t_.rotation(v)) d += !visited_[w];
    return d;
  }

  Vertex pick_start() const {
    Vertex best = -1;
    int best_degree = std::numeric_limits<int>::max();
    for (Vertex v = 0; v < t_.vertex_count(); ++v) {
      if (visited_[v]) continue;
      const int d = unvisited_degree(v);
      if (d < best_degree) {
        best = v;
        best_degree = d;
      }
    }
    return best;
  }

  Vertex pick_next(Vertex end) const {
    Vertex best = -1;
    int best_degree = std::numeric_limits<int>::max();
    for (const Vertex w : t_.rotation(end)) {
      if (visited_[w]) continue;
      const int d = unvisited_degree(w);
      if (d < best_degree || (d == best_degree && w < best)) {
        best = w;
        best_degree = d;
      }
    }
    return best;
  }

  bool has_unvisited_neighbor(Vertex v) const { return pick_next(v) >= 0; }

  // Extends the back of the path greedily; when stuck, tries a rotation
  // (reverse a tail segment so that a vertex with free neighbours becomes the
  // end).
  void extend_back(std::deque<Vertex>& path) {
    for (;;) {
      const Vertex next = pick_next(path.back());
      if (next >= 0) {
        visited_[next] = 1;
        path.push_back(next);
        continue;
      }
      bool rotated = false;
      const Vertex end = path.back();
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        if (t_.has_edge(path[i], end) && has_unvisited_neighbor(path[i + 1])) {
          std::reverse(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, path.end());
          rotated = true;
          break;
        }
      }
      if (!rotated) return;
    }
  }

  std::vector<Vertex> grow(Vertex start) {
    std::deque<Vertex> path{start};
    visited_[start] = 1;
    extend_back(path);
    std::reverse(path.begin(), path.end());
    extend_back(path);
    return {path.begin(), path.end()};
  }

  bool try_join(std::vector<Vertex>& a, std::vector<Vertex>& b) {
    if (t_.has_edge(a.back(), b.front())) {
    } else if (t_.has_edge(a.back(), b.back())) {
      std::reverse(b.begin(), b.end());
    } else if (t_.has_edge(a.front(), b.front())) {
      std::reverse(a.begin(), a.end());
    } else if (t_.has_edge(a.front(), b.back())) {
      std::reverse(a.begin(), a.end());
      std::reverse(b.begin(), b.end());
    } else {
      return false;
    }
    a.insert(a.end(), b.begin(), b.end());
    return true;
  }

  // Splices a singleton between two consecutive path vertices adjacent to it.
  bool try_splice(std::vector<Vertex>& path, Vertex s) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      if (t_.has_edge(path[i], s) && t_.has_edge(s, path[i + 1])) {
        path.insert(path.begin() + static_cast<std::ptrdiff_t>(i) + 1, s);
        return true;
      }
    }
    return false;
  }

  void merge(PathCover& cover) {
    bool changed = true;
    while (changed) {
      changed = false;
      auto& paths = cover.paths;
      for (std::size_t i = 0; i < paths.size() && !changed; ++i) {
        for (std::size_t j = i + 1; j < paths.size() && !changed; ++j) {
          if (try_join(paths[i], paths[j]) ||
              (paths[j].size() == 1 && try_splice(paths[i], paths[j].front()))) {
            paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(j));
            changed = true;
          } else if (paths[i].size() == 1 && try_splice(paths[j], paths[i].front())) {
            paths.erase(paths.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
          }
        }
      }
    }
  }

  const Triangulation& t_;
  std::vector<char> visited_;
};

}  // namespace

PathCover path_cover(const Triangulation& t) { return GreedyCover(t).run(); }

PathCover exact_path_cover(const Triangulation& t) {
  const int n = t.vertex_count();
  if (n > kExactPathCoverLimit) {
    throw std::invalid_argument("exact path cover is limited to n <= " +
                                std::to_string(kExactPathCoverLimit));
  }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint32_t> neighbors(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (const Vertex w : t.rotation(v)) neighbors[v] |= 1u << w;
  }
  // ends[S]: vertices v such that some Hamiltonian path of S ends at v.
  std::vector<std::uint32_t> ends(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) {
      ends[s] = s;
      continue;
    }
    for (Vertex v = 0; v < n; ++v) {
      if ((s >> v & 1) && (ends[s & ~(1u << v)] & neighbors[v])) ends[s] |= 1u << v;
    }
  }
  constexpr int unset = std::numeric_limits<int>::max();
  std::vector<int> best(full + 1, unset);
  std::vector<std::uint32_t> choice(full + 1, 0);
  best[0] = 0;
  for (std::uint32_t s = 1; s <= full; ++s) {
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s & ~low;
    // subsets T of s that contain the lowest vertex
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t part = sub | low;
      if (ends[part] && best[s & ~part] != unset && best[s & ~part] + 1 < best[s]) {
        best[s] = best[s & ~part] + 1;
        choice[s] = part;
      }
      if (sub == 0) break;
    }
  }
  PathCover cover;
  for (std::uint32_t s = full; s != 0; s &= ~choice[s]) {
    std::uint32_t part = choice[s];
    std::vector<Vertex> path;
    Vertex end = __builtin_ctz(ends[part]);
    for (;;) {
      path.push_back(end);
      part &= ~(1u << end);
      if (part == 0) break;
      const std::uint32_t prev = ends[part] & neighbors[end];
      end = __builtin_ctz(prev);
    }
    std::reverse(path.begin(), path.end());
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

PathCoverMapping path_cover_mapping(const Triangulation& h, const PathCover& cover,
                                    const DoubleApexTriangulation& g2) {
  const int n = h.vertex_count();
  if (g2.base.vertex_count() != n) {
    throw std::invalid_argument("path_cover_mapping: size mismatch");
  }
  if (!is_valid_path_cover(h, cover)) {
    throw std::invalid_argument("path_cover_mapping: not a valid path cover");
  }
  std::vector<std::vector<Vertex>> paths = cover.paths;
  std::vector<Vertex> apex_owners;
  for (auto& p : paths) {
    if (apex_owners.size() < 2 && p.size() == 1) {
      apex_owners.push_back(p.front());
      p.clear();
    }
  }
  while (apex_owners.size() < 2) {
    auto longest = std::max_element(paths.begin(), paths.end(),
                                    [](const auto& a, const auto& b) { return a.size() < b.size(); });
    apex_owners.push_back(longest->back());
    longest->pop_back();
  }
  std::vector<Vertex> forward(n, -1);
  forward[apex_owners[0]] = g2.apex_a;
  forward[apex_owners[1]] = g2.apex_b;
  std::size_t slot = 0;
  for (const auto& p : paths) {
    for (const Vertex v : p) forward[v] = g2.path[slot++];
  }
  PathCoverMapping out;
  out.paths = cover.size();
  out.guaranteed = n - out.paths - 2;
  const int c = common_edges(h, g2.base, forward);
  out.gamma = VertexBijection{std::move(forward), c};
  return out;
}

bool is_valid_matching(const Triangulation& t, const Matching& m) {
  std::vector<char> used(t.vertex_count(), 0);
  for (const Edge e : m) {
    if (!t.has_edge(e.u, e.v) || used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

Matching max_matching(const Triangulation& t) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = t.vertex_count();
  Graph g(n);
  for (const Edge e : t.edges()) boost::add_edge(e.u, e.v, g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(n);
  boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
  Matching m;
  const auto null_vertex = boost::graph_traits<Graph>::null_vertex();
  for (Vertex v = 0; v < n; ++v) {
    if (mate[v] != null_vertex && static_cast<Vertex>(mate[v]) > v) {
      m.push_back({v, static_cast<Vertex>(mate[v])});
    }
  }
  return m;
}

MatchingMapping matching_mapping(const Triangulation& first, const Triangulation& second) {
  const int n = first.vertex_count();
  if (second.vertex_count() != n) throw std::invalid_argument("matching_mapping: size mismatch");
  const Matching m1 = max_matching(first);
  const Matching m2 = max_matching(second);
  MatchingMapping out;
  out.k = static_cast<int>(std::min(m1.size(), m2.size()));
  std::vector<Vertex> forward(n, -1);
  std::vector<char> taken(n, 0);
  for (int i = 0; i < out.k; ++i) {
    forward[m1[i].u] = m2[i].u;
    forward[m1[i].v] = m2[i].v;
    taken[m2[i].u] = taken[m2[i].v] = 1;
  }
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (forward[v] >= 0) continue;
    while (taken[next]) ++next;
    forward[v] = next;
    taken[next] = 1;
  }
  const int c = common_edges(first, second, forward);
  out.gamma = VertexBijection{std::move(forward), c};
  return out;
}

}  // namespace flipgraph
