#include "flipgraph/flip_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "flipgraph/constructions.hpp"
#include "parallel.hpp"

namespace flipgraph {

ResourceLimitError::ResourceLimitError(std::size_t nodes_found, std::size_t frontier)
    : Error("node limit reached: " + std::to_string(nodes_found) + " nodes found, " +
            std::to_string(frontier) + " still unexpanded"),
      nodes_found_(nodes_found),
      frontier_(frontier) {}

std::size_t FlipGraphCatalog::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency) twice += row.size();
  return twice / 2;
}

std::optional<NodeId> FlipGraphCatalog::find(const CanonicalCode& code) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), code);
  if (it == nodes.end() || *it != code) return std::nullopt;
  return static_cast<NodeId>(it - nodes.begin());
}

NodeId FlipGraphCatalog::node_of(const Triangulation& t) const {
  if (t.vertex_count() != n) {
    throw NodeNotFoundError("triangulation has " + std::to_string(t.vertex_count()) +
                            " vertices, catalog is for n=" + std::to_string(n));
  }
  const auto id = find(canonical_code(t, mirror_mode));
  if (!id) throw NodeNotFoundError("triangulation is not a node of this catalog");
  return *id;
}

std::vector<CanonicalCode> flip_neighbors(const Triangulation& t, bool mirror_mode) {
  std::vector<CanonicalCode> out;
  for (const Edge e : t.edges()) {
    if (check_flip(t, e) != FlipError::none) continue;
    auto r = flip(t, e);
    auto code = canonical_code(*r.triangulation, mirror_mode);
    if (std::find(out.begin(), out.end(), code) == out.end()) out.push_back(std::move(code));
  }
  return out;
}

FlipGraphCatalog enumerate(int n, const EnumerateOptions& options) {
  if (n < 4) throw std::invalid_argument("enumeration needs n >= 4");
  std::vector<CanonicalCode> codes;
  std::vector<std::vector<NodeId>> adjacency;
  std::unordered_map<CanonicalCode, NodeId, CanonicalCodeHash> index;

  codes.push_back(canonical_code(build_g2(n).base, options.mirror_mode));
  adjacency.emplace_back();
  index.emplace(codes.front(), 0);

  // Level-synchronous BFS: workers expand a whole level, then the results are
  // merged in frontier order so ids do not depend on the worker count.
  std::vector<NodeId> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::vector<CanonicalCode>> expanded(frontier.size());
    detail::parallel_for(frontier.size(), options.workers, [&](std::size_t i) {
      expanded[i] = flip_neighbors(decode(codes[frontier[i]]), options.mirror_mode);
    });
    std::vector<NodeId> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const NodeId from = frontier[i];
      for (auto& code : expanded[i]) {
        auto [it, fresh] = index.try_emplace(code, static_cast<NodeId>(codes.size()));
        if (fresh) {
          if (codes.size() >= options.max_nodes) {
            throw ResourceLimitError(codes.size(), frontier.size() - i + next.size());
          }
          codes.push_back(std::move(code));
          adjacency.emplace_back();
          next.push_back(it->second);
        }
        const NodeId to = it->second;
        if (to == from) continue;
        adjacency[from].push_back(to);
        adjacency[to].push_back(from);
      }
    }
    frontier = std::move(next);
  }

  // Canonical re-sort: ids become ranks of the codes.
  std::vector<NodeId> order(codes.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return codes[a] < codes[b]; });
  std::vector<NodeId> rank(codes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank[order[r]] = static_cast<NodeId>(r);

  FlipGraphCatalog catalog;
  catalog.n = n;
  catalog.mirror_mode = options.mirror_mode;
  catalog.seed = rank[0];
  catalog.nodes.resize(codes.size());
  catalog.adjacency.resize(codes.size());
  for (std::size_t old = 0; old < codes.size(); ++old) {
    auto& row = catalog.adjacency[rank[old]];
    for (const NodeId w : adjacency[old]) row.push_back(rank[w]);
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    catalog.nodes[rank[old]] = std::move(codes[old]);
  }
  return catalog;
}

std::vector<int> bfs_distances(const FlipGraphCatalog& catalog, NodeId source) {
  if (source >= catalog.node_count()) throw NodeNotFoundError("node id out of range");
  std::vector<int> dist(catalog.node_count(), -1);
  std::deque<NodeId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const NodeId x = queue.front();
    queue.pop_front();
    for (const NodeId y : catalog.adjacency[x]) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

int distance(const FlipGraphCatalog& catalog, NodeId a, NodeId b) {
  if (b >= catalog.node_count()) throw NodeNotFoundError("node id out of range");
  const int d = bfs_distances(catalog, a)[b];
  if (d < 0) throw DisconnectedError("nodes are in different components");
  return d;
}

int distance(const FlipGraphCatalog& catalog, const Triangulation& a, const Triangulation& b) {
  return distance(catalog, catalog.node_of(a), catalog.node_of(b));
}

DiameterResult diameter(const FlipGraphCatalog& catalog, int workers) {
  const std::size_t count = catalog.node_count();
  if (count == 0) throw NodeNotFoundError("empty catalog");
  std::vector<DiameterResult> per_source(count);
  std::vector<char> disconnected(count, 0);
  detail::parallel_for(count, workers, [&](std::size_t s) {
    const auto dist = bfs_distances(catalog, static_cast<NodeId>(s));
    DiameterResult best{0, static_cast<NodeId>(s), static_cast<NodeId>(s)};
    for (std::size_t t = 0; t < count; ++t) {
      if (dist[t] < 0) disconnected[s] = 1;
      if (dist[t] > best.diameter) best = {dist[t], static_cast<NodeId>(s), static_cast<NodeId>(t)};
    }
    per_source[s] = best;
  });
  if (std::find(disconnected.begin(), disconnected.end(), 1) != disconnected.end()) {
    throw DisconnectedError("flip graph catalog is disconnected");
  }
  DiameterResult best = per_source[0];
  for (const auto& r : per_source) {
    if (r.diameter > best.diameter) best = r;
  }
  return best;
}

}  // namespace flipgraph
