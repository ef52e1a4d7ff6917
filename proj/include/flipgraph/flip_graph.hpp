#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flipgraph/canonical.hpp"
#include "flipgraph/triangulation.hpp"

namespace flipgraph {

using NodeId = std::uint32_t;

/// Reachable component of the flip graph from the double-apex seed.
///
/// Nodes are sorted by canonical code, so ids are a function of the node set
/// alone; adjacency lists are sorted and never contain the node itself.
struct FlipGraphCatalog {
  int n = 0;
  bool mirror_mode = true;
  std::vector<CanonicalCode> nodes;
  std::vector<std::vector<NodeId>> adjacency;
  NodeId seed = 0;

  std::size_t node_count() const { return nodes.size(); }
  std::size_t edge_count() const;
  std::optional<NodeId> find(const CanonicalCode& code) const;
  NodeId node_of(const Triangulation& t) const;

  friend bool operator==(const FlipGraphCatalog&, const FlipGraphCatalog&) = default;
};

class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::size_t nodes_found, std::size_t frontier);
  std::size_t nodes_found() const { return nodes_found_; }
  std::size_t frontier() const { return frontier_; }

 private:
  std::size_t nodes_found_;
  std::size_t frontier_;
};

class NodeNotFoundError : public Error {
 public:
  using Error::Error;
};

class DisconnectedError : public Error {
 public:
  using Error::Error;
};

struct EnumerateOptions {
  bool mirror_mode = true;
  int workers = 1;
  std::size_t max_nodes = 2'000'000;
};

FlipGraphCatalog enumerate(int n, const EnumerateOptions& options = {});

/// Codes of all triangulations one valid flip away, deduplicated, in order of
/// first appearance over the edge list.
std::vector<CanonicalCode> flip_neighbors(const Triangulation& t, bool mirror_mode);

std::vector<int> bfs_distances(const FlipGraphCatalog& catalog, NodeId source);

int distance(const FlipGraphCatalog& catalog, NodeId a, NodeId b);
int distance(const FlipGraphCatalog& catalog, const Triangulation& a, const Triangulation& b);

struct DiameterResult {
  int diameter = 0;
  NodeId from = 0;
  NodeId to = 0;
};

/// Exact, by BFS from every node. Throws DisconnectedError.
DiameterResult diameter(const FlipGraphCatalog& catalog, int workers = 1);

// Catalog file v1; byte layout in docs/catalog_format.md.
class CatalogFormatError : public Error {
 public:
  enum class Kind { bad_magic, version_mismatch, truncated, checksum, corrupt, mode_mismatch, io };
  CatalogFormatError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

inline constexpr char kCatalogMagic[8] = {'F', 'L', 'I', 'P', 'C', 'A', 'T', '\0'};
inline constexpr std::uint32_t kCatalogVersion = 1;

std::string serialize_catalog(const FlipGraphCatalog& catalog);
/// expected_mirror, when set, must match the stored mode.
FlipGraphCatalog deserialize_catalog(const std::string& bytes,
                                     std::optional<bool> expected_mirror = std::nullopt);

void save_catalog(const FlipGraphCatalog& catalog, const std::string& path);
FlipGraphCatalog load_catalog(const std::string& path,
                              std::optional<bool> expected_mirror = std::nullopt);

}  // namespace flipgraph
